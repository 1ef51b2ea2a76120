use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactcore::Scalar;

/// Normal-ordered monomial `x^a y^b` (all `x` to the left).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylMonomial {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

impl WeylMonomial {
    pub fn one(n: usize) -> Self {
        WeylMonomial {
            x: vec![0; n],
            y: vec![0; n],
        }
    }

    pub fn degree(&self) -> u32 {
        self.x.iter().chain(&self.y).sum()
    }
}

/// Element of the Weyl algebra `W_{2n}` with `[y_i, x_j] = δ_ij`, stored in
/// normal order.
#[derive(Clone, PartialEq, Eq)]
pub struct WeylElement {
    n: usize,
    terms: BTreeMap<WeylMonomial, Scalar>,
}

fn binomial(n: u32, k: u32) -> Scalar {
    let mut acc = Scalar::one();
    for i in 0..k {
        acc = acc * Scalar::frac((n - i) as i64, (i + 1) as i64);
    }
    acc
}

fn factorial(k: u32) -> Scalar {
    (1..=k as i64).map(Scalar::from_int).product()
}

impl WeylElement {
    pub fn zero(n: usize) -> Self {
        WeylElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        let mut w = WeylElement::zero(n);
        w.add_term(WeylMonomial::one(n), c);
        w
    }

    pub fn one(n: usize) -> Self {
        WeylElement::scalar(n, Scalar::one())
    }

    pub fn x(n: usize, i: usize) -> Self {
        let mut m = WeylMonomial::one(n);
        m.x[i] = 1;
        WeylElement::monomial(n, m, Scalar::one())
    }

    pub fn y(n: usize, i: usize) -> Self {
        let mut m = WeylMonomial::one(n);
        m.y[i] = 1;
        WeylElement::monomial(n, m, Scalar::one())
    }

    pub fn monomial(n: usize, m: WeylMonomial, c: Scalar) -> Self {
        assert!(m.x.len() == n && m.y.len() == n, "monomial size");
        let mut w = WeylElement::zero(n);
        w.add_term(m, c);
        w
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &WeylMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: WeylMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Every term has even total degree.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.degree() % 2 == 0)
    }

    /// Total degree in the generators; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(WeylMonomial::degree).max()
    }

    pub fn scale(&self, c: &Scalar) -> WeylElement {
        let mut out = WeylElement::zero(self.n);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    fn check(&self, other: &WeylElement) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::SizeMismatch(self.n, other.n))
        }
    }

    pub fn try_add(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &WeylElement) -> Result<WeylElement> {
        self.try_add(&other.scale(&-Scalar::one()))
    }

    /// Normal-ordered product.
    pub fn try_mul(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check(other)?;
        let mut out = WeylElement::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                mul_monomials(m1, m2, &c, &mut out);
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &WeylElement) -> Result<WeylElement> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }
}

/// Accumulates `c · (x^a y^b)(x^c y^d)` into `out`.
///
/// Per index, `y^b x^c = Σ_k C(b,k) C(c,k) k! x^{c−k} y^{b−k}`; distinct
/// indices commute, so the product is a sum over contraction vectors `k`.
fn mul_monomials(m1: &WeylMonomial, m2: &WeylMonomial, c: &Scalar, out: &mut WeylElement) {
    let n = m1.x.len();
    // per-index contraction options: (k, coefficient)
    let options: Vec<Vec<(u32, Scalar)>> = (0..n)
        .map(|i| {
            let (b, cc) = (m1.y[i], m2.x[i]);
            (0..=b.min(cc))
                .map(|k| (k, binomial(b, k) * binomial(cc, k) * factorial(k)))
                .collect()
        })
        .collect();
    let mut idx = vec![0usize; n];
    loop {
        let mut coef = c.clone();
        let mut m = WeylMonomial::one(n);
        for i in 0..n {
            let (k, ref f) = options[i][idx[i]];
            coef = &coef * f;
            m.x[i] = m1.x[i] + m2.x[i] - k;
            m.y[i] = m1.y[i] + m2.y[i] - k;
        }
        out.add_term(m, coef);
        // odometer over the contraction vector
        let mut pos = 0;
        loop {
            if pos == n {
                return;
            }
            idx[pos] += 1;
            if idx[pos] < options[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Normal-ordered product `u·v`.
pub fn weyl_mul(u: &WeylElement, v: &WeylElement) -> Result<WeylElement> {
    u.try_mul(v)
}

impl<'a> std::ops::Add<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: &WeylElement) -> WeylElement {
        self.try_add(rhs).expect("Weyl algebra size")
    }
}

impl<'a> std::ops::Sub<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        self.try_sub(rhs).expect("Weyl algebra size")
    }
}

impl<'a> std::ops::Mul<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        self.try_mul(rhs).expect("Weyl algebra size")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mut factors = Vec::new();
                for (name, exps) in [("x", &m.x), ("y", &m.y)] {
                    for (i, &e) in exps.iter().enumerate() {
                        match e {
                            0 => {}
                            1 => factors.push(format!("{name}{}", i + 1)),
                            _ => factors.push(format!("{name}{}^{e}", i + 1)),
                        }
                    }
                }
                if factors.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", factors.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
