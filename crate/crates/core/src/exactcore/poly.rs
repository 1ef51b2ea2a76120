use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Ordered, immutable list of variable names shared by a family of polynomials.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Registry {
    names: Vec<String>,
}

impl Registry {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<Registry> {
        Arc::new(Registry {
            names: names.into_iter().map(Into::into).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn same_registry(a: &Arc<Registry>, b: &Arc<Registry>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Dense exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in `nvars` variables, in ascending grlex order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == nvars {
            cur[pos] = left;
            out.push(Monomial(cur.clone()));
            cur[pos] = 0;
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(nvars, pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    if nvars == 0 {
        return if d == 0 { vec![Monomial(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(nvars, 0, d, &mut vec![0; nvars], &mut out);
    out.sort();
    out
}

/// Sparse polynomial over ℚ(√2) with a named variable registry.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    registry: Arc<Registry>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(registry: &Arc<Registry>) -> Self {
        MultiPoly {
            registry: Arc::clone(registry),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(registry: &Arc<Registry>, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(registry);
        p.add_term(Monomial::one(registry.len()), c);
        p
    }

    pub fn one(registry: &Arc<Registry>) -> Self {
        MultiPoly::constant(registry, Scalar::one())
    }

    pub fn var(registry: &Arc<Registry>, i: usize) -> Self {
        MultiPoly::monomial(registry, Monomial::var(registry.len(), i), Scalar::one())
    }

    pub fn var_named(registry: &Arc<Registry>, name: &str) -> Option<Self> {
        registry.index_of(name).map(|i| MultiPoly::var(registry, i))
    }

    pub fn monomial(registry: &Arc<Registry>, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.0.len(), registry.len(), "exponent vector length");
        let mut p = MultiPoly::zero(registry);
        p.add_term(m, c);
        p
    }

    /// The linear form `Σ coeffs[i]·var_i`.
    pub fn linear(registry: &Arc<Registry>, coeffs: &[Scalar]) -> Self {
        let mut p = MultiPoly::zero(registry);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(registry.len(), i), c.clone());
        }
        p
    }

    pub fn registry(&self) -> &Arc<Registry> {
        &self.registry
    }

    pub fn nvars(&self) -> usize {
        self.registry.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    fn check(&self, other: &MultiPoly) -> Result<()> {
        if same_registry(&self.registry, &other.registry) {
            Ok(())
        } else {
            Err(Error::RegistryMismatch)
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = MultiPoly::zero(&self.registry);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.registry);
        }
        MultiPoly {
            registry: Arc::clone(&self.registry),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.registry);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.registry);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, c * &Scalar::from_int(e as i64));
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars(), "evaluation point size");
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc += t;
        }
        acc
    }

    /// Compose with `var_i ↦ images[i]`; all images share one target registry.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.nvars() {
            return Err(Error::SizeMismatch(images.len(), self.nvars()));
        }
        let target = match images.first() {
            Some(p) => Arc::clone(&p.registry),
            None => return Ok(self.clone()),
        };
        if images.iter().any(|p| !same_registry(&p.registry, &target)) {
            return Err(Error::RegistryMismatch);
        }
        // Cache powers of each image; products of small powers dominate here.
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![MultiPoly::one(&target), p.clone()])
            .collect();
        let mut out = MultiPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            for (m2, c2) in t.terms {
                out.add_term(m2, c2);
            }
        }
        Ok(out)
    }

    /// Exact quotient by a nonzero homogeneous linear form.
    ///
    /// Division runs in the lex order that puts the first variable occurring
    /// in `l` on top, so every step strictly lowers the leading monomial.
    pub fn divide_by_linear(&self, l: &MultiPoly) -> Result<MultiPoly> {
        self.check(l)?;
        if l.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if l.total_degree() != Some(1) || !l.is_homogeneous() {
            return Err(Error::NotLinear);
        }
        let nv = self.nvars();
        let (pivot, lead) = (0..nv)
            .find_map(|i| {
                let c = l.coeff(&Monomial::var(nv, i));
                (!c.is_zero()).then_some((i, c))
            })
            .ok_or(Error::DivisionByZero)?;
        let key = |m: &Monomial| {
            let mut k = Vec::with_capacity(nv);
            k.push(m.0[pivot]);
            k.extend(m.0.iter().enumerate().filter(|&(i, _)| i != pivot).map(|(_, &e)| e));
            k
        };
        let mut rem: BTreeMap<Vec<u32>, (Monomial, Scalar)> = self
            .terms
            .iter()
            .map(|(m, c)| (key(m), (m.clone(), c.clone())))
            .collect();
        let mut quotient = MultiPoly::zero(&self.registry);
        while let Some((_, (m, c))) = rem.pop_last() {
            if m.0[pivot] == 0 {
                return Err(Error::NotDivisible);
            }
            let mut qm = m.clone();
            qm.0[pivot] -= 1;
            let qc = c.checked_div(&lead)?;
            for (lm, lc) in l.terms() {
                if lm.0[pivot] == 1 {
                    continue; // cancels the popped leading term exactly
                }
                let pm = qm.mul(lm);
                let k = key(&pm);
                let slot = rem
                    .entry(k.clone())
                    .or_insert_with(|| (pm, Scalar::zero()));
                slot.1 -= &qc * lc;
                if slot.1.is_zero() {
                    rem.remove(&k);
                }
            }
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> MultiPoly {
        MultiPoly {
            registry: Arc::clone(&self.registry),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-express in a larger registry; `map[i]` is the target index of variable `i`.
    pub fn embed(&self, target: &Arc<Registry>, map: &[usize]) -> MultiPoly {
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] += k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }
}

impl<'a> std::ops::Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("registry mismatch")
    }
}

impl<'a> std::ops::Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("registry mismatch")
    }
}

impl<'a> std::ops::Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("registry mismatch")
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Scalar::one())
    }
}

/// Exact product of two polynomials over a shared registry.
pub fn poly_mul(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    p.try_mul(q)
}

/// Exact quotient `p / l` for a homogeneous linear `l`.
pub fn divide_by_linear(p: &MultiPoly, l: &MultiPoly) -> Result<MultiPoly> {
    p.divide_by_linear(l)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = &self.registry.names[i];
                    if e == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
