use std::collections::BTreeMap;

use num_traits::Zero;

use super::weyl::WeylElement;
use crate::error::{Error, Result};
use crate::exactcore::Scalar;

/// Element of the oscillator module: a finite sum of Laurent monomials
/// `x^e` with half-odd-integer exponents.
///
/// Exponents are stored doubled, so `x^{−1/2}` has key `−1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OscVector {
    n: usize,
    terms: BTreeMap<Vec<i64>, Scalar>,
}

impl OscVector {
    pub fn zero(n: usize) -> Self {
        OscVector {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The weight-zero vector `(x_1 ⋯ x_n)^{−1/2}`.
    pub fn v0(n: usize) -> Self {
        OscVector::monomial(vec![-1; n], Scalar::from_int(1)).expect("odd exponents")
    }

    /// `c · x^{doubled/2}`; every doubled exponent must be odd.
    pub fn monomial(doubled: Vec<i64>, c: Scalar) -> Result<Self> {
        if doubled.iter().any(|e| e.rem_euclid(2) != 1) {
            return Err(Error::Parse(format!("exponents {doubled:?} are not half-odd")));
        }
        let mut v = OscVector::zero(doubled.len());
        v.add_term(doubled, c);
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, doubled: &[i64]) -> Scalar {
        self.terms.get(doubled).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, doubled: Vec<i64>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(doubled.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&doubled);
        }
    }

    pub fn add(&self, other: &OscVector) -> OscVector {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> OscVector {
        let mut out = OscVector::zero(self.n);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// `Some(c)` when `self = c · other` (with `other` nonzero).
    pub fn ratio_to(&self, other: &OscVector) -> Option<Scalar> {
        let (k0, c0) = other.terms.iter().next()?;
        let c = self.coeff(k0).checked_div(c0).ok()?;
        (other.scale(&c) == *self).then_some(c)
    }
}

/// Action of `W_{2n}` on the oscillator module: `x_i` raises exponent `i` by
/// one, `y_i` differentiates.
pub fn osc_apply(w: &WeylElement, m: &OscVector) -> Result<OscVector> {
    if w.n() != m.n() {
        return Err(Error::SizeMismatch(w.n(), m.n()));
    }
    let mut out = OscVector::zero(m.n());
    for (wm, wc) in w.terms() {
        for (e, c) in m.terms() {
            let mut exps = e.clone();
            let mut coef = wc * c;
            // y's act first (rightmost), one power at a time
            for (i, &k) in wm.y.iter().enumerate() {
                for _ in 0..k {
                    coef = &coef * &Scalar::frac(exps[i], 2);
                    exps[i] -= 2;
                }
            }
            if coef.is_zero() {
                continue;
            }
            for (i, &k) in wm.x.iter().enumerate() {
                exps[i] += 2 * k as i64;
            }
            out.add_term(exps, coef);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_rule() {
        let v = OscVector::v0(1);
        let got = osc_apply(&WeylElement::y(1, 0), &v).unwrap();
        assert_eq!(got, OscVector::monomial(vec![-3], Scalar::frac(-1, 2)).unwrap());
    }

    #[test]
    fn euler_plus_half_kills_v0() {
        let x = WeylElement::x(1, 0);
        let y = WeylElement::y(1, 0);
        let op = &(&x * &y) + &WeylElement::scalar(1, Scalar::frac(1, 2));
        assert!(osc_apply(&op, &OscVector::v0(1)).unwrap().is_zero());
    }

    #[test]
    fn rejects_integral_exponents() {
        assert!(OscVector::monomial(vec![2], Scalar::from_int(1)).is_err());
        assert!(OscVector::monomial(vec![-5, 3], Scalar::from_int(1)).is_ok());
    }
}
