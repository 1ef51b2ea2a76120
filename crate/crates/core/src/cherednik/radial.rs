use std::collections::BTreeMap;

use num_traits::Zero;

use super::dunkl::Params;
use super::weyl_group::SignedPerm;
use crate::error::Result;
use crate::exactcore::Scalar;
use crate::splie::{Root, RootDatumC};
use crate::weylosc::weight_zero_scalar;

/// `Δ_h − Σ_{α>0} κ_α / α²`, with the two summands for `±α` merged into one
/// coefficient `κ_α` (they share the denominator `α² = (−α)²`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalRadialOperator {
    pub n: usize,
    pub has_laplacian: bool,
    pub inverse_square_coeffs: BTreeMap<Root, Scalar>,
}

impl FormalRadialOperator {
    /// Coefficients are constant on `W`-orbits of roots.
    pub fn is_w_invariant(&self) -> bool {
        let rd = RootDatumC::new(self.n);
        let coeff = |r: &Root| {
            let pos = if r.positive { *r } else { r.neg() };
            self.inverse_square_coeffs.get(&pos).cloned().unwrap_or_default()
        };
        rd.roots.iter().all(|r| {
            rd.roots.iter().all(|s| {
                let w = SignedPerm::reflection(self.n, *s);
                let image = rd
                    .find(&w.act_on_vector(&r.coeffs(self.n)))
                    .expect("W permutes the roots");
                coeff(&image) == coeff(r)
            })
        })
    }
}

fn collect(n: usize, mut f: impl FnMut(&Root) -> Result<Scalar>) -> Result<FormalRadialOperator> {
    let mut coeffs = BTreeMap::new();
    for r in RootDatumC::new(n).positive_roots() {
        let k = f(r)?;
        if !k.is_zero() {
            coeffs.insert(*r, k);
        }
    }
    Ok(FormalRadialOperator {
        n,
        has_laplacian: true,
        inverse_square_coeffs: coeffs,
    })
}

/// `L_c = Δ_h − ½ Σ_{α∈R} c(α)(c(α)+1)(α,α)/α²`; the merged coefficient of
/// each pair is `c(α)(c(α)+1)(α,α)`.
pub fn build_lc(c: &Params, n: usize) -> FormalRadialOperator {
    collect(n, |r| {
        let ca = c.c(r);
        Ok(ca * &(ca + &Scalar::from_int(1)) * r.norm_sq(n))
    })
    .expect("infallible")
}

/// `Δ_h − Σ_{α∈R} e_α e_{−α}/α²` with each `e_α e_{−α}` replaced by its
/// scalar on the weight-zero vector.
pub fn radial_operator(n: usize) -> Result<FormalRadialOperator> {
    collect(n, |r| Ok(weight_zero_scalar(n, *r)? + weight_zero_scalar(n, r.neg())?))
}

/// Compares the radial image with `L_c`.
pub fn radial_match_with(n: usize, c: &Params) -> Result<bool> {
    Ok(radial_operator(n)? == build_lc(c, n))
}

/// `radial_match_with(n, (−1/4, −1/2))`.
pub fn radial_match(n: usize) -> Result<bool> {
    radial_match_with(n, &Params::distinguished())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lc_coefficients() {
        let l = build_lc(&Params::distinguished(), 2);
        for (r, k) in &l.inverse_square_coeffs {
            let want = if r.is_long() { Scalar::frac(-3, 8) } else { Scalar::frac(-1, 4) };
            assert_eq!(k, &want);
        }
        assert_eq!(l.inverse_square_coeffs.len(), 4);
        assert!(l.is_w_invariant());
        assert!(build_lc(&Params::zero(), 3).inverse_square_coeffs.is_empty());
    }

    #[test]
    fn radial_parts_match() {
        for n in 1..=3 {
            assert!(radial_match(n).unwrap());
            assert!(!radial_match_with(n, &Params::zero()).unwrap());
        }
    }

    #[test]
    fn non_invariant_operator_detected() {
        let mut l = build_lc(&Params::distinguished(), 2);
        let first = *l.inverse_square_coeffs.keys().next().unwrap();
        l.inverse_square_coeffs.insert(first, Scalar::from_int(5));
        assert!(!l.is_w_invariant());
    }
}
