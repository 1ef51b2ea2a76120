use serde::Serialize;

use super::ideals::{ideal_generators, IdealKind};
use crate::error::{Error, Result};
use crate::exactcore::{monomials_of_degree, truncated_ideal_dim, truncated_ideal_dim_filtered};
use crate::splie::sp_dim;

pub const MAX_HILBERT_DEGREE: u32 = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertRow {
    pub degree: u32,
    pub left: usize,
    pub right: usize,
    pub equal: bool,
}

/// Graded dimensions of `k[g×g]/J` and of `(k[g×g] ⊗ k[V]_even)/(I ∩ even)`
/// in degrees `0..=dmax`, with every coordinate in degree one.
pub fn hilbert_compare(n: usize, dmax: u32) -> Result<Vec<HilbertRow>> {
    if n != 1 {
        return Err(Error::ResourceGuard("hilbert_compare supports n = 1 only".into()));
    }
    if dmax > MAX_HILBERT_DEGREE {
        return Err(Error::ResourceGuard(format!(
            "max degree {dmax} exceeds {MAX_HILBERT_DEGREE}"
        )));
    }
    let j = ideal_generators(IdealKind::J, n)?;
    let i = ideal_generators(IdealKind::I, n)?;
    let d = sp_dim(n);
    let left_vars = 2 * d;
    let right_vars = 2 * d + 2 * n;
    let even_i = |m: &crate::exactcore::Monomial| {
        m.exponents()[2 * d..].iter().sum::<u32>() % 2 == 0
    };
    (0..=dmax)
        .map(|deg| {
            let left = monomials_of_degree(left_vars, deg).len() - truncated_ideal_dim(&j, deg)?;
            let even_monomials = monomials_of_degree(right_vars, deg)
                .iter()
                .filter(|m| even_i(m))
                .count();
            let right = even_monomials - truncated_ideal_dim_filtered(&i, deg, even_i)?;
            Ok(HilbertRow {
                degree: deg,
                left,
                right,
                equal: left == right,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degrees() {
        let rows = hilbert_compare(1, 4).unwrap();
        let got: Vec<(usize, usize)> = rows.iter().map(|r| (r.left, r.right)).collect();
        assert_eq!(got, vec![(1, 1), (6, 6), (21, 21), (56, 56), (125, 125)]);
    }

    #[test]
    fn guards() {
        assert!(hilbert_compare(2, 2).is_err());
        assert!(hilbert_compare(1, 9).is_err());
    }
}
