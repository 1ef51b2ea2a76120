use std::collections::HashMap;

use super::linalg::{Echelon, SparseRow};
use super::poly::{monomials_of_degree, Monomial, MultiPoly};
use crate::error::{Error, Result};

/// Homogeneous generators together with the rank of their degree-`degree`
/// spanning matrix.
#[derive(Clone, Debug)]
pub struct GradedIdealBasis {
    pub generators: Vec<MultiPoly>,
    pub degree: u32,
    pub matrix_rank: usize,
}

impl GradedIdealBasis {
    pub fn compute(generators: Vec<MultiPoly>, degree: u32) -> Result<Self> {
        let matrix_rank = truncated_ideal_dim(&generators, degree)?;
        Ok(GradedIdealBasis {
            generators,
            degree,
            matrix_rank,
        })
    }

    /// Number of degree-`degree` monomials minus the ideal's dimension there.
    pub fn quotient_dim(&self) -> usize {
        let nvars = self.generators.first().map_or(0, MultiPoly::nvars);
        monomials_of_degree(nvars, self.degree).len() - self.matrix_rank
    }
}

/// Dimension of the degree-`d` component of the ideal spanned by `gens`.
pub fn truncated_ideal_dim(gens: &[MultiPoly], d: u32) -> Result<usize> {
    truncated_ideal_dim_filtered(gens, d, |_| true)
}

/// Like [`truncated_ideal_dim`], but only multipliers `m` with `keep(m)` are
/// used in the spanning set `{g·m}`.
///
/// With a filter that picks out a subring closed under the generators (for
/// instance monomials of even degree in some block of variables) this gives
/// the graded pieces of the ideal the generators span inside that subring.
pub fn truncated_ideal_dim_filtered(
    gens: &[MultiPoly],
    d: u32,
    keep: impl Fn(&Monomial) -> bool,
) -> Result<usize> {
    let Some(first) = gens.first() else {
        return Ok(0);
    };
    let nvars = first.nvars();
    let mut columns: HashMap<Monomial, usize> = HashMap::new();
    let mut echelon = Echelon::new();
    let mut multipliers: HashMap<u32, Vec<Monomial>> = HashMap::new();
    for g in gens {
        if g.registry() != first.registry() {
            return Err(Error::RegistryMismatch);
        }
        if !g.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
        let Some(gd) = g.total_degree() else {
            continue;
        };
        if gd > d {
            continue;
        }
        let ms = multipliers
            .entry(d - gd)
            .or_insert_with(|| monomials_of_degree(nvars, d - gd));
        for m in ms.iter().filter(|m| keep(m)) {
            let mut row = SparseRow::new();
            for (gm, c) in g.terms() {
                let prod = gm.mul(m);
                let next = columns.len();
                let col = *columns.entry(prod).or_insert(next);
                row.insert(col, c.clone());
            }
            echelon.insert(row);
        }
    }
    Ok(echelon.rank())
}
