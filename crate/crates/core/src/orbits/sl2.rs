use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactcore::{linalg, Scalar};
use crate::splie::{from_sp_coords, sp_basis, sp_coords, MatF};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: MatF,
    pub f: MatF,
    pub h: MatF,
}

/// Rows of the linear system whose columns are `images[b]`.
fn columns_to_rows(images: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let nrows = images.first().map_or(0, Vec::len);
    (0..nrows)
        .map(|r| images.iter().map(|c| c[r].clone()).collect())
        .collect()
}

fn off_diagonal(m: &MatF) -> Vec<Scalar> {
    let d = m.dim();
    (0..d)
        .flat_map(|i| (0..d).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| m.get(i, j).clone())
        .collect()
}

/// `h = [e, z]` with `[h, e] = 2e`; first with `h` diagonal, then without.
fn find_h(e: &MatF) -> Option<MatF> {
    let n = e.n();
    let basis = sp_basis(n);
    let target: Vec<Scalar> = sp_coords(&e.scale(&Scalar::from_int(2)));
    for diagonal in [true, false] {
        let images: Vec<Vec<Scalar>> = basis
            .iter()
            .map(|b| {
                let h = e.commutator(b);
                let mut col = sp_coords(&h.commutator(e));
                if diagonal {
                    col.extend(off_diagonal(&h));
                }
                col
            })
            .collect();
        let mut rhs = target.clone();
        if diagonal {
            rhs.resize(images[0].len(), Scalar::zero());
        }
        if let Some((z, _)) = linalg::solve(&columns_to_rows(&images), &rhs, basis.len()) {
            return Some(e.commutator(&from_sp_coords(n, &z)));
        }
    }
    None
}

/// Completes a nilpotent `e ∈ sp(2n)` to an sl2-triple by exact linear solves.
pub fn sl2_complete(e: &MatF) -> Result<Sl2Triple> {
    if !e.is_sp() {
        return Err(Error::NotSymplectic);
    }
    let n = e.n();
    if e.is_zero() {
        let z = MatF::zero(n);
        return Ok(Sl2Triple {
            e: z.clone(),
            f: z.clone(),
            h: z,
        });
    }
    if !e.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let h = find_h(e).ok_or_else(|| Error::Infeasible("no h with [h,e]=2e in [e,sp]".into()))?;
    // [e, f] = h and [h, f] + 2f = 0
    let basis = sp_basis(n);
    let two = Scalar::from_int(2);
    let images: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|b| {
            let mut col = sp_coords(&e.commutator(b));
            let hb = &h.commutator(b) + &b.scale(&two);
            col.extend(sp_coords(&hb));
            col
        })
        .collect();
    let mut rhs = sp_coords(&h);
    rhs.resize(images[0].len(), Scalar::zero());
    let (fc, _) = linalg::solve(&columns_to_rows(&images), &rhs, basis.len())
        .ok_or_else(|| Error::Infeasible("no f completing the triple".into()))?;
    Ok(Sl2Triple {
        e: e.clone(),
        f: from_sp_coords(n, &fc),
        h,
    })
}

impl Sl2Triple {
    pub fn satisfies_relations(&self) -> bool {
        let two = Scalar::from_int(2);
        self.e.is_sp()
            && self.f.is_sp()
            && self.h.is_sp()
            && self.h.commutator(&self.e) == self.e.scale(&two)
            && self.h.commutator(&self.f) == self.f.scale(&-two)
            && self.e.commutator(&self.f) == self.h
    }

    /// Integer eigenspaces of `h` on `V`, as bases of column vectors.
    pub fn weight_spaces(&self) -> Result<BTreeMap<i64, Vec<Vec<Scalar>>>> {
        eigenspaces(&self.h)
    }

    /// Basis of `V₊`, the sum of the positive eigenspaces of `h`.
    pub fn vplus(&self) -> Result<Vec<Vec<Scalar>>> {
        Ok(self
            .weight_spaces()?
            .into_iter()
            .filter(|(k, _)| *k > 0)
            .flat_map(|(_, b)| b)
            .collect())
    }

    /// `(dim V₊, dim V₀, dim V₋)`.
    pub fn weight_split(&self) -> Result<(usize, usize, usize)> {
        let ws = self.weight_spaces()?;
        let count = |pred: fn(i64) -> bool| {
            ws.iter()
                .filter(|(k, _)| pred(**k))
                .map(|(_, b)| b.len())
                .sum::<usize>()
        };
        Ok((count(|k| k > 0), count(|k| k == 0), count(|k| k < 0)))
    }
}

/// Eigenspaces of `h` for integer eigenvalues; fails unless they span `V`.
pub fn eigenspaces(h: &MatF) -> Result<BTreeMap<i64, Vec<Vec<Scalar>>>> {
    let d = h.dim();
    let mut out = BTreeMap::new();
    let mut total = 0;
    for k in -(d as i64)..=(d as i64) {
        let rows: Vec<Vec<Scalar>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let v = h.get(i, j).clone();
                        if i == j {
                            v - Scalar::from_int(k)
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        let ker = linalg::kernel(&rows, d);
        if !ker.is_empty() {
            total += ker.len();
            out.insert(k, ker);
        }
    }
    if total != d {
        return Err(Error::Infeasible("h is not diagonalizable over the integers".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::{enum_partitions, nilpotent_rep, Partition};
    use crate::sampling::Sampler;

    #[test]
    fn standard_sl2() {
        let t = sl2_complete(&MatF::elementary(1, 0, 1)).unwrap();
        assert_eq!(t.h, MatF::diag(&[Scalar::from_int(1), Scalar::from_int(-1)]));
        assert_eq!(t.f, MatF::elementary(1, 1, 0));
        let z = sl2_complete(&MatF::zero(2)).unwrap();
        assert!(z.e.is_zero() && z.f.is_zero() && z.h.is_zero());
    }

    #[test]
    fn regular_in_sp4_has_weights_3_1() {
        let lambda: Partition = "(4)".parse().unwrap();
        let t = sl2_complete(&nilpotent_rep(&lambda).unwrap()).unwrap();
        assert!(t.satisfies_relations());
        let ws: Vec<i64> = t.weight_spaces().unwrap().keys().copied().collect();
        assert_eq!(ws, vec![-3, -1, 1, 3]);
    }

    #[test]
    fn triples_for_all_representatives() {
        for n in 1..=4 {
            for lambda in enum_partitions(n).0 {
                let t = sl2_complete(&nilpotent_rep(&lambda).unwrap()).unwrap();
                assert!(t.satisfies_relations(), "{lambda}");
                let d = t.h.dim();
                for i in 0..d {
                    for j in 0..d {
                        assert!(i == j || t.h.get(i, j).is_zero());
                    }
                    assert!(t.h.get(i, i).to_integer().is_some());
                }
                let (p, _, m) = t.weight_split().unwrap();
                assert_eq!(p, m);
            }
        }
    }

    #[test]
    fn conjugated_representatives() {
        let mut s = Sampler::new(11);
        for lambda in enum_partitions(2).0 {
            let y = nilpotent_rep(&lambda).unwrap();
            let (g, gi) = s.unipotent(2, 3);
            let e = &(&g * &y) * &gi;
            let t = sl2_complete(&e).unwrap();
            assert!(t.satisfies_relations(), "{lambda}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(sl2_complete(&MatF::elementary(1, 0, 0)), Err(Error::NotSymplectic));
        let h = MatF::diag(&[Scalar::from_int(1), Scalar::from_int(-1)]);
        assert_eq!(sl2_complete(&h), Err(Error::NotNilpotent));
    }
}
