//! The symplectic Lie algebra sp(2n) in block coordinates: basis, bracket,
//! trace form, the squaring map `V → sp(V)`, root data and centralizers.
//!
//! Matrices act on `V = k^{2n}` with symplectic form `J = ((0, I), (−I, 0))`;
//! `M ∈ sp(2n)` iff its blocks satisfy `A = −Dᵀ`, `B = Bᵀ`, `C = Cᵀ`.

mod matrix;
mod roots;

pub use matrix::{MatF, SymplecticVector};
pub use roots::{Root, RootDatumC, RootKind};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactcore::linalg;
use crate::exactcore::Scalar;

/// Dimension `2n² + n` of sp(2n).
pub fn sp_dim(n: usize) -> usize {
    2 * n * n + n
}

/// Checked commutator: both arguments must be in sp(2n) of the same size.
pub fn bracket(a: &MatF, b: &MatF) -> Result<MatF> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    if !a.is_sp() || !b.is_sp() {
        return Err(Error::NotSymplectic);
    }
    Ok(a.commutator(b))
}

/// Elementary basis of sp(2n): the `n²` elements `E_{i,j} − E_{j+n,i+n}`,
/// then the symmetric `B`-block elements, then the symmetric `C`-block elements.
pub fn sp_basis(n: usize) -> Vec<MatF> {
    let mut out = Vec::with_capacity(sp_dim(n));
    for i in 0..n {
        for j in 0..n {
            let mut m = MatF::elementary(n, i, j);
            let prev = m.get(j + n, i + n).clone();
            m.set(j + n, i + n, prev - Scalar::from_int(1));
            out.push(m);
        }
    }
    for (row_off, col_off) in [(0, n), (n, 0)] {
        for i in 0..n {
            for j in i..n {
                let mut m = MatF::elementary(n, i + row_off, j + col_off);
                m.set(j + row_off, i + col_off, Scalar::from_int(1));
                out.push(m);
            }
        }
    }
    out
}

/// Coordinates of `m ∈ sp(2n)` in [`sp_basis`].
pub fn sp_coords(m: &MatF) -> Vec<Scalar> {
    let n = m.n();
    let mut out = Vec::with_capacity(sp_dim(n));
    for i in 0..n {
        for j in 0..n {
            out.push(m.get(i, j).clone());
        }
    }
    for (row_off, col_off) in [(0, n), (n, 0)] {
        for i in 0..n {
            for j in i..n {
                out.push(m.get(i + row_off, j + col_off).clone());
            }
        }
    }
    out
}

/// `Σ coords[b] · basis[b]`.
pub fn from_sp_coords(n: usize, coords: &[Scalar]) -> MatF {
    let mut acc = MatF::zero(n);
    for (c, b) in coords.iter().zip(sp_basis(n)) {
        if !c.is_zero() {
            acc = &acc + &b.scale(c);
        }
    }
    acc
}

/// The trace form `(a, b) = Tr(ab)`.
pub fn trace_pair(a: &MatF, b: &MatF) -> Result<Scalar> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    let d = a.dim();
    Ok((0..d)
        .flat_map(|i| (0..d).map(move |k| (i, k)))
        .map(|(i, k)| a.get(i, k) * b.get(k, i))
        .sum())
}

/// The square `v·vᵀ·J ∈ sp(2n)` of a vector.
///
/// The co-moment pairing uses `−½·raw_square(v)`, which satisfies
/// `Tr(−½·raw_square(v)·x) = ½·ω(x·v, v)` for every `x ∈ sp(2n)`.
pub fn raw_square(v: &SymplecticVector) -> MatF {
    let n = v.n();
    let c = v.coords();
    let mut m = MatF::zero(n);
    // (v vᵀ J)_{ij} = v_i (vᵀJ)_j,   (vᵀJ)_j = −v_{j+n} for j < n, v_{j−n} otherwise
    for i in 0..2 * n {
        if c[i].is_zero() {
            continue;
        }
        for j in 0..2 * n {
            let w = if j < n { -&c[j + n] } else { c[j - n].clone() };
            m.set(i, j, &c[i] * &w);
        }
    }
    m
}

/// Flattened images `[y, b]` for every basis element `b`; the rows of ad_y.
pub fn ad_images(y: &MatF) -> Vec<Vec<Scalar>> {
    sp_basis(y.n())
        .iter()
        .map(|b| sp_coords(&y.commutator(b)))
        .collect()
}

/// Dimension of the centralizer of `y` in sp(2n).
pub fn centralizer_dim(y: &MatF) -> Result<usize> {
    if !y.is_sp() {
        return Err(Error::NotSymplectic);
    }
    Ok(sp_dim(y.n()) - linalg::rank(&ad_images(y)))
}

/// Basis of the centralizer of `y`, as coordinate vectors in [`sp_basis`].
pub fn centralizer_basis(y: &MatF) -> Vec<Vec<Scalar>> {
    // columns of ad_y in coordinates: column b = coords([y, b])
    let cols = ad_images(y);
    let dim = cols.len();
    let rows: Vec<Vec<Scalar>> = (0..dim)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    linalg::kernel(&rows, dim)
}

/// Solve `[x, y] = target` for `x ∈ sp(2n)`: a particular solution and a
/// centralizer basis (both as coordinate vectors), or `None`.
pub fn solve_ad(y: &MatF, target: &MatF) -> Option<(Vec<Scalar>, Vec<Vec<Scalar>>)> {
    // [x, y] = −[y, x]; column b of the system is coords([b, y])
    let cols: Vec<Vec<Scalar>> = sp_basis(y.n())
        .iter()
        .map(|b| sp_coords(&b.commutator(y)))
        .collect();
    let dim = cols.len();
    let rows: Vec<Vec<Scalar>> = (0..dim)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    linalg::solve(&rows, &sp_coords(target), dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn e12() -> MatF {
        MatF::elementary(1, 0, 1)
    }

    fn e21() -> MatF {
        MatF::elementary(1, 1, 0)
    }

    #[test]
    fn sl2_relations() {
        let h = bracket(&e12(), &e21()).unwrap();
        assert_eq!(h, MatF::diag(&[Scalar::one(), -Scalar::one()]));
    }

    #[test]
    fn bracket_rejects_bad_input() {
        let not_sp = MatF::elementary(1, 0, 0);
        assert_eq!(bracket(&not_sp, &e12()), Err(Error::NotSymplectic));
        assert_eq!(bracket(&e12(), &MatF::zero(2)), Err(Error::SizeMismatch(1, 2)));
    }

    #[test]
    fn basis_sizes_and_membership() {
        assert_eq!(sp_basis(1).len(), 3);
        assert_eq!(sp_basis(2).len(), 10);
        for n in 1..=3 {
            let b = sp_basis(n);
            assert_eq!(b.len(), sp_dim(n));
            assert!(b.iter().all(MatF::is_sp));
            let flat: Vec<Vec<Scalar>> = b.iter().map(|m| m.entries().to_vec()).collect();
            assert_eq!(linalg::rank(&flat), sp_dim(n));
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let n = 2;
        for (k, b) in sp_basis(n).iter().enumerate() {
            let c = sp_coords(b);
            for (i, v) in c.iter().enumerate() {
                assert_eq!(v.is_one(), i == k);
                assert!(i == k || v.is_zero());
            }
        }
    }

    #[test]
    fn raw_square_examples() {
        assert!(raw_square(&SymplecticVector::zero(2)).is_zero());
        assert_eq!(raw_square(&SymplecticVector::from_ints(&[1, 0])), e12());
    }

    #[test]
    fn centralizer_examples() {
        assert_eq!(centralizer_dim(&MatF::zero(2)).unwrap(), 10);
        assert_eq!(centralizer_dim(&e12()).unwrap(), 1);
        // Jordan type (2,2): E_{1,3} + E_{2,4}
        let y = &MatF::elementary(2, 0, 2) + &MatF::elementary(2, 1, 3);
        assert_eq!(centralizer_dim(&y).unwrap(), 4);
        assert_eq!(
            centralizer_dim(&MatF::elementary(1, 0, 0)),
            Err(Error::NotSymplectic)
        );
    }
}
