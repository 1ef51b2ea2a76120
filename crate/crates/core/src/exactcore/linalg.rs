//! Exact linear algebra over ℚ(√2): sparse echelon forms, rank, kernels and
//! solutions of linear systems. Everything downstream (centralizers, Jacobians,
//! truncated ideals) reduces to these routines.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::scalar::Scalar;

pub type SparseRow = BTreeMap<usize, Scalar>;

/// Row echelon form built one row at a time.
///
/// Stored rows are kept fully reduced against each other and normalized to a
/// leading coefficient of one, so insertion is a single reduction pass.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = &usize> {
        self.pivots.keys()
    }

    /// Reduce a row against the stored pivots.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let cols: Vec<usize> = row.keys().copied().collect();
        for c in cols {
            let Some(coef) = row.get(&c).cloned() else {
                continue;
            };
            if let Some(prow) = self.pivots.get(&c) {
                axpy(&mut row, &-coef, prow);
            }
        }
        row
    }

    /// Insert a row; returns `true` when it raised the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = self.reduce(row);
        let Some((&lead, lc)) = row.iter().next() else {
            return false;
        };
        let inv = lc.inverse().expect("nonzero leading coefficient");
        for v in row.values_mut() {
            *v = &*v * &inv;
        }
        // keep stored rows reduced with respect to the new pivot
        for prow in self.pivots.values_mut() {
            if let Some(c) = prow.get(&lead).cloned() {
                axpy(prow, &-c, &row);
            }
        }
        self.pivots.insert(lead, row);
        true
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce(row.clone()).is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseRow)> {
        self.pivots.iter()
    }
}

/// `row += c · other`, dropping entries that cancel.
fn axpy(row: &mut SparseRow, c: &Scalar, other: &SparseRow) {
    if c.is_zero() {
        return;
    }
    for (&k, v) in other {
        let delta = c * v;
        let e = row.entry(k).or_default();
        *e += &delta;
        if e.is_zero() {
            row.remove(&k);
        }
    }
}

pub fn to_sparse(row: &[Scalar]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

pub fn rank_sparse(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    rank_sparse(rows.iter().map(|r| to_sparse(r)))
}

/// Basis of `{v : A v = 0}` for `A` with `ncols` columns.
pub fn kernel(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(to_sparse(r));
    }
    kernel_of(&e, ncols)
}

fn kernel_of(e: &Echelon, ncols: usize) -> Vec<Vec<Scalar>> {
    let pivots: BTreeMap<usize, &SparseRow> = e.rows().map(|(&c, r)| (c, r)).collect();
    (0..ncols)
        .filter(|c| !pivots.contains_key(c))
        .map(|free| {
            let mut v = vec![Scalar::zero(); ncols];
            v[free] = Scalar::one();
            for (&p, row) in &pivots {
                if let Some(c) = row.get(&free) {
                    v[p] = -c;
                }
            }
            v
        })
        .collect()
}

/// Solution set of `A x = b`: a particular solution and a kernel basis,
/// or `None` when the system is inconsistent.
pub fn solve(
    rows: &[Vec<Scalar>],
    rhs: &[Scalar],
    ncols: usize,
) -> Option<(Vec<Scalar>, Vec<Vec<Scalar>>)> {
    assert_eq!(rows.len(), rhs.len(), "right-hand side length");
    // augmented column `ncols` carries b
    let mut e = Echelon::new();
    for (r, b) in rows.iter().zip(rhs) {
        let mut s = to_sparse(r);
        if !b.is_zero() {
            s.insert(ncols, b.clone());
        }
        e.insert(s);
    }
    if e.pivot_columns().any(|&c| c == ncols) {
        return None;
    }
    let mut particular = vec![Scalar::zero(); ncols];
    for (&p, row) in e.rows() {
        if let Some(b) = row.get(&ncols) {
            particular[p] = b.clone();
        }
    }
    let mut plain = Echelon::new();
    for (_, row) in e.rows() {
        let mut r = row.clone();
        r.remove(&ncols);
        plain.insert(r);
    }
    Some((particular, kernel_of(&plain, ncols)))
}
