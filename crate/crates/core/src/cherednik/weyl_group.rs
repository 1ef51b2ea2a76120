use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactcore::{MultiPoly, Registry, Scalar};
use crate::splie::{Root, RootKind};

/// Coordinates `t1..tn` on `h` in the orthonormal `r`-basis.
pub fn h_registry(n: usize) -> Arc<Registry> {
    Registry::new((1..=n).map(|i| format!("t{i}")))
}

/// Element of `(ℤ/2)^n ⋊ S_n`, acting by `w·t_i = signs[i]·t_{perm[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPerm {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::SizeMismatch(n, signs.len()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Parse(format!("not a permutation: {perm:?}")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::Parse(format!("signs must be ±1: {signs:?}")));
        }
        Ok(SignedPerm { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// The reflection `s_α`.
    pub fn reflection(n: usize, root: Root) -> Self {
        let mut w = SignedPerm::identity(n);
        match root.kind {
            RootKind::Long(i) => w.signs[i] = -1,
            RootKind::Diff(i, j) => w.perm.swap(i, j),
            RootKind::Sum(i, j) => {
                w.perm.swap(i, j);
                w.signs[i] = -1;
                w.signs[j] = -1;
            }
        }
        w
    }

    /// `self ∘ other`, so that `(w₁w₂)·p = w₁·(w₂·p)`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        let signs = (0..self.n())
            .map(|i| other.signs[i] * self.signs[other.perm[i]])
            .collect();
        SignedPerm { perm, signs }
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        SignedPerm { perm, signs }
    }

    /// Action on a vector of `r`-coordinates (the same rule as on the `t_i`).
    pub fn act_on_vector(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::default(); v.len()];
        for i in 0..v.len() {
            let s = Scalar::from_int(self.signs[i] as i64);
            out[self.perm[i]] = &v[i] * &s;
        }
        out
    }
}

/// `w·p`, the algebra automorphism with `t_i ↦ signs[i]·t_{perm[i]}`.
pub fn w_act(w: &SignedPerm, p: &MultiPoly) -> Result<MultiPoly> {
    if w.n() != p.nvars() {
        return Err(Error::SizeMismatch(w.n(), p.nvars()));
    }
    let reg = p.registry();
    let images: Vec<MultiPoly> = (0..w.n())
        .map(|i| MultiPoly::var(reg, w.perm[i]).scale(&Scalar::from_int(w.signs[i] as i64)))
        .collect();
    if images.is_empty() {
        return Ok(p.clone());
    }
    p.substitute(&images)
}
