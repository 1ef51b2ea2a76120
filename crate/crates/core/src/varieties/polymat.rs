use std::sync::Arc;

use num_traits::Zero;

use crate::exactcore::{MultiPoly, Registry, Scalar};
use crate::splie::{sp_basis, MatF};

/// A `2n × 2n` matrix of polynomials over one registry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMat {
    n: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMat {
    pub fn zero(reg: &Arc<Registry>, n: usize) -> Self {
        PolyMat {
            n,
            entries: vec![MultiPoly::zero(reg); 4 * n * n],
        }
    }

    /// `Σ_c var(offset + c)·B_c` over the basis of sp(2n).
    pub fn generic_sp(reg: &Arc<Registry>, n: usize, offset: usize) -> Self {
        let mut m = PolyMat::zero(reg, n);
        for (c, b) in sp_basis(n).iter().enumerate() {
            m.add_scaled(b, &MultiPoly::var(reg, offset + c));
        }
        m
    }

    /// Adds `p·b` for a constant matrix `b`.
    pub fn add_scaled(&mut self, b: &MatF, p: &MultiPoly) {
        for (e, c) in self.entries.iter_mut().zip(b.entries()) {
            if !c.is_zero() {
                *e = &*e + &p.scale(c);
            }
        }
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: MultiPoly) {
        let d = self.dim();
        self.entries[i * d + j] = p;
    }

    pub fn mul(&self, other: &PolyMat) -> PolyMat {
        let d = self.dim();
        let reg = self.entries[0].registry();
        let mut out = PolyMat::zero(reg, self.n);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * d + j;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &PolyMat) -> PolyMat {
        PolyMat {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &PolyMat) -> PolyMat {
        PolyMat {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn commutator(&self, other: &PolyMat) -> PolyMat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> MultiPoly {
        let reg = self.entries[0].registry();
        (0..self.dim()).fold(MultiPoly::zero(reg), |acc, i| &acc + self.get(i, i))
    }

    /// All `2 × 2` minors, rows `r1 < r2` and columns `c1 < c2`.
    pub fn minors2(&self) -> Vec<MultiPoly> {
        let d = self.dim();
        let mut out = Vec::new();
        for r1 in 0..d {
            for r2 in r1 + 1..d {
                for c1 in 0..d {
                    for c2 in c1 + 1..d {
                        let m = &(self.get(r1, c1) * self.get(r2, c2))
                            - &(self.get(r1, c2) * self.get(r2, c1));
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> MatF {
        let mut m = MatF::zero(self.n);
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, self.get(i, j).eval(point));
            }
        }
        m
    }
}

/// `v·vᵀ·J` for the vector of variables `offset, …, offset + 2n − 1`.
pub fn symbolic_square(reg: &Arc<Registry>, n: usize, offset: usize) -> PolyMat {
    let v = |k: usize| MultiPoly::var(reg, offset + k);
    let mut m = PolyMat::zero(reg, n);
    for i in 0..2 * n {
        for j in 0..2 * n {
            let w = if j < n {
                v(j + n).scale(&-Scalar::from_int(1))
            } else {
                v(j - n)
            };
            m.set(i, j, &v(i) * &w);
        }
    }
    m
}
