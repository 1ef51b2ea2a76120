//! Seeded sampling of small exact test data.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactcore::Scalar;
use crate::splie::{sp_basis, MatF, Root, RootDatumC, SymplecticVector};

pub const DEFAULT_SEED: u64 = 20240229;

/// Deterministic source of small integers and the objects built from them.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn nonzero_int(&mut self, bound: i64) -> i64 {
        loop {
            let v = self.int(-bound, bound);
            if v != 0 {
                return v;
            }
        }
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    /// `a + b√2` with small integer parts; `b = 0` half of the time.
    pub fn scalar(&mut self) -> Scalar {
        let a = Scalar::from_int(self.int(-3, 3));
        if self.rng.gen_bool(0.5) {
            a
        } else {
            a + Scalar::sqrt2() * Scalar::from_int(self.int(-2, 2))
        }
    }

    pub fn rational(&mut self) -> Scalar {
        Scalar::frac(self.int(-6, 6), self.int(1, 4))
    }

    pub fn sp_element(&mut self, n: usize) -> MatF {
        let mut acc = MatF::zero(n);
        for b in sp_basis(n) {
            let c = self.scalar();
            acc = &acc + &b.scale(&c);
        }
        acc
    }

    pub fn vector(&mut self, n: usize) -> SymplecticVector {
        SymplecticVector::new((0..2 * n).map(|_| Scalar::from_int(self.int(-3, 3))).collect())
    }

    pub fn root(&mut self, n: usize) -> Root {
        *RootDatumC::new(n).roots.choose(&mut self.rng).expect("n ≥ 1")
    }

    /// Product of `count` factors `I + t·e_α` with random roots and nonzero
    /// integers `t`, together with its inverse.
    pub fn unipotent(&mut self, n: usize, count: usize) -> (MatF, MatF) {
        let mut g = MatF::identity(n);
        let mut g_inv = MatF::identity(n);
        for _ in 0..count {
            let e = self.root(n).root_vector(n);
            let t = Scalar::from_int(self.nonzero_int(2));
            let step = &MatF::identity(n) + &e.scale(&t);
            let step_inv = &MatF::identity(n) - &e.scale(&t);
            g = &g * &step;
            g_inv = &step_inv * &g_inv;
        }
        (g, g_inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unipotent_inverse_and_symplectic() {
        let mut s = Sampler::new(7);
        for n in 1..=3 {
            let (g, gi) = s.unipotent(n, 3);
            assert_eq!(&g * &gi, MatF::identity(n));
            let j = MatF::j(n);
            assert_eq!(&(&g.transpose() * &j) * &g, j);
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let a: Vec<i64> = (0..10).map({
            let mut s = Sampler::new(3);
            move |_| s.int(-100, 100)
        }).collect();
        let b: Vec<i64> = (0..10).map({
            let mut s = Sampler::new(3);
            move |_| s.int(-100, 100)
        }).collect();
        assert_eq!(a, b);
    }
}
