use num_traits::Zero;

use super::matrix::MatF;
use crate::exactcore::Scalar;

/// Shape of a root of type C_n, indices zero-based with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootKind {
    /// `√2·r_i`
    Long(usize),
    /// `(r_i + r_j)/√2`
    Sum(usize, usize),
    /// `(r_i − r_j)/√2`
    Diff(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub kind: RootKind,
    pub positive: bool,
}

impl Root {
    pub fn new(kind: RootKind, positive: bool) -> Self {
        Root { kind, positive }
    }

    pub fn neg(self) -> Root {
        Root::new(self.kind, !self.positive)
    }

    pub fn is_long(&self) -> bool {
        matches!(self.kind, RootKind::Long(_))
    }

    fn sign(&self) -> Scalar {
        Scalar::from_int(if self.positive { 1 } else { -1 })
    }

    /// Coefficients in the orthonormal basis `r_1, …, r_n`.
    pub fn coeffs(&self, n: usize) -> Vec<Scalar> {
        let mut c = vec![Scalar::zero(); n];
        let s = self.sign();
        match self.kind {
            RootKind::Long(i) => c[i] = &s * &Scalar::sqrt2(),
            RootKind::Sum(i, j) => {
                c[i] = &s * &Scalar::inv_sqrt2();
                c[j] = &s * &Scalar::inv_sqrt2();
            }
            RootKind::Diff(i, j) => {
                c[i] = &s * &Scalar::inv_sqrt2();
                c[j] = -(&s * &Scalar::inv_sqrt2());
            }
        }
        c
    }

    /// `(α, α)`: 2 for long roots, 1 for short ones.
    pub fn norm_sq(&self, n: usize) -> Scalar {
        self.coeffs(n).iter().map(|c| c * c).sum()
    }

    /// The Cartan–Weyl root vector `e_α`, normalized so that `Tr(e_α e_{−α}) = 1`.
    pub fn root_vector(&self, n: usize) -> MatF {
        let mut m = MatF::zero(n);
        let h = Scalar::inv_sqrt2();
        match self.kind {
            RootKind::Long(i) => m.set(i, i + n, Scalar::from_int(1)),
            RootKind::Sum(i, j) => {
                m.set(i, j + n, h.clone());
                m.set(j, i + n, h);
            }
            RootKind::Diff(i, j) => {
                m.set(i, j, h.clone());
                m.set(j + n, i + n, -h);
            }
        }
        if self.positive {
            m
        } else {
            m.transpose()
        }
    }

    /// The element of the Cartan subalgebra dual to `α` under the trace form.
    pub fn cartan_element(&self, n: usize) -> MatF {
        let mut m = MatF::zero(n);
        for (k, c) in self.coeffs(n).iter().enumerate() {
            let v = c * &Scalar::inv_sqrt2();
            m.set(k, k, v.clone());
            m.set(k + n, k + n, -v);
        }
        m
    }
}

impl std::fmt::Display for Root {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = if self.positive { "" } else { "-" };
        match self.kind {
            RootKind::Long(i) => write!(f, "{sign}√2·r{}", i + 1),
            RootKind::Sum(i, j) => write!(f, "{sign}(r{}+r{})/√2", i + 1, j + 1),
            RootKind::Diff(i, j) => write!(f, "{sign}(r{}-r{})/√2", i + 1, j + 1),
        }
    }
}

/// Root datum of type C_n in the orthonormal `r`-coordinates.
#[derive(Clone, Debug)]
pub struct RootDatumC {
    pub n: usize,
    pub roots: Vec<Root>,
}

impl RootDatumC {
    pub fn new(n: usize) -> Self {
        let mut roots = Vec::with_capacity(2 * n * n);
        for positive in [true, false] {
            for i in 0..n {
                roots.push(Root::new(RootKind::Long(i), positive));
            }
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(Root::new(RootKind::Sum(i, j), positive));
                    roots.push(Root::new(RootKind::Diff(i, j), positive));
                }
            }
        }
        RootDatumC { n, roots }
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.positive)
    }

    /// `r_i = (E_{i,i} − E_{i+n,i+n})/√2`.
    pub fn rbasis(&self) -> Vec<MatF> {
        (0..self.n)
            .map(|i| {
                let mut m = MatF::zero(self.n);
                m.set(i, i, Scalar::inv_sqrt2());
                m.set(i + self.n, i + self.n, -Scalar::inv_sqrt2());
                m
            })
            .collect()
    }

    /// Finds the root with the given `r`-coordinates.
    pub fn find(&self, coeffs: &[Scalar]) -> Option<Root> {
        self.roots.iter().copied().find(|r| r.coeffs(self.n) == coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splie::{bracket, trace_pair};
    use num_traits::One;

    #[test]
    fn counts_and_lengths() {
        for n in 1..=4 {
            let rd = RootDatumC::new(n);
            assert_eq!(rd.roots.len(), 2 * n * n);
            assert_eq!(rd.roots.iter().filter(|r| r.is_long()).count(), 2 * n);
            for r in &rd.roots {
                let want = if r.is_long() { 2 } else { 1 };
                assert_eq!(r.norm_sq(n), Scalar::from_int(want));
            }
        }
    }

    #[test]
    fn root_vectors_are_normalized_and_symplectic() {
        for n in 1..=3 {
            for r in RootDatumC::new(n).roots {
                let e = r.root_vector(n);
                assert!(e.is_sp());
                assert!(trace_pair(&e, &r.neg().root_vector(n)).unwrap().is_one());
                assert_eq!(e.transpose(), r.neg().root_vector(n));
            }
        }
    }

    #[test]
    fn rbasis_is_orthonormal() {
        let rd = RootDatumC::new(3);
        let rb = rd.rbasis();
        for (i, a) in rb.iter().enumerate() {
            for (j, b) in rb.iter().enumerate() {
                let want = if i == j { Scalar::one() } else { Scalar::zero() };
                assert_eq!(trace_pair(a, b).unwrap(), want);
            }
        }
    }

    #[test]
    fn root_vectors_are_weight_vectors() {
        // [h, e_α] = (α, h)·e_α for h in the Cartan subalgebra
        let n = 3;
        let rd = RootDatumC::new(n);
        let h = MatF::diag(&[1, 5, -2, -1, -5, 2].map(Scalar::from_int));
        for r in &rd.roots {
            let e = r.root_vector(n);
            let w = trace_pair(&r.cartan_element(n), &h).unwrap();
            assert_eq!(bracket(&h, &e).unwrap(), e.scale(&w));
        }
    }
}
