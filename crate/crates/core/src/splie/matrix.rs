use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactcore::linalg;
use crate::exactcore::Scalar;

/// Dense `2n × 2n` matrix over ℚ(√2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatF {
    n: usize,
    entries: Vec<Scalar>,
}

impl MatF {
    pub fn zero(n: usize) -> Self {
        MatF {
            n,
            entries: vec![Scalar::zero(); 4 * n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatF::zero(n);
        for i in 0..2 * n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Elementary matrix `E_{i,j}` (zero-based).
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        let mut m = MatF::zero(n);
        m.set(i, j, Scalar::one());
        m
    }

    /// The symplectic form matrix `J = ((0, I), (−I, 0))`.
    pub fn j(n: usize) -> Self {
        let mut m = MatF::zero(n);
        for i in 0..n {
            m.set(i, i + n, Scalar::one());
            m.set(i + n, i, -Scalar::one());
        }
        m
    }

    pub fn diag(values: &[Scalar]) -> Self {
        assert!(values.len() % 2 == 0, "diagonal of odd length");
        let mut m = MatF::zero(values.len() / 2);
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        if dim % 2 != 0 {
            return Err(Error::SizeMismatch(dim, dim + 1));
        }
        let mut m = MatF::zero(dim / 2);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::SizeMismatch(row.len(), dim));
            }
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        MatF::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
    }

    /// Half-dimension `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        let d = self.dim();
        self.entries[i * d + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> MatF {
        MatF {
            n: self.n,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    pub fn transpose(&self) -> MatF {
        let d = self.dim();
        let mut m = MatF::zero(self.n);
        for i in 0..d {
            for j in 0..d {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn trace(&self) -> Scalar {
        (0..self.dim()).map(|i| self.get(i, i)).sum()
    }

    fn same_size(&self, other: &MatF) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::SizeMismatch(self.n, other.n))
        }
    }

    pub fn try_mul(&self, other: &MatF) -> Result<MatF> {
        self.same_size(other)?;
        let d = self.dim();
        let mut m = MatF::zero(self.n);
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
                        m.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(m)
    }

    /// `ab − ba` with no membership checks.
    pub fn commutator(&self, other: &MatF) -> MatF {
        &(self * other) - &(other * self)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim(), "vector length");
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// Membership in sp(2n): `MᵀJ + JM = 0`.
    pub fn is_sp(&self) -> bool {
        let j = MatF::j(self.n);
        (&(&self.transpose() * &j) + &(&j * self)).is_zero()
    }

    pub fn rank(&self) -> usize {
        let d = self.dim();
        let rows: Vec<Vec<Scalar>> = (0..d)
            .map(|i| self.entries[i * d..(i + 1) * d].to_vec())
            .collect();
        linalg::rank(&rows)
    }

    pub fn pow(&self, e: u32) -> MatF {
        let mut acc = MatF::identity(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Characteristic polynomial `det(λI − M)` as coefficients `[c_0, …, c_{2n}]`
    /// of `λ^{2n}, λ^{2n−1}, …, 1` (so `c_0 = 1`), by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> Vec<Scalar> {
        let d = self.dim();
        let mut coeffs = vec![Scalar::one()];
        let mut m = MatF::zero(self.n);
        for k in 1..=d {
            // M_k = A·M_{k−1} + c_{k−1} I, c_k = −tr(A M_k)/k
            let mut mk = self * &m;
            let prev = coeffs[k - 1].clone();
            for i in 0..d {
                let idx = i * d + i;
                mk.entries[idx] += &prev;
            }
            let am = self * &mk;
            let ck = -(am.trace() * Scalar::frac(1, k as i64));
            coeffs.push(ck);
            m = mk;
        }
        coeffs
    }

    /// Nilpotency via the characteristic polynomial being `λ^{2n}`.
    pub fn is_nilpotent(&self) -> bool {
        self.char_poly().iter().skip(1).all(Zero::is_zero)
    }

    /// `rank(M^k)` for `k = 1, 2, …` until the rank stabilizes at zero or repeats.
    pub fn power_ranks(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut p = self.clone();
        loop {
            let r = p.rank();
            out.push(r);
            if r == 0 || out.len() > self.dim() || (out.len() >= 2 && out[out.len() - 2] == r) {
                break;
            }
            p = &p * self;
        }
        out
    }
}

impl<'a> Add<&'a MatF> for &'a MatF {
    type Output = MatF;
    fn add(self, rhs: &MatF) -> MatF {
        self.same_size(rhs).expect("matrix size");
        MatF {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a MatF> for &'a MatF {
    type Output = MatF;
    fn sub(self, rhs: &MatF) -> MatF {
        self.same_size(rhs).expect("matrix size");
        MatF {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a MatF> for &'a MatF {
    type Output = MatF;
    fn mul(self, rhs: &MatF) -> MatF {
        self.try_mul(rhs).expect("matrix size")
    }
}

impl Neg for &MatF {
    type Output = MatF;
    fn neg(self) -> MatF {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Debug for MatF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        writeln!(f, "MatF(n={}) [", self.n)?;
        for i in 0..d {
            let row: Vec<String> = (0..d).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A vector of the symplectic space `V = ℚ(√2)^{2n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticVector {
    n: usize,
    coords: Vec<Scalar>,
}

impl SymplecticVector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        assert!(coords.len() % 2 == 0, "odd-dimensional symplectic vector");
        SymplecticVector {
            n: coords.len() / 2,
            coords,
        }
    }

    pub fn zero(n: usize) -> Self {
        SymplecticVector::new(vec![Scalar::zero(); 2 * n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        SymplecticVector::new(v.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = SymplecticVector::zero(n);
        v.coords[i] = Scalar::one();
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        SymplecticVector::new(self.coords.iter().map(|v| v * c).collect())
    }

    pub fn add(&self, other: &SymplecticVector) -> Self {
        SymplecticVector::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    /// `ω(u, v) = uᵀ J v`.
    pub fn omega(&self, other: &SymplecticVector) -> Scalar {
        let n = self.n;
        (0..n)
            .map(|i| &self.coords[i] * &other.coords[i + n] - &self.coords[i + n] * &other.coords[i])
            .sum()
    }

    pub fn transform(&self, m: &MatF) -> Self {
        SymplecticVector::new(m.apply(&self.coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_is_symplectic_and_squares_to_minus_one() {
        let j = MatF::j(2);
        assert!(j.is_sp());
        assert_eq!(&j * &j, -&MatF::identity(2));
    }

    #[test]
    fn char_poly_of_diagonal() {
        let d = MatF::diag(&[1, -1, 2, -2].map(Scalar::from_int));
        // (λ−1)(λ+1)(λ−2)(λ+2) = λ⁴ − 5λ² + 4
        let cp = d.char_poly();
        let want: Vec<Scalar> = [1, 0, -5, 0, 4].into_iter().map(Scalar::from_int).collect();
        assert_eq!(cp, want);
        assert!(!d.is_nilpotent());
        assert!(MatF::elementary(1, 0, 1).is_nilpotent());
    }

    #[test]
    fn omega_is_antisymmetric_and_nondegenerate() {
        let n = 2;
        for i in 0..2 * n {
            for k in 0..2 * n {
                let u = SymplecticVector::basis(n, i);
                let v = SymplecticVector::basis(n, k);
                assert_eq!(u.omega(&v), -v.omega(&u));
            }
            let row_nonzero = (0..2 * n)
                .any(|k| !SymplecticVector::basis(n, i).omega(&SymplecticVector::basis(n, k)).is_zero());
            assert!(row_nonzero);
        }
    }
}
