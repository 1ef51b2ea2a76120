use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::polymat::{symbolic_square, PolyMat};
use crate::error::{Error, Result};
use crate::exactcore::{linalg, MultiPoly, Registry, Scalar};
use crate::splie::{sp_basis, sp_dim, trace_pair, MatF};
use crate::weylosc::{coordinate_registry, theta1_classical};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealKind {
    /// entries of `[x, y] + i²`
    I,
    /// `2 × 2` minors of `[x, y]`
    J,
    /// `2 × 2` minors of a generic element of sp(2n)
    K,
    /// even characteristic coefficients of `y`
    Nil,
}

impl FromStr for IdealKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" => Ok(IdealKind::I),
            "J" => Ok(IdealKind::J),
            "K" => Ok(IdealKind::K),
            "NIL" => Ok(IdealKind::Nil),
            _ => Err(Error::Parse(format!("unknown ideal kind `{s}`"))),
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IdealKind::I => "I",
            IdealKind::J => "J",
            IdealKind::K => "K",
            IdealKind::Nil => "NIL",
        };
        f.write_str(s)
    }
}

/// Largest `n` for which symbolic generators are built.
pub const MAX_SYMBOLIC_N: usize = 4;

fn coords_names(prefix: &str, count: usize) -> impl Iterator<Item = String> + '_ {
    (1..=count).map(move |k| format!("{prefix}{k}"))
}

/// Coordinates `X1..XD, Y1..YD, I1..I2n` on `g × g × V`.
pub fn xyi_registry(n: usize) -> Arc<Registry> {
    let d = sp_dim(n);
    Registry::new(
        coords_names("X", d)
            .chain(coords_names("Y", d))
            .chain(coords_names("I", 2 * n)),
    )
}

/// Coordinates `X1..XD, Y1..YD` on `g × g`.
pub fn xy_registry(n: usize) -> Arc<Registry> {
    let d = sp_dim(n);
    Registry::new(coords_names("X", d).chain(coords_names("Y", d)))
}

/// Coordinates `Y1..YD` on `g`.
pub fn y_registry(n: usize) -> Arc<Registry> {
    Registry::new(coords_names("Y", sp_dim(n)))
}

/// Characteristic coefficients `[c_0 = 1, c_1, …, c_{2n}]` of a polynomial
/// matrix, from the Newton identities `k·c_k = −Σ_{i=1}^{k} c_{k−i}·tr(M^i)`.
pub fn char_coeffs_symbolic(m: &PolyMat) -> Vec<MultiPoly> {
    let d = m.dim();
    let reg = Arc::clone(m.get(0, 0).registry());
    let mut power_sums = Vec::with_capacity(d);
    let mut pw = m.clone();
    for k in 1..=d {
        power_sums.push(pw.trace());
        if k < d {
            pw = pw.mul(m);
        }
    }
    let mut c = vec![MultiPoly::one(&reg)];
    for k in 1..=d {
        let mut acc = MultiPoly::zero(&reg);
        for i in 1..=k {
            acc = &acc + &(&c[k - i] * &power_sums[i - 1]);
        }
        c.push(acc.scale(&Scalar::frac(-1, k as i64)));
    }
    c
}

pub fn ideal_generators(kind: IdealKind, n: usize) -> Result<Vec<MultiPoly>> {
    if n == 0 || n > MAX_SYMBOLIC_N {
        return Err(Error::ResourceGuard(format!(
            "symbolic generators need 1 ≤ n ≤ {MAX_SYMBOLIC_N}"
        )));
    }
    let d = sp_dim(n);
    Ok(match kind {
        IdealKind::I => {
            let reg = xyi_registry(n);
            let x = PolyMat::generic_sp(&reg, n, 0);
            let y = PolyMat::generic_sp(&reg, n, d);
            let m = x.commutator(&y).add(&symbolic_square(&reg, n, 2 * d));
            sp_entries(&m, n)
        }
        IdealKind::J => {
            let reg = xy_registry(n);
            let x = PolyMat::generic_sp(&reg, n, 0);
            let y = PolyMat::generic_sp(&reg, n, d);
            x.commutator(&y).minors2()
        }
        IdealKind::K => PolyMat::generic_sp(&coordinate_registry(n), n, 0).minors2(),
        IdealKind::Nil => {
            let y = PolyMat::generic_sp(&y_registry(n), n, 0);
            char_coeffs_symbolic(&y).into_iter().skip(2).step_by(2).collect()
        }
    })
}

/// The entries of an sp-valued polynomial matrix at the positions read by
/// `sp_coords`; these are its coordinates in the elementary basis, i.e. its
/// pairings with the trace-dual basis.
fn sp_entries(m: &PolyMat, n: usize) -> Vec<MultiPoly> {
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

/// The basis dual to `sp_basis` under the trace form.
pub fn trace_dual_basis(n: usize) -> Vec<MatF> {
    let basis = sp_basis(n);
    let dim = basis.len();
    let gram: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| trace_pair(a, b).expect("same size")).collect())
        .collect();
    (0..dim)
        .map(|c| {
            let mut rhs = vec![Scalar::zero(); dim];
            rhs[c] = Scalar::one();
            let (coef, _) = linalg::solve(&gram, &rhs, dim).expect("trace form is nondegenerate");
            coef.iter()
                .zip(&basis)
                .filter(|(k, _)| !k.is_zero())
                .fold(MatF::zero(n), |acc, (k, b)| &acc + &b.scale(k))
        })
        .collect()
}

/// Substitutes the classical co-moment `ξ_c ↦ θ₁(B_c^*)` into every `2 × 2`
/// minor of the generic element `Σ ξ_c B_c` and checks that all vanish.
pub fn theta1_kills_minors(n: usize) -> Result<bool> {
    let images = trace_dual_basis(n)
        .iter()
        .map(theta1_classical)
        .collect::<Result<Vec<_>>>()?;
    for g in ideal_generators(IdealKind::K, n)? {
        if !g.substitute(&images)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Differentials of the even characteristic coefficients at `y`, one row per
/// coefficient, as linear functions of the `sp_basis` coordinates.
///
/// Uses `d tr(y^k)[b] = k·tr(y^{k−1} b)` in the Newton identities.
pub fn nil_differential(y: &MatF) -> Vec<Vec<Scalar>> {
    let n = y.n();
    let d = y.dim();
    let basis = sp_basis(n);
    let mut powers = vec![MatF::identity(n)];
    for _ in 1..=d {
        let next = powers.last().unwrap() * y;
        powers.push(next);
    }
    let p: Vec<Scalar> = (1..=d).map(|k| powers[k].trace()).collect();
    let mut c = vec![Scalar::one()];
    for k in 1..=d {
        let s: Scalar = (1..=k).map(|i| &c[k - i] * &p[i - 1]).sum();
        c.push(s * Scalar::frac(-1, k as i64));
    }
    let mut rows = Vec::new();
    for b in &basis {
        let dp: Vec<Scalar> = (1..=d)
            .map(|k| Scalar::from_int(k as i64) * trace_pair(&powers[k - 1], b).expect("same size"))
            .collect();
        let mut dc = vec![Scalar::zero()];
        for k in 1..=d {
            let s: Scalar = (1..=k)
                .map(|i| &dc[k - i] * &p[i - 1] + &c[k - i] * &dp[i - 1])
                .sum();
            dc.push(s * Scalar::frac(-1, k as i64));
        }
        rows.push(dc);
    }
    // rows are indexed by basis element; transpose and keep c_2, c_4, …
    (1..=n)
        .map(|k| rows.iter().map(|dc| dc[2 * k].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::Sampler;
    use crate::splie::sp_coords;

    #[test]
    fn generator_counts_and_degrees() {
        let i = ideal_generators(IdealKind::I, 1).unwrap();
        assert_eq!(i.len(), 3);
        assert!(i.iter().all(|g| g.is_homogeneous() && g.total_degree() == Some(2)));
        let j = ideal_generators(IdealKind::J, 1).unwrap();
        assert_eq!(j.len(), 1);
        assert_eq!(j[0].total_degree(), Some(4));
        for n in 1..=2 {
            assert_eq!(ideal_generators(IdealKind::I, n).unwrap().len(), sp_dim(n));
            let nil = ideal_generators(IdealKind::Nil, n).unwrap();
            assert_eq!(nil.len(), n);
            for (k, g) in nil.iter().enumerate() {
                assert!(g.is_homogeneous());
                assert_eq!(g.total_degree(), Some(2 * k as u32 + 2));
            }
            let k = ideal_generators(IdealKind::K, n).unwrap();
            assert!(k.iter().all(|g| g.total_degree() == Some(2)));
        }
        assert!("L".parse::<IdealKind>().is_err());
        assert!(ideal_generators(IdealKind::I, 5).is_err());
    }

    #[test]
    fn odd_char_coefficients_vanish_on_sp() {
        for n in 1..=2 {
            let y = PolyMat::generic_sp(&y_registry(n), n, 0);
            let c = char_coeffs_symbolic(&y);
            for k in (1..c.len()).step_by(2) {
                assert!(c[k].is_zero(), "c_{k}");
            }
        }
    }

    #[test]
    fn nil_for_sl2_is_determinant() {
        // y = a·h + b·e + c·f has char poly λ² − (a² + bc)
        let nil = ideal_generators(IdealKind::Nil, 1).unwrap();
        let reg = y_registry(1);
        let v = |i| MultiPoly::var(&reg, i);
        let want = (&(&v(0) * &v(0)) + &(&v(1) * &v(2))).scale(&-Scalar::one());
        assert_eq!(nil, vec![want]);
    }

    #[test]
    fn symbolic_matches_matrix_evaluation() {
        let mut s = Sampler::new(5);
        for n in 1..=2 {
            let i = ideal_generators(IdealKind::I, n).unwrap();
            let x = s.sp_element(n);
            let y = s.sp_element(n);
            let v = s.vector(n);
            let mut pt = sp_coords(&x);
            pt.extend(sp_coords(&y));
            pt.extend(v.coords().iter().cloned());
            let want = sp_coords(&(&x.commutator(&y) + &crate::splie::raw_square(&v)));
            let got: Vec<Scalar> = i.iter().map(|g| g.eval(&pt)).collect();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn nil_differential_matches_symbolic_partials() {
        let mut s = Sampler::new(9);
        for n in 1..=2 {
            let nil = ideal_generators(IdealKind::Nil, n).unwrap();
            let y = s.sp_element(n);
            let pt = sp_coords(&y);
            let want: Vec<Vec<Scalar>> = nil
                .iter()
                .map(|g| (0..sp_dim(n)).map(|c| g.partial(c).eval(&pt)).collect())
                .collect();
            assert_eq!(nil_differential(&y), want);
        }
    }

    #[test]
    fn dual_basis_pairs_to_identity() {
        let n = 2;
        let dual = trace_dual_basis(n);
        for (a, da) in sp_basis(n).iter().zip(&dual) {
            assert!(trace_pair(a, da).unwrap().is_one());
        }
    }

    #[test]
    fn minors_killed_small() {
        assert!(theta1_kills_minors(1).unwrap());
        assert!(theta1_kills_minors(2).unwrap());
    }
}
