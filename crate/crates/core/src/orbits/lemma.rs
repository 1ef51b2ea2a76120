use num_traits::Zero;

use super::sl2::sl2_complete;
use crate::error::{Error, Result};
use crate::exactcore::{linalg, Scalar};
use crate::sampling::Sampler;
use crate::splie::{raw_square, solve_ad, MatF, SymplecticVector};

fn combination(s: &mut Sampler, basis: &[Vec<Scalar>], dim: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    for b in basis {
        let c = Scalar::from_int(s.int(-3, 3));
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi += &(&c * bi);
        }
    }
    v
}

fn square_is_in_image(y: &MatF, v: Vec<Scalar>) -> bool {
    // [y, x] = −v² ⇔ [x, y] = v²
    solve_ad(y, &raw_square(&SymplecticVector::new(v))).is_some()
}

/// Checks on random vectors that `v²` lies in `[y, sp]` exactly when `v ∈ V₊`.
///
/// Positive trials draw `v` from `V₊`; negative trials add a nonzero
/// component from `V₀ ⊕ V₋`.
pub fn verify_sl2_square_lemma(y: &MatF, trials: usize, seed: u64) -> Result<bool> {
    let t = sl2_complete(y)?;
    let ws = t.weight_spaces()?;
    let dim = y.dim();
    let vplus: Vec<Vec<Scalar>> = ws.range(1..).flat_map(|(_, b)| b.clone()).collect();
    let rest: Vec<Vec<Scalar>> = ws.range(..1).flat_map(|(_, b)| b.clone()).collect();
    let mut s = Sampler::new(seed);
    if !square_is_in_image(y, vec![Scalar::zero(); dim]) {
        return Ok(false);
    }
    for _ in 0..trials {
        let v = combination(&mut s, &vplus, dim);
        if !square_is_in_image(y, v.clone()) {
            return Ok(false);
        }
        if rest.is_empty() {
            continue;
        }
        let w = loop {
            let w = combination(&mut s, &rest, dim);
            if w.iter().any(|c| !c.is_zero()) {
                break w;
            }
        };
        let mixed: Vec<Scalar> = v.iter().zip(&w).map(|(a, b)| a + b).collect();
        if square_is_in_image(y, mixed) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The irreducible sl2-module of dimension `d` in the basis `x_0, …, x_{d−1}`:
/// `e·x_i = x_{i+1}`, `f·x_j = j(d−j)·x_{j−1}`, `h·x_i = (2i − d + 1)·x_i`.
struct Irrep {
    offset: usize,
    dim: usize,
}

fn direct_sum_action(dims: &[usize]) -> (usize, Vec<Irrep>) {
    let mut offset = 0;
    let mut blocks = Vec::new();
    for &dim in dims {
        blocks.push(Irrep { offset, dim });
        offset += dim;
    }
    (offset, blocks)
}

/// `e`, `f`, `h` on `V = ⊕ V_{d}` as dense matrices (row = image coordinate).
fn module_matrices(dims: &[usize]) -> [Vec<Vec<Scalar>>; 3] {
    let (n, blocks) = direct_sum_action(dims);
    let mut e = vec![vec![Scalar::zero(); n]; n];
    let mut f = e.clone();
    let mut h = e.clone();
    for b in &blocks {
        let d = b.dim as i64;
        for i in 0..b.dim {
            let g = b.offset + i;
            if i + 1 < b.dim {
                e[g + 1][g] = Scalar::from_int(1);
            }
            if i > 0 {
                let j = i as i64;
                f[g - 1][g] = Scalar::from_int(j * (d - 1) - j * j + j);
            }
            h[g][g] = Scalar::from_int(2 * i as i64 - (d - 1));
        }
    }
    [e, f, h]
}

fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

fn is_sl2_action(dims: &[usize]) -> bool {
    let [e, f, h] = module_matrices(dims);
    let comm = |a: &[Vec<Scalar>], b: &[Vec<Scalar>]| -> Vec<Vec<Scalar>> {
        let (ab, ba) = (mat_mul(a, b), mat_mul(b, a));
        ab.iter()
            .zip(&ba)
            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
            .collect()
    };
    let scaled = |m: &[Vec<Scalar>], c: i64| -> Vec<Vec<Scalar>> {
        m.iter()
            .map(|r| r.iter().map(|x| x * &Scalar::from_int(c)).collect())
            .collect()
    };
    comm(&e, &f) == h && comm(&h, &e) == scaled(&e, 2) && comm(&h, &f) == scaled(&f, -2)
}

/// For the `k`-th basis vector `x_k` of the first summand of `V = ⊕ V_{d}`,
/// tests whether `x_k ⊗ x_k` lies in the image of `e ⊗ 1 + 1 ⊗ e` on `V ⊗ V`,
/// and returns whether that agrees with `x_k` having positive `h`-weight.
///
/// For nonpositive weight the non-membership is also certified by the
/// functional `x_i ⊗ x_j ↦ (−1)^i` on the first summand squared, which kills
/// the image on the relevant weight space.
pub fn sl2_lowest_coefficient_check(dims: &[usize], k: usize) -> Result<bool> {
    let first = *dims.first().ok_or(Error::IndexOutOfRange { index: k, dim: 0 })?;
    if dims.contains(&0) {
        return Err(Error::Parse("irreducible dimensions must be positive".into()));
    }
    if k >= first {
        return Err(Error::IndexOutOfRange { index: k, dim: first });
    }
    if !is_sl2_action(dims) {
        return Ok(false);
    }
    let (n, _) = direct_sum_action(dims);
    let [e, _, _] = module_matrices(dims);
    let nn = n * n;
    // column (a,b) of e⊗1 + 1⊗e: e(x_a)⊗x_b + x_a⊗e(x_b)
    let idx = |a: usize, b: usize| a * n + b;
    let mut rows = vec![vec![Scalar::zero(); nn]; nn];
    for a in 0..n {
        for b in 0..n {
            for r in 0..n {
                if !e[r][a].is_zero() {
                    rows[idx(r, b)][idx(a, b)] += &e[r][a];
                }
                if !e[r][b].is_zero() {
                    rows[idx(a, r)][idx(a, b)] += &e[r][b];
                }
            }
        }
    }
    let mut target = vec![Scalar::zero(); nn];
    target[idx(k, k)] = Scalar::from_int(1);
    let member = linalg::solve(&rows, &target, nn).is_some();
    let positive = 2 * k + 1 > first;
    if !positive {
        // weight space i + j = 2k of V_first ⊗ V_first receives e from i + j = 2k − 1
        let phi = |i: usize| Scalar::from_int(if i % 2 == 0 { 1 } else { -1 });
        let kills_image = (0..first).all(|i| {
            if 2 * k < 1 + i || 2 * k - 1 - i >= first {
                return true;
            }
            let j = 2 * k - 1 - i;
            let mut val = Scalar::zero();
            if i + 1 < first {
                val += phi(i + 1);
            }
            if j + 1 < first {
                val += phi(i);
            }
            val.is_zero()
        });
        if !kills_image {
            return Ok(false);
        }
    }
    Ok(member == positive)
}
