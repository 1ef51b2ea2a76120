use num_traits::Zero;
use serde::Serialize;

use super::ideals::{ideal_generators, nil_differential, IdealKind};
use crate::error::{Error, Result};
use crate::exactcore::{linalg, Scalar};
use crate::orbits::{nilpotent_rep, sl2_complete, Partition};
use crate::sampling::Sampler;
use crate::splie::{
    from_sp_coords, raw_square, solve_ad, sp_basis, sp_coords, sp_dim, trace_pair, MatF,
    SymplecticVector,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemePoint {
    pub x: MatF,
    pub y: MatF,
    pub i: SymplecticVector,
}

impl SchemePoint {
    pub fn n(&self) -> usize {
        self.y.n()
    }

    /// `[sp_coords(x), sp_coords(y), i]`, the point in the coordinates of
    /// the symbolic generators.
    pub fn coordinates(&self) -> Vec<Scalar> {
        let mut pt = sp_coords(&self.x);
        pt.extend(sp_coords(&self.y));
        pt.extend(self.i.coords().iter().cloned());
        pt
    }

    pub fn is_on_x(&self) -> Result<bool> {
        Ok(moment2(self)?.is_zero())
    }

    pub fn is_on_xnil(&self) -> Result<bool> {
        Ok(self.is_on_x()? && self.y.is_nilpotent())
    }

    /// `(g x g⁻¹, g y g⁻¹, g i)`.
    pub fn conjugate(&self, g: &MatF, g_inv: &MatF) -> SchemePoint {
        SchemePoint {
            x: &(g * &self.x) * g_inv,
            y: &(g * &self.y) * g_inv,
            i: self.i.transform(g),
        }
    }
}

/// The moment map `(x, y, i) ↦ [x, y] + i²`, with `i² = i·iᵀ·J`.
pub fn moment2(p: &SchemePoint) -> Result<MatF> {
    let n = p.x.n();
    if p.y.n() != n {
        return Err(Error::SizeMismatch(n, p.y.n()));
    }
    if p.i.n() != n {
        return Err(Error::SizeMismatch(n, p.i.n()));
    }
    Ok(&p.x.commutator(&p.y) + &raw_square(&p.i))
}

fn random_combination(s: &mut Sampler, basis: &[Vec<Scalar>], len: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); len];
    for b in basis {
        let c = Scalar::from_int(s.int(-2, 2));
        if c.is_zero() {
            continue;
        }
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi += &(&c * bi);
        }
    }
    v
}

/// A point of `X^nil` over the orbit of type `λ ∈ 𝒫_n`: the representative
/// conjugated by a random unipotent, a nonzero random `i` from `V₊`, and `x`
/// solving `[x, y] = −i²` plus a random centralizer element.
pub fn sample_xnil_point(lambda: &Partition, seed: u64) -> Result<SchemePoint> {
    if !lambda.is_even() {
        return Err(Error::NotEven(lambda.to_string()));
    }
    let y0 = nilpotent_rep(lambda)?;
    let n = y0.n();
    let vplus = sl2_complete(&y0)?.vplus()?;
    let mut s = Sampler::new(seed);
    let i0 = loop {
        let v = random_combination(&mut s, &vplus, 2 * n);
        if v.iter().any(|c| !c.is_zero()) {
            break SymplecticVector::new(v);
        }
    };
    let count = 1 + s.index(3);
    let (g, g_inv) = s.unipotent(n, count);
    let y = &(&g * &y0) * &g_inv;
    let i = i0.transform(&g);
    let target = raw_square(&i).scale(&-Scalar::from_int(1));
    let (x0, centralizer) = solve_ad(&y, &target)
        .ok_or_else(|| Error::Infeasible(format!("no x for {lambda} with i in V+")))?;
    let z = random_combination(&mut s, &centralizer, x0.len());
    let xc: Vec<Scalar> = x0.iter().zip(&z).map(|(a, b)| a + b).collect();
    let p = SchemePoint {
        x: from_sp_coords(n, &xc),
        y,
        i,
    };
    debug_assert!(p.is_on_xnil().unwrap_or(false));
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentReport {
    pub jacobian_rank: usize,
    pub tangent_dim: usize,
    pub isotropic: bool,
    pub smooth: bool,
}

/// A tangent vector `(a, b, u)` of `g × g × V` in the coordinates of
/// [`SchemePoint::coordinates`].
fn split_tangent(n: usize, t: &[Scalar]) -> (MatF, MatF, SymplecticVector) {
    let d = sp_dim(n);
    (
        from_sp_coords(n, &t[..d]),
        from_sp_coords(n, &t[d..2 * d]),
        SymplecticVector::new(t[2 * d..].to_vec()),
    )
}

/// `ω₁((a₁,b₁),(a₂,b₂)) = Tr(a₁b₂) − Tr(a₂b₁)`.
fn omega1(t1: &(MatF, MatF, SymplecticVector), t2: &(MatF, MatF, SymplecticVector)) -> Scalar {
    trace_pair(&t1.0, &t2.1).expect("same size") - trace_pair(&t2.0, &t1.1).expect("same size")
}

/// `ω = ω₁ + ω₂` with `ω₂(u₁, u₂) = u₁ᵀ J u₂`.
pub fn omega(n: usize, t1: &[Scalar], t2: &[Scalar]) -> Scalar {
    let (a, b) = (split_tangent(n, t1), split_tangent(n, t2));
    omega1(&a, &b) + a.2.omega(&b.2)
}

/// `ω₁ − 2ω₂`, the form whose moment map is `[x, y] + i·iᵀ·J`.
///
/// For `z ∈ sp` the vector field `(x, y, i) ↦ ([z,x], [z,y], z·i)` satisfies
/// `ι ω₁ = d Tr(z[x,y])` and `ι ω₂ = −½ d Tr(z·i·iᵀ·J)`, so rescaling the
/// `V`-factor by `−2` makes this normalization of `i²` Hamiltonian.
pub fn omega_moment(n: usize, t1: &[Scalar], t2: &[Scalar]) -> Scalar {
    let (a, b) = (split_tangent(n, t1), split_tangent(n, t2));
    omega1(&a, &b) - Scalar::from_int(2) * a.2.omega(&b.2)
}

/// Exact Jacobian of the `I` and `NIL` equations at `p`, one row per equation.
pub fn jacobian(p: &SchemePoint) -> Result<Vec<Vec<Scalar>>> {
    let n = p.n();
    let d = sp_dim(n);
    let pt = p.coordinates();
    let mut rows: Vec<Vec<Scalar>> = ideal_generators(IdealKind::I, n)?
        .iter()
        .map(|g| (0..pt.len()).map(|v| g.partial(v).eval(&pt)).collect())
        .collect();
    for r in nil_differential(&p.y) {
        let mut row = vec![Scalar::zero(); pt.len()];
        row[d..2 * d].clone_from_slice(&r);
        rows.push(row);
    }
    Ok(rows)
}

/// Rank of the Jacobian of `I ∪ NIL` at `p` and isotropy of its kernel for
/// [`omega_moment`].
pub fn lagrangian_check(p: &SchemePoint) -> Result<TangentReport> {
    if !p.is_on_xnil()? {
        return Err(Error::NotOnScheme);
    }
    let n = p.n();
    let ambient = 2 * sp_dim(n) + 2 * n;
    let rows = jacobian(p)?;
    let jacobian_rank = linalg::rank(&rows);
    let kernel = linalg::kernel(&rows, ambient);
    let isotropic = kernel.iter().enumerate().all(|(k, t1)| {
        kernel[k + 1..].iter().all(|t2| omega_moment(n, t1, t2).is_zero())
    });
    Ok(TangentReport {
        jacobian_rank,
        tangent_dim: ambient - jacobian_rank,
        isotropic,
        smooth: jacobian_rank == sp_dim(n) + n,
    })
}

/// Tangent space of the reduced component through a sampled point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentTangent {
    pub dim: usize,
    pub isotropic: bool,
    /// every spanning vector lies in the kernel of the Jacobian
    pub in_zariski_tangent: bool,
}

/// Spans the tangent space of the reduced component at `p` by the orbit
/// directions `([b,x], [b,y], b·i)`, the centralizer directions `(z, 0, 0)`
/// and the `V₊`-directions `(δx, 0, w)` with `[δx, y] = −(w iᵀ + i wᵀ)J`.
pub fn component_tangent_basis(p: &SchemePoint) -> Result<Vec<Vec<Scalar>>> {
    if !p.is_on_xnil()? {
        return Err(Error::NotOnScheme);
    }
    let n = p.n();
    let flatten = |a: &MatF, b: &MatF, u: &[Scalar]| -> Vec<Scalar> {
        let mut t = sp_coords(a);
        t.extend(sp_coords(b));
        t.extend(u.iter().cloned());
        t
    };
    let zero_v = vec![Scalar::zero(); 2 * n];
    let mut span = Vec::new();
    for b in sp_basis(n) {
        let bi = p.i.transform(&b);
        span.push(flatten(&b.commutator(&p.x), &b.commutator(&p.y), bi.coords()));
    }
    let (_, centralizer) = solve_ad(&p.y, &MatF::zero(n)).expect("homogeneous system");
    for z in &centralizer {
        span.push(flatten(&from_sp_coords(n, z), &MatF::zero(n), &zero_v));
    }
    let j = MatF::j(n);
    for w in sl2_complete(&p.y)?.vplus()? {
        let wv = SymplecticVector::new(w.clone());
        // (w iᵀ + i wᵀ) J
        let mut sym = MatF::zero(n);
        for r in 0..2 * n {
            for c in 0..2 * n {
                let v = &w[r] * &p.i.coords()[c] + &p.i.coords()[r] * &w[c];
                sym.set(r, c, v);
            }
        }
        let target = (&sym * &j).scale(&-Scalar::from_int(1));
        let (dx, _) = solve_ad(&p.y, &target)
            .ok_or_else(|| Error::Infeasible("V+ direction leaves the component".into()))?;
        span.push(flatten(&from_sp_coords(n, &dx), &MatF::zero(n), wv.coords()));
    }
    let mut basis = linalg::Echelon::new();
    let mut independent = Vec::new();
    for t in &span {
        if basis.insert(linalg::to_sparse(t)) {
            independent.push(t.clone());
        }
    }
    Ok(independent)
}

/// Dimension and isotropy (for [`omega_moment`]) of the reduced component's
/// tangent space at `p`.
pub fn component_tangent(p: &SchemePoint) -> Result<ComponentTangent> {
    let n = p.n();
    let independent = component_tangent_basis(p)?;
    let jac = jacobian(p)?;
    let in_zariski_tangent = independent.iter().all(|t| {
        jac.iter()
            .all(|row| row.iter().zip(t).map(|(a, b)| a * b).sum::<Scalar>().is_zero())
    });
    let isotropic = independent.iter().enumerate().all(|(k, t1)| {
        independent[k + 1..].iter().all(|t2| omega_moment(n, t1, t2).is_zero())
    });
    Ok(ComponentTangent {
        dim: independent.len(),
        isotropic,
        in_zariski_tangent,
    })
}

/// Pullback of the canonical form of `gl(V) × gl(V) × V × V*` along
/// `(x, y, i) ↦ (x, y, i/2, ω(i, ·))`, compared with `ω` on every pair of
/// basis tangent vectors.
pub fn embedding_pullback_check(n: usize) -> bool {
    let d = sp_dim(n);
    let basis = sp_basis(n);
    let ambient = 2 * d + 2 * n;
    let j = MatF::j(n);
    let half = Scalar::frac(1, 2);
    // image of a basis tangent vector: gl-matrices (a, b), i₁ ∈ V, j₁ ∈ V*
    let image = |k: usize| -> (MatF, MatF, Vec<Scalar>, Vec<Scalar>) {
        let z = MatF::zero(n);
        let mut u = vec![Scalar::zero(); 2 * n];
        if k < d {
            return (basis[k].clone(), z, u.clone(), u);
        }
        if k < 2 * d {
            return (z.clone(), basis[k - d].clone(), u.clone(), u);
        }
        u[k - 2 * d] = Scalar::from_int(1);
        let i1: Vec<Scalar> = u.iter().map(|c| c * &half).collect();
        // the covector ω(u, ·) = uᵀJ
        let flat: Vec<Scalar> = (0..2 * n)
            .map(|c| (0..2 * n).map(|r| &u[r] * j.get(r, c)).sum())
            .collect();
        (z.clone(), z, i1, flat)
    };
    let pair = |c: &[Scalar], v: &[Scalar]| -> Scalar { c.iter().zip(v).map(|(a, b)| a * b).sum() };
    let unit = |k: usize| -> Vec<Scalar> {
        let mut t = vec![Scalar::zero(); ambient];
        t[k] = Scalar::from_int(1);
        t
    };
    for k1 in 0..ambient {
        let (a1, b1, i1, j1) = image(k1);
        for k2 in 0..ambient {
            let (a2, b2, i2, j2) = image(k2);
            // gl trace form, not the sp coordinates
            let w1 = (&a1 * &b2).trace() - (&a2 * &b1).trace();
            let w2 = pair(&j1, &i2) - pair(&j2, &i1);
            if w1 + w2 != omega(n, &unit(k1), &unit(k2)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn moment_examples() {
        let mut s = Sampler::new(2);
        let x = s.sp_element(2);
        let pt = SchemePoint {
            x: x.clone(),
            y: x,
            i: SymplecticVector::zero(2),
        };
        assert!(moment2(&pt).unwrap().is_zero());
        let pt = SchemePoint {
            x: MatF::elementary(1, 0, 1),
            y: MatF::elementary(1, 1, 0),
            i: SymplecticVector::zero(1),
        };
        assert_eq!(
            moment2(&pt).unwrap(),
            MatF::diag(&[Scalar::one(), -Scalar::one()])
        );
        assert!(!pt.is_on_x().unwrap());
    }

    #[test]
    fn moment_is_equivariant() {
        let mut s = Sampler::new(4);
        for _ in 0..10 {
            let n = 2;
            let pt = SchemePoint {
                x: s.sp_element(n),
                y: s.sp_element(n),
                i: s.vector(n),
            };
            let (g, gi) = s.unipotent(n, 2);
            let lhs = moment2(&pt.conjugate(&g, &gi)).unwrap();
            let rhs = &(&g * &moment2(&pt).unwrap()) * &gi;
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn samples_lie_on_xnil() {
        for seed in 0..5 {
            let pt = sample_xnil_point(&p("(2)"), seed).unwrap();
            assert!(pt.is_on_xnil().unwrap());
            let pt = sample_xnil_point(&p("(2,2)"), seed).unwrap();
            assert!(pt.is_on_xnil().unwrap());
        }
        assert_eq!(
            sample_xnil_point(&p("(1,1)"), 0),
            Err(Error::NotEven("(1,1)".into()))
        );
    }

    #[test]
    fn origin_is_singular() {
        let pt = SchemePoint {
            x: MatF::zero(1),
            y: MatF::zero(1),
            i: SymplecticVector::zero(1),
        };
        let r = lagrangian_check(&pt).unwrap();
        assert_eq!(r.jacobian_rank, 0);
        assert_eq!(r.tangent_dim, 8);
        // the whole ambient space cannot be isotropic for a nondegenerate form
        assert!(!r.isotropic);
        assert!(!r.smooth);
    }

    #[test]
    fn regular_semisimple_x_with_zero_y() {
        let x = MatF::diag(&[1, 2, -1, -2].map(Scalar::from_int));
        let pt = SchemePoint {
            x,
            y: MatF::zero(2),
            i: SymplecticVector::zero(2),
        };
        let r = lagrangian_check(&pt).unwrap();
        assert_eq!(r.jacobian_rank, sp_dim(2) - 2);
        assert!(!r.smooth);
    }

    #[test]
    fn component_tangent_is_lagrangian() {
        for lambda in ["(2)", "(4)", "(2,2)"] {
            for seed in 0..3 {
                let pt = sample_xnil_point(&p(lambda), seed).unwrap();
                let n = pt.n();
                let c = component_tangent(&pt).unwrap();
                assert_eq!(c.dim, sp_dim(n) + n, "{lambda}");
                assert!(c.isotropic && c.in_zariski_tangent, "{lambda} {seed}");
            }
        }
    }

    #[test]
    fn equations_are_not_reduced_along_the_regular_component() {
        // over y = E₁₂ the f-entry of [x,y] + i² is −q², so q² = 0 is forced
        let pt = sample_xnil_point(&p("(2)"), 0).unwrap();
        let r = lagrangian_check(&pt).unwrap();
        assert_eq!(r.jacobian_rank, 3);
        assert_eq!(component_tangent(&pt).unwrap().dim, 4);
    }

    #[test]
    fn unscaled_form_is_not_isotropic_on_the_component() {
        let pt = sample_xnil_point(&p("(2)"), 0).unwrap();
        let b = component_tangent_basis(&pt).unwrap();
        let nonzero = (0..b.len())
            .flat_map(|i| (i + 1..b.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| !omega(1, &b[i], &b[j]).is_zero())
            .count();
        assert!(nonzero > 0);
    }

    #[test]
    fn embedding_pulls_back_omega() {
        for n in 1..=2 {
            assert!(embedding_pullback_check(n));
        }
    }
}
