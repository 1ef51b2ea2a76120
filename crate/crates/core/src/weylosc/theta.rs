use std::sync::Arc;

use num_traits::Zero;

use super::weyl::{WeylElement, WeylMonomial};
use crate::error::{Error, Result};
use crate::exactcore::{MultiPoly, Registry, Scalar};
use crate::splie::{sp_basis, sp_coords, sp_dim, MatF};

/// Registry of classical symbols `x1..xn, eta1..etan` on `V`; `eta_i` is the
/// symbol of `y_i`.
pub fn symbol_registry(n: usize) -> Arc<Registry> {
    Registry::new(
        (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=n).map(|i| format!("eta{i}"))),
    )
}

/// Poisson bracket with `{eta_i, x_j} = δ_ij`, matching `[y_i, x_j] = δ_ij`.
pub fn poisson_bracket(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
    if f.registry() != g.registry() {
        return Err(Error::RegistryMismatch);
    }
    let n = f.nvars() / 2;
    let mut acc = MultiPoly::zero(f.registry());
    for i in 0..n {
        acc = &acc + &(&f.partial(i + n) * &g.partial(i));
        acc = &acc - &(&f.partial(i) * &g.partial(i + n));
    }
    Ok(acc)
}

/// Symmetrization of a polynomial of degree at most two in the symbols.
///
/// The only correction is `Sym(x_i·eta_i) = ½(x_i y_i + y_i x_i) = x_i y_i + ½`.
pub fn symmetrize_quadratic(p: &MultiPoly) -> Result<WeylElement> {
    let nv = p.nvars();
    if nv % 2 != 0 {
        return Err(Error::SizeMismatch(nv, nv + 1));
    }
    let n = nv / 2;
    if let Some(d) = p.total_degree() {
        if d > 2 {
            return Err(Error::DegreeTooHigh { found: d, max: 2 });
        }
    }
    let mut out = WeylElement::zero(n);
    for (m, c) in p.terms() {
        let e = m.exponents();
        let wm = WeylMonomial {
            x: e[..n].to_vec(),
            y: e[n..].to_vec(),
        };
        let mixed_diag = (0..n).find(|&i| e[i] == 1 && e[i + n] == 1);
        out.add_term(wm, c.clone());
        if mixed_diag.is_some() {
            out.add_term(WeylMonomial::one(n), c * &Scalar::frac(1, 2));
        }
    }
    Ok(out)
}

fn blocks(a: &MatF) -> (usize, impl Fn(usize, usize) -> Scalar + '_) {
    let n = a.n();
    (n, move |i, j| a.get(i, j).clone())
}

/// Classical co-moment `θ₁(a) = Σ a_ij x_i eta_j + ½ Σ b_ij x_i x_j − ½ Σ c_ij eta_i eta_j`.
pub fn theta1_classical(a: &MatF) -> Result<MultiPoly> {
    if !a.is_sp() {
        return Err(Error::NotSymplectic);
    }
    let (n, get) = blocks(a);
    let reg = symbol_registry(n);
    let half = Scalar::frac(1, 2);
    let v = |i| MultiPoly::var(&reg, i);
    let mut p = MultiPoly::zero(&reg);
    for i in 0..n {
        for j in 0..n {
            let (aij, bij, cij) = (get(i, j), get(i, j + n), get(i + n, j));
            if !aij.is_zero() {
                p = &p + &(&v(i) * &v(j + n)).scale(&aij);
            }
            if !bij.is_zero() {
                p = &p + &(&v(i) * &v(j)).scale(&(&bij * &half));
            }
            if !cij.is_zero() {
                p = &p - &(&v(i + n) * &v(j + n)).scale(&(&cij * &half));
            }
        }
    }
    Ok(p)
}

/// Quantum co-moment map
/// `Θ₁(a) = ½(Σ 2a_ij x_i y_j + b_ij x_i x_j − c_ij y_i y_j + Tr A)`.
pub fn theta1(a: &MatF) -> Result<WeylElement> {
    if !a.is_sp() {
        return Err(Error::NotSymplectic);
    }
    let (n, get) = blocks(a);
    let half = Scalar::frac(1, 2);
    let mut w = WeylElement::zero(n);
    let mut trace_a = Scalar::zero();
    for i in 0..n {
        trace_a += get(i, i);
        for j in 0..n {
            let mut xy = WeylMonomial::one(n);
            xy.x[i] += 1;
            xy.y[j] += 1;
            w.add_term(xy, get(i, j));
            let mut xx = WeylMonomial::one(n);
            xx.x[i] += 1;
            xx.x[j] += 1;
            w.add_term(xx, &get(i, j + n) * &half);
            let mut yy = WeylMonomial::one(n);
            yy.y[i] += 1;
            yy.y[j] += 1;
            w.add_term(yy, -(&get(i + n, j) * &half));
        }
    }
    w.add_term(WeylMonomial::one(n), trace_a * half);
    Ok(w)
}

/// Linear vector field `Σ coeff(k,l) ξ_l ∂/∂ξ_k` on sp(2n), where `ξ_b` is the
/// linear function `z ↦ Tr(b z)` attached to the basis element `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearVectorField {
    n: usize,
    /// `coeffs[k][l]`: coefficient of `ξ_l ∂/∂ξ_k`
    coeffs: Vec<Vec<Scalar>>,
}

impl LinearVectorField {
    pub fn zero(n: usize) -> Self {
        let d = sp_dim(n);
        LinearVectorField {
            n,
            coeffs: vec![vec![Scalar::zero(); d]; d],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, k: usize, l: usize) -> &Scalar {
        &self.coeffs[k][l]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    /// Image of the coordinate function `ξ_k`, as coefficients of the `ξ_l`.
    pub fn on_coordinate(&self, k: usize) -> &[Scalar] {
        &self.coeffs[k]
    }

    /// `[X, Y] = XY − YX` as derivations; the result is again linear.
    pub fn commutator(&self, other: &LinearVectorField) -> Result<LinearVectorField> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let d = self.coeffs.len();
        // X ξ_k = Σ_l X[k][l] ξ_l  ⇒  [X,Y] ξ_k = Σ_l (Y·X − X·Y)[k][l] ξ_l
        let prod = |p: &Vec<Vec<Scalar>>, q: &Vec<Vec<Scalar>>, k: usize, l: usize| -> Scalar {
            (0..d).map(|m| &p[k][m] * &q[m][l]).sum()
        };
        let coeffs = (0..d)
            .map(|k| {
                (0..d)
                    .map(|l| prod(&other.coeffs, &self.coeffs, k, l) - prod(&self.coeffs, &other.coeffs, k, l))
                    .collect()
            })
            .collect();
        Ok(LinearVectorField { n: self.n, coeffs })
    }

    /// Apply as a derivation to a polynomial in the coordinates `ξ_b`.
    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let d = self.coeffs.len();
        if p.nvars() != d {
            return Err(Error::SizeMismatch(p.nvars(), d));
        }
        let reg = p.registry();
        let mut acc = MultiPoly::zero(reg);
        for k in 0..d {
            let dk = p.partial(k);
            if dk.is_zero() {
                continue;
            }
            let image = MultiPoly::linear(reg, &self.coeffs[k]);
            acc = &acc + &(&image * &dk);
        }
        Ok(acc)
    }
}

/// The derivation `Θ₀(a)` sending `ξ_b ↦ ξ_{[a,b]}`.
///
/// In terms of points, `ξ_{[a,b]}(z) = Tr([a,b]z) = −ξ_b([a,z])`, so this is
/// the vector field `z ↦ −[a,z]`; that sign makes `Θ₀` a homomorphism.
pub fn theta0(a: &MatF) -> Result<LinearVectorField> {
    if !a.is_sp() {
        return Err(Error::NotSymplectic);
    }
    let n = a.n();
    let coeffs = sp_basis(n)
        .iter()
        .map(|b| sp_coords(&a.commutator(b)))
        .collect();
    Ok(LinearVectorField { n, coeffs })
}

/// Registry `xi1..xiD` for linear coordinates on sp(2n).
pub fn coordinate_registry(n: usize) -> Arc<Registry> {
    Registry::new((1..=sp_dim(n)).map(|i| format!("xi{i}")))
}
