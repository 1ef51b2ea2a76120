use num_traits::Zero;

use super::weyl_group::{w_act, SignedPerm};
use crate::error::{Error, Result};
use crate::exactcore::{MultiPoly, Scalar};
use crate::splie::{Root, RootDatumC};

/// The multiplicity function, constant on long and on short roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub c_long: Scalar,
    pub c_short: Scalar,
}

impl Params {
    pub fn new(c_long: Scalar, c_short: Scalar) -> Self {
        Params { c_long, c_short }
    }

    /// `c = (−1/4, −1/2)`.
    pub fn distinguished() -> Self {
        Params::new(Scalar::frac(-1, 4), Scalar::frac(-1, 2))
    }

    pub fn zero() -> Self {
        Params::new(Scalar::zero(), Scalar::zero())
    }

    pub fn c(&self, root: &Root) -> &Scalar {
        if root.is_long() {
            &self.c_long
        } else {
            &self.c_short
        }
    }
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn check_len(n: usize, v: &[Scalar]) -> Result<()> {
    if v.len() == n {
        Ok(())
    } else {
        Err(Error::SizeMismatch(n, v.len()))
    }
}

/// `T_y p = ∂_y p − ½ Σ_{α∈R} c(α)⟨α,y⟩ (p − s_α p)/α`.
pub fn dunkl_apply(ydir: &[Scalar], p: &MultiPoly, c: &Params) -> Result<MultiPoly> {
    let n = p.nvars();
    check_len(n, ydir)?;
    let reg = p.registry();
    let mut out = MultiPoly::zero(reg);
    for (k, yk) in ydir.iter().enumerate() {
        if !yk.is_zero() {
            out = &out + &p.partial(k).scale(yk);
        }
    }
    let half = Scalar::frac(1, 2);
    for root in RootDatumC::new(n).roots {
        let a = root.coeffs(n);
        let weight = c.c(&root) * &dot(&a, ydir) * &half;
        if weight.is_zero() {
            continue;
        }
        let diff = p - &w_act(&SignedPerm::reflection(n, root), p)?;
        if diff.is_zero() {
            continue;
        }
        let q = diff.divide_by_linear(&MultiPoly::linear(reg, &a))?;
        out = &out - &q.scale(&weight);
    }
    Ok(out)
}

/// Checks `T_y(x·p) − x·T_y(p) = ⟨x,y⟩p − ½ Σ_α c(α)⟨α,y⟩⟨x,α^∨⟩ s_α p`
/// with `α^∨ = 2α/(α,α)`.
pub fn check_hc_relation(xlin: &[Scalar], ydir: &[Scalar], p: &MultiPoly, c: &Params) -> Result<bool> {
    let n = p.nvars();
    check_len(n, xlin)?;
    let reg = p.registry();
    let x = MultiPoly::linear(reg, xlin);
    let lhs = &dunkl_apply(ydir, &(&x * p), c)? - &(&x * &dunkl_apply(ydir, p, c)?);
    let mut rhs = p.scale(&dot(xlin, ydir));
    let half = Scalar::frac(1, 2);
    for root in RootDatumC::new(n).roots {
        let a = root.coeffs(n);
        let pair_x = Scalar::from_int(2) * dot(xlin, &a) * root.norm_sq(n).inverse().expect("nonzero");
        let coef = c.c(&root) * &dot(&a, ydir) * &pair_x * &half;
        if coef.is_zero() {
            continue;
        }
        rhs = &rhs - &w_act(&SignedPerm::reflection(n, root), p)?.scale(&coef);
    }
    Ok(lhs == rhs)
}

/// `T_{y1} T_{y2} p = T_{y2} T_{y1} p`.
pub fn dunkl_commute(y1: &[Scalar], y2: &[Scalar], p: &MultiPoly, c: &Params) -> Result<bool> {
    let a = dunkl_apply(y1, &dunkl_apply(y2, p, c)?, c)?;
    let b = dunkl_apply(y2, &dunkl_apply(y1, p, c)?, c)?;
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cherednik::h_registry;
    use crate::exactcore::monomials_of_degree;

    fn unit(n: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::from_int(1);
        v
    }

    #[test]
    fn rank_one_examples() {
        let reg = h_registry(1);
        let t = MultiPoly::var(&reg, 0);
        let c = Params::distinguished();
        let y = unit(1, 0);
        assert_eq!(dunkl_apply(&y, &(&t * &t), &c).unwrap(), t.scale(&Scalar::from_int(2)));
        let want = Scalar::from_int(1) - Scalar::from_int(2) * c.c_long.clone();
        assert_eq!(dunkl_apply(&y, &t, &c).unwrap(), MultiPoly::constant(&reg, want));
        assert!(dunkl_apply(&y, &MultiPoly::one(&reg), &c).unwrap().is_zero());
    }

    #[test]
    fn relation_rank_one_by_hand() {
        // both sides equal t^k − 2c(−1)^k t^k
        let reg = h_registry(1);
        let c = Params::new(Scalar::frac(2, 7), Scalar::frac(-5, 3));
        for k in 0..6 {
            let p = MultiPoly::var(&reg, 0).pow(k);
            assert!(check_hc_relation(&unit(1, 0), &unit(1, 0), &p, &c).unwrap());
        }
    }

    #[test]
    fn relation_and_commutation_n2() {
        let n = 2;
        let c = Params::distinguished();
        let reg = h_registry(n);
        for d in 0..=4 {
            for m in monomials_of_degree(n, d) {
                let p = MultiPoly::monomial(&reg, m, Scalar::from_int(1));
                for i in 0..n {
                    for j in 0..n {
                        assert!(check_hc_relation(&unit(n, i), &unit(n, j), &p, &c).unwrap());
                    }
                }
                assert!(dunkl_commute(&unit(n, 0), &unit(n, 1), &p, &c).unwrap());
            }
        }
    }

    #[test]
    fn zero_parameter_is_classical() {
        let reg = h_registry(2);
        let p = &MultiPoly::var(&reg, 0).pow(3) * &MultiPoly::var(&reg, 1);
        let y = unit(2, 0);
        assert_eq!(dunkl_apply(&y, &p, &Params::zero()).unwrap(), p.partial(0));
    }
}
