//! The Weyl algebra `W_{2n}`, the quantum co-moment maps `Θ₁` (into `W_{2n}`)
//! and `Θ₀` (into vector fields on sp(2n)), and the oscillator module of
//! half-density Laurent monomials.

mod osc;
mod theta;
mod weyl;

pub use osc::{osc_apply, OscVector};
pub use theta::{
    coordinate_registry, poisson_bracket, symbol_registry, symmetrize_quadratic, theta0, theta1,
    theta1_classical, LinearVectorField,
};
pub use weyl::{weyl_mul, WeylElement, WeylMonomial};

use crate::error::{Error, Result};
use crate::exactcore::Scalar;
use crate::splie::Root;

/// The scalar by which `Θ₁(e_α)·Θ₁(e_{−α})` acts on the weight-zero vector
/// `(x_1 ⋯ x_n)^{−1/2}`.
pub fn weight_zero_scalar(n: usize, root: Root) -> Result<Scalar> {
    let e_pos = theta1(&root.root_vector(n))?;
    let e_neg = theta1(&root.neg().root_vector(n))?;
    let op = weyl_mul(&e_pos, &e_neg)?;
    let v0 = OscVector::v0(n);
    let image = osc_apply(&op, &v0)?;
    if image.is_zero() {
        return Ok(Scalar::from_int(0));
    }
    image.ratio_to(&v0).ok_or(Error::NotScalar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splie::{RootDatumC, RootKind};

    #[test]
    fn long_and_short_scalars() {
        for n in 1..=3 {
            for r in RootDatumC::new(n).roots {
                let want = if r.is_long() {
                    Scalar::frac(-3, 16)
                } else {
                    Scalar::frac(-1, 8)
                };
                let got = weight_zero_scalar(n, r).unwrap();
                assert_eq!(got, want, "root {r:?}");
                assert!(got.is_rational());
            }
        }
    }

    #[test]
    fn direct_rank_one_computation() {
        // (½x²)(−½∂²) x^{−1/2} = −¼·¾ x^{−1/2}
        let x = WeylElement::x(1, 0);
        let y = WeylElement::y(1, 0);
        let op = (&(&x * &x) * &(&y * &y)).scale(&Scalar::frac(-1, 4));
        let img = osc_apply(&op, &OscVector::v0(1)).unwrap();
        assert_eq!(img, OscVector::v0(1).scale(&Scalar::frac(-3, 16)));
        let r = Root::new(RootKind::Long(0), true);
        assert_eq!(weight_zero_scalar(1, r).unwrap(), Scalar::frac(-3, 16));
    }
}
