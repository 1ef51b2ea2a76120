//! Exact scalar field ℚ(√2), sparse multivariate polynomials and the
//! degree-truncated ideal linear algebra the other modules are built on.

pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod scalar;

pub use ideal::{truncated_ideal_dim, truncated_ideal_dim_filtered, GradedIdealBasis};
pub use poly::{divide_by_linear, monomials_of_degree, poly_mul, Monomial, MultiPoly, Registry};
pub use scalar::Scalar;
