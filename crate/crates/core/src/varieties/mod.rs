//! The almost commuting scheme `X ⊂ g × g × V` and its nilpotent part:
//! defining ideals, exact sample points, tangent-space checks and the
//! graded comparison with the commuting-scheme quotient.

mod hilbert;
mod ideals;
mod polymat;
mod scheme;

pub use hilbert::{hilbert_compare, HilbertRow, MAX_HILBERT_DEGREE};
pub use ideals::{
    char_coeffs_symbolic, ideal_generators, nil_differential, theta1_kills_minors,
    trace_dual_basis, xy_registry, xyi_registry, y_registry, IdealKind, MAX_SYMBOLIC_N,
};
pub use polymat::{symbolic_square, PolyMat};
pub use scheme::{
    embedding_pullback_check, jacobian, lagrangian_check, moment2,
    omega, omega_moment, sample_xnil_point, component_tangent, component_tangent_basis, ComponentTangent, SchemePoint,
    TangentReport,
};
