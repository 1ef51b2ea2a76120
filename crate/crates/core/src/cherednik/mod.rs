//! Type C rational Cherednik data on `h`: the hyperoctahedral group, Dunkl
//! operators, and the Calogero–Moser operator compared with the radial part
//! of the Laplacian.

mod dunkl;
mod radial;
mod weyl_group;

pub use dunkl::{check_hc_relation, dunkl_apply, dunkl_commute, Params};
pub use radial::{
    build_lc, radial_match, radial_match_with, radial_operator, FormalRadialOperator,
};
pub use weyl_group::{h_registry, w_act, SignedPerm};
