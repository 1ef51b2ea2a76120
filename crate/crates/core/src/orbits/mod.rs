//! Nilpotent orbits of sp(2n): symplectic Jordan types, representatives,
//! sl2-triples and the dimension census of the pieces `X_λ`.

mod census;
mod lemma;
mod partition;
mod sl2;

pub use census::{census, census_row, CensusRow};
pub use lemma::{sl2_lowest_coefficient_check, verify_sl2_square_lemma};
pub use partition::{enum_partitions, jordan_type, nilpotent_rep, Partition};
pub use sl2::{eigenspaces, sl2_complete, Sl2Triple};
