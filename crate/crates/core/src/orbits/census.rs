use serde::Serialize;

use super::partition::{enum_partitions, nilpotent_rep, Partition};
use super::sl2::sl2_complete;
use crate::error::Result;
use crate::splie::{centralizer_dim, sp_dim};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    #[serde(serialize_with = "as_display")]
    pub lambda: Partition,
    pub orbit_dim: usize,
    pub vplus_dim: usize,
    pub xlambda_dim: usize,
    pub is_component: bool,
}

fn as_display<S: serde::Serializer>(p: &Partition, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

pub fn census_row(lambda: &Partition) -> Result<CensusRow> {
    let y = nilpotent_rep(lambda)?;
    let n = y.n();
    let g = sp_dim(n);
    let orbit_dim = g - centralizer_dim(&y)?;
    let (vplus_dim, _, _) = sl2_complete(&y)?.weight_split()?;
    let xlambda_dim = g + vplus_dim;
    Ok(CensusRow {
        lambda: lambda.clone(),
        orbit_dim,
        vplus_dim,
        xlambda_dim,
        is_component: xlambda_dim == g + n,
    })
}

/// One row per `λ ∈ P_n`, in the order of [`enum_partitions`].
pub fn census(n: usize) -> Result<Vec<CensusRow>> {
    enum_partitions(n).0.iter().map(census_row).collect()
}
