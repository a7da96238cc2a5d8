//! Nielsen-class combinatorics: the tuple search, the Hurwitz braid orbit,
//! its reduction and symmetrization to 24 points, the ramification braids
//! with their block action, the genus count, and the cusp analysis.

pub mod context;
pub mod orbit;
pub mod reduce;
pub mod tuple;

pub use context::GroupData;
pub use orbit::{braid_orbit, search_tuples, OrbitGraph};
pub use reduce::{
    cusp_analysis, cusp_pairwise, genus_rh, ramification_braids, reduce_symmetrize, BraidConfig,
    RamificationData, ReducedSet,
};
pub use tuple::NielsenTuple;
