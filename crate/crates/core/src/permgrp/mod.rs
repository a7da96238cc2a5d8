//! The group GL(5,2) in its two transitive degree-31 actions, with the
//! structural machinery the verification needs: stabilizer chains, the
//! cycle-type census, conjugacy classes, block systems, and subgroup
//! conjugacy tests.

pub mod blocks;
pub mod conjugacy;
pub mod census;
pub mod classes;
pub mod gl52;
pub mod labels;
pub mod perm;
pub mod stabchain;

pub use gl52::{GROUP_ORDER, N};
pub use labels::{class_label, ClassLabel};

/// Generators of the degree-31 action of the requested kind.
pub enum ActionKind {
    Points,
    Hyperplanes,
}

pub fn psl52_action(kind: ActionKind) -> Vec<Perm> {
    match kind {
        ActionKind::Points => gl52::point_generators(),
        ActionKind::Hyperplanes => gl52::hyperplane_generators(),
    }
}
pub use perm::Perm;
pub use stabchain::StabChain;
