//! Exact verification of an explicit four-branch-point polynomial family of
//! degree 31 with monodromy group PSL(5,2), together with the braid-orbit
//! combinatorics of its Nielsen class and the p-adic/LLL reconstruction
//! pipeline for the degenerate three-point cover over Q(sqrt(-7)).

pub mod algebra;
pub mod covers;
pub mod lattice;
pub mod nielsen;
pub mod permgrp;
pub mod report;
