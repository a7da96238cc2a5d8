//! Lattice reduction and reconstruction of exact values from residues:
//! LLL over Z with exact rational Gram–Schmidt, rational reconstruction,
//! and minimal polynomials of p-adic approximations.

pub mod algdep;
pub mod lll;
pub mod ratrecon;

pub use algdep::{algdep_padic, quad_min_poly};
pub use lll::lll_reduce;
pub use ratrecon::rational_reconstruct;
