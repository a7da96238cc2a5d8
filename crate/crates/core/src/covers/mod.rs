//! Exact verification of the explicit covers: the degree-31 family and its
//! branch data, the lambda invariant, the three-point degenerate cover, the
//! p-adic Newton/LLL reconstruction round trip, the Dedekind certification,
//! and the 15/16 splitting witness.

pub mod branch;
pub mod certificate;
pub mod coeffs;
pub mod dedekind;
pub mod degenerate;
pub mod family;
pub mod lambda;
pub mod newton;
pub mod split;

use crate::algebra::Rational;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoversError {
    #[error("degenerate parameter value alpha = {0}")]
    DegenerateAlpha(Rational),
    #[error("expanded alpha=0 member differs from the recorded reference")]
    SpecializationMismatch,
    #[error("branch locus does not have the expected t^e * quadratic^8 shape: {0}")]
    BranchShape(String),
    #[error("fiber profile mismatch: expected {expected}, found {found}")]
    ProfileMismatch { expected: String, found: String },
    #[error("interpolation inconsistency: {0}")]
    Interpolation(String),
    #[error("{0}")]
    Reconstruction(String),
    #[error("Dedekind scan: {0}")]
    Dedekind(String),
    #[error("splitting check: {0}")]
    Split(String),
}

pub use degenerate::{degenerate_cover, verify_degenerate, DegenerateCertificate};
pub use family::{family, profiles, specialization_match, CoverPolynomial};
pub use lambda::{lambda_at, lambda_function, LambdaFunction};
pub use newton::{newton_roundtrip, NewtonRoundtrip};
pub use dedekind::{dedekind_scan, DedekindScan};
pub use split::{split_1516, SplitReport};
pub use certificate::{galois_certificate, CertificateConfig};
