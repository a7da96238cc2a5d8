//! Exact scalar arithmetic and univariate polynomial algebra.

pub mod factor;
pub mod field;
pub mod fp;
pub mod hensel;
pub mod modfactor;
pub mod padic;
pub mod poly;
pub mod primes;
pub mod profile;
pub mod quad;
pub mod ratfunc;
pub mod resultant;
pub mod sqfree;
pub mod zpoly;

pub use field::{FieldCtx, Rational, QQ};
pub use poly::Poly;
pub use profile::Profile;
