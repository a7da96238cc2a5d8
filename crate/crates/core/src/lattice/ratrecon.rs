//! Rational reconstruction from a single residue.

use crate::algebra::field::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Finds n/d with n * d^-1 = residue (mod m), |n|, d <= sqrt(m/2),
/// gcd(d, m) = 1. Unique when it exists; None otherwise.
pub fn rational_reconstruct(residue: &BigInt, m: &BigInt) -> Option<Rational> {
    assert!(!residue.is_negative() && residue < m, "residue out of range");
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), residue.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::from(1));
    while r1 > bound {
        let q = &r0 / &r1;
        (r0, r1) = (r1.clone(), r0 - &q * &r1);
        (t0, t1) = (t1.clone(), t0 - &q * &t1);
    }
    if t1.is_zero() {
        return None;
    }
    let (n, d) = if t1.is_negative() {
        (-r1, -t1)
    } else {
        (r1, t1)
    };
    if d > bound || !n.gcd(&d).is_one() || !d.gcd(m).is_one() {
        return None;
    }
    // verify n = residue * d (mod m)
    if !(&n - residue * &d).mod_floor(m).is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}
