//! Recovery of algebraic numbers of bounded degree from p-adic residues:
//! a short vector in the standard relation lattice gives an integer
//! polynomial annihilating the residue mod p^k, verified exactly before
//! being returned.

use super::lll::lll_reduce;
use crate::algebra::field::{rat, Rational};
use crate::algebra::padic::ZpkCtx;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum AlgdepError {
    #[error("insufficient precision: need p^k > (2H)^(d+1)")]
    InsufficientPrecision,
    #[error("no integer relation within the degree and height bounds")]
    NoRelation,
}

/// Integer polynomial of degree <= d with coefficients bounded by H that
/// annihilates x mod p^k, found by lattice reduction. Coefficients are
/// returned lowest-first with positive leading coefficient and content 1.
pub fn algdep_padic(
    x: &BigInt,
    ctx: &ZpkCtx,
    d: usize,
    height: &BigInt,
) -> Result<Vec<BigInt>, AlgdepError> {
    let two_h: BigInt = height * 2;
    if ctx.pk <= two_h.pow(d as u32 + 1) {
        return Err(AlgdepError::InsufficientPrecision);
    }
    let dim = d + 2;
    // rows 0..=d: e_i with W * (x^i mod p^k) in the last column; final row
    // W * p^k. The weight W makes any nonzero residue dominate the norm, so
    // a reduced vector with small coordinates must be an exact relation.
    let weight: BigInt = &ctx.pk * &ctx.pk;
    let mut basis: Vec<Vec<BigInt>> = Vec::with_capacity(dim);
    let mut pow = BigInt::one();
    for i in 0..=d {
        let mut row = vec![BigInt::zero(); dim];
        row[i] = BigInt::one();
        row[d + 1] = &weight * &pow;
        basis.push(row);
        if i < d {
            pow = ctx.reduce(&(&pow * x));
        }
    }
    let mut last = vec![BigInt::zero(); dim];
    last[d + 1] = &weight * &ctx.pk;
    basis.push(last);

    let delta = rat(3, 4);
    let reduced = lll_reduce(&basis, &delta).expect("relation basis independent");
    // keep the verified relation of least degree (a spurious x * (true
    // relation) can verify too when x is divisible by p), smallest norm
    // among ties
    let mut best: Option<(usize, BigInt, Vec<BigInt>)> = None;
    for v in &reduced {
        let coeffs = &v[..=d];
        if coeffs.iter().all(|c| c.is_zero()) {
            continue;
        }
        if coeffs.iter().any(|c| c.abs() > *height) {
            continue;
        }
        // exact verification mod p^k
        let mut acc = BigInt::zero();
        let mut xp = BigInt::one();
        for c in coeffs {
            acc = ctx.reduce(&(acc + c * &xp));
            xp = ctx.reduce(&(xp * x));
        }
        if !acc.is_zero() {
            continue;
        }
        let mut poly: Vec<BigInt> = coeffs.to_vec();
        while poly.last().map_or(false, |c| c.is_zero()) {
            poly.pop();
        }
        let mut content = BigInt::zero();
        for c in &poly {
            content = content.gcd(c);
        }
        if poly.last().unwrap().is_negative() {
            content = -content;
        }
        for c in &mut poly {
            *c /= &content;
        }
        let norm: BigInt = poly.iter().map(|c| c * c).sum();
        let deg = poly.len();
        let better = match &best {
            None => true,
            Some((bd, bn, _)) => deg < *bd || (deg == *bd && norm < *bn),
        };
        if better {
            best = Some((deg, norm, poly));
        }
    }
    best.map(|(_, _, p)| p).ok_or(AlgdepError::NoRelation)
}

/// Convenience: reconstructs a quadratic (or rational) value from a residue,
/// reporting the minimal polynomial.
pub fn minimal_polynomial(
    x: &BigInt,
    ctx: &ZpkCtx,
    degree: usize,
    height: &BigInt,
) -> Result<Vec<BigInt>, AlgdepError> {
    algdep_padic(x, ctx, degree, height)
}

/// Minimal polynomial over Z of a + b*sqrt(disc) with rational a, b:
/// x^2 - 2a x + (a^2 - disc b^2), cleared to integer content 1. For b = 0
/// returns the degree-1 polynomial d*x - n.
pub fn quad_min_poly(a: &Rational, b: &Rational, disc: i64) -> Vec<BigInt> {
    if b.is_zero() {
        return vec![-a.numer().clone(), a.denom().clone()];
    }
    let two_a = a * Rational::from_integer(BigInt::from(2));
    let norm = a * a - Rational::from_integer(BigInt::from(disc)) * b * b;
    // x^2 - (2a) x + norm, cleared of denominators
    let den = two_a.denom().lcm(norm.denom());
    let c2 = den.clone();
    let c1 = -(two_a.numer() * (&den / two_a.denom()));
    let c0 = norm.numer() * (&den / norm.denom());
    let mut v = vec![c0, c1, c2];
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    for c in &mut v {
        *c /= &content;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::hensel::lift_root;

    #[test]
    fn sqrt2_recovered() {
        // x = Hensel-lifted sqrt(2) in Z/7^40, d = 2 -> x^2 - 2
        let f = vec![BigInt::from(-2), BigInt::zero(), BigInt::one()];
        let x = lift_root(&f, 7, 3, 40).unwrap();
        let ctx = ZpkCtx::new(7, 40);
        let h = BigInt::from(1u64 << 16);
        let rel = algdep_padic(&x, &ctx, 2, &h).unwrap();
        assert_eq!(rel, vec![BigInt::from(-2), BigInt::zero(), BigInt::one()]);
    }

    #[test]
    fn rational_caution_case() {
        // x = 11/16 mod 11^40 -> 16x - 11
        let ctx = ZpkCtx::new(11, 40);
        let x = ctx.from_rational(&rat(11, 16));
        let h = BigInt::from(1u64 << 16);
        let rel = algdep_padic(&x, &ctx, 2, &h).unwrap();
        assert_eq!(rel, vec![BigInt::from(-11), BigInt::from(16)]);
    }

    #[test]
    fn insufficient_precision_rejected() {
        let ctx = ZpkCtx::new(11, 8);
        let x = BigInt::from(12345);
        let h = BigInt::from(1u64 << 40);
        assert_eq!(
            algdep_padic(&x, &ctx, 2, &h),
            Err(AlgdepError::InsufficientPrecision)
        );
    }

    #[test]
    fn quad_min_poly_a1() {
        // (11 - sqrt(-7))/8 has minimal polynomial 4x^2 - 11x + 8
        let mp = quad_min_poly(&rat(11, 8), &rat(-1, 8), -7);
        assert_eq!(mp, vec![BigInt::from(8), BigInt::from(-11), BigInt::from(4)]);
    }
}
