//! Integer-polynomial plumbing: denominators, content, reductions mod p,
//! coefficient bounds, CRT.

use super::field::{Rational, QQ};
use super::fp::FpCtx;
use super::poly::Poly;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Writes f = scale * F with F a primitive integer polynomial with positive
/// leading coefficient. Returns (scale, F-coefficients). f must be nonzero.
pub fn to_primitive_integer(f: &Poly<QQ>) -> (Rational, Vec<BigInt>) {
    assert!(!f.is_zero());
    let mut den = BigInt::one();
    for c in f.coeffs() {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if ints.last().unwrap().is_negative() {
        content = -content;
    }
    let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
    (Rational::new(content, den), prim)
}

pub fn from_integer(coeffs: &[BigInt]) -> Poly<QQ> {
    Poly::new(
        QQ,
        coeffs
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect(),
    )
}

/// Reduction of an integer polynomial mod p.
pub fn reduce_mod_p(coeffs: &[BigInt], p: u64) -> Poly<FpCtx> {
    let ctx = FpCtx::new(p);
    let pb = BigInt::from(p);
    let c: Vec<u64> = coeffs
        .iter()
        .map(|x| {
            let r = x.mod_floor(&pb);
            r.to_u64_digits().1.first().copied().unwrap_or(0)
        })
        .collect();
    Poly::new(ctx, c)
}

pub fn max_abs_coeff(coeffs: &[BigInt]) -> BigInt {
    coeffs
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}

/// Sum of squares of the coefficients (square of the 2-norm).
pub fn norm2_sq(coeffs: &[BigInt]) -> BigInt {
    coeffs.iter().map(|c| c * c).sum()
}

/// A Landau–Mignotte-style bound: any factor of F over Z of degree <= n has
/// coefficients bounded by 2^n * |F|_2 * |lc(F)| in absolute value.
pub fn factor_coeff_bound(coeffs: &[BigInt]) -> BigInt {
    let n = coeffs.len() - 1;
    let norm_sq = norm2_sq(coeffs);
    let norm = norm_sq.sqrt() + 1;
    let lc = coeffs.last().unwrap().abs();
    (BigInt::one() << n) * norm * lc
}

/// Garner-style CRT for pairwise coprime word-size moduli; result is the
/// symmetric representative mod the product.
pub fn crt_symmetric(residues: &[u64], moduli: &[u64]) -> BigInt {
    assert_eq!(residues.len(), moduli.len());
    let mut acc = BigInt::zero();
    let mut modulus = BigInt::one();
    for (&r, &m) in residues.iter().zip(moduli) {
        let mb = BigInt::from(m);
        // acc + modulus * t == r (mod m)
        let cur = acc.mod_floor(&mb);
        let diff = (BigInt::from(r) - cur).mod_floor(&mb);
        let minv = mod_inverse(&modulus.mod_floor(&mb), &mb).expect("moduli not coprime");
        let t = (diff * minv).mod_floor(&mb);
        acc += &modulus * t;
        modulus *= mb;
    }
    // symmetric lift
    if &acc * 2 > modulus {
        acc -= &modulus;
    }
    acc
}

pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Monic gcd over Q via modular images: CRT a candidate from good primes,
/// accept once it divides both inputs exactly. Unlucky primes (gcd image
/// of too-high degree) are discarded when a lower-degree image appears.
pub fn gcd_qq(f: &Poly<QQ>, g: &Poly<QQ>) -> Poly<QQ> {
    if f.is_zero() {
        return if g.is_zero() { g.clone() } else { g.monic() };
    }
    if g.is_zero() {
        return f.monic();
    }
    let (_, fi) = to_primitive_integer(f);
    let (_, gi) = to_primitive_integer(g);
    let gamma = fi.last().unwrap().gcd(gi.last().unwrap());
    let mut dmin = usize::MAX;
    let mut images: Vec<(u64, Vec<u64>)> = Vec::new();
    let mut last_candidate: Option<Vec<BigInt>> = None;
    for p in super::primes::primes_from(1u64 << 62) {
        let pb = BigInt::from(p);
        if (fi.last().unwrap() % &pb).is_zero() || (gi.last().unwrap() % &pb).is_zero() {
            continue;
        }
        let fp = reduce_mod_p(&fi, p);
        let gp = reduce_mod_p(&gi, p);
        let hp = fp.gcd(&gp);
        let d = hp.deg();
        if d == 0 {
            return Poly::one(QQ);
        }
        if d > dmin {
            continue; // unlucky prime
        }
        if d < dmin {
            dmin = d;
            images.clear();
            last_candidate = None;
        }
        // scale the monic image so the integer gcd's leading coefficient
        // (a divisor of gamma) reconstructs consistently
        let gmod = {
            let r = gamma.mod_floor(&pb);
            r.to_u64_digits().1.first().copied().unwrap_or(0)
        };
        let scaled = hp.mul_scalar(&gmod);
        images.push((p, (0..=d).map(|i| scaled.coeff(i)).collect()));
        let moduli: Vec<u64> = images.iter().map(|(q, _)| *q).collect();
        let cand: Vec<BigInt> = (0..=d)
            .map(|i| {
                let rs: Vec<u64> = images.iter().map(|(_, c)| c[i]).collect();
                crt_symmetric(&rs, &moduli)
            })
            .collect();
        if last_candidate.as_ref() == Some(&cand) {
            let h = from_integer(&cand).monic();
            if f.rem(&h).is_zero() && g.rem(&h).is_zero() {
                return h;
            }
        }
        last_candidate = Some(cand);
    }
    unreachable!("prime stream is infinite")
}

/// Does the residue count as "small" relative to the modulus? Used by the
/// reconstruction routines to reject insufficient precision.
pub fn bits(n: &BigInt) -> u64 {
    let (_, mag) = n.clone().into_parts();
    magnitude_bits(&mag)
}

fn magnitude_bits(n: &BigUint) -> u64 {
    n.bits()
}

#[cfg(test)]
mod tests {
    use super::super::field::rat;
    use super::*;

    #[test]
    fn primitive_part() {
        // (2/3)x^2 - 2 = (2/3) (x^2 - 3)
        let f = Poly::new(QQ, vec![rat(-2, 1), rat(0, 1), rat(2, 3)]);
        let (scale, prim) = to_primitive_integer(&f);
        assert_eq!(scale, rat(2, 3));
        assert_eq!(prim, vec![BigInt::from(-3), BigInt::zero(), BigInt::one()]);
    }

    #[test]
    fn crt_roundtrip() {
        let n = BigInt::from(-123456789i64);
        let moduli = [10007u64, 10009, 10037, 10039];
        let residues: Vec<u64> = moduli
            .iter()
            .map(|&m| {
                let r = n.mod_floor(&BigInt::from(m));
                r.to_u64_digits().1.first().copied().unwrap_or(0)
            })
            .collect();
        assert_eq!(crt_symmetric(&residues, &moduli), n);
    }
}
