//! Factorization of univariate polynomials over prime fields:
//! distinct-degree splitting (whose degree pattern is the Frobenius cycle
//! type) and Cantor–Zassenhaus equal-degree refinement.

use super::field::FieldCtx;
use super::fp::FpCtx;
use super::poly::Poly;
use super::profile::Profile;
use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ModFactorError {
    #[error("input not squarefree mod p")]
    NotSquarefree,
    #[error("leading coefficient vanishes mod p")]
    BadLeadingCoeff,
}

pub fn is_squarefree_mod_p(f: &Poly<FpCtx>) -> bool {
    let df = f.derivative();
    if df.is_zero() {
        return false;
    }
    f.gcd(&df).is_constant()
}

/// Distinct-degree factorization of a squarefree monic polynomial:
/// returns the list of (degree d, product of the irreducible factors of
/// degree d).
pub fn ddf(f: &Poly<FpCtx>) -> Result<Vec<(usize, Poly<FpCtx>)>, ModFactorError> {
    let ctx = f.ctx;
    if f.ctx.is_zero(&f.lc()) {
        return Err(ModFactorError::BadLeadingCoeff);
    }
    let f = f.monic();
    if !is_squarefree_mod_p(&f) {
        return Err(ModFactorError::NotSquarefree);
    }
    let p = BigUint::from(ctx.p);
    let x = Poly::x(ctx);
    let mut h = x.clone(); // x^{p^d} mod current f
    let mut fm = f;
    let mut out = Vec::new();
    let mut d = 0usize;
    while fm.deg() > 0 {
        d += 1;
        if 2 * d > fm.deg() {
            // remainder is a single irreducible factor
            out.push((fm.deg(), fm.clone()));
            break;
        }
        h = h.powmod(&p, &fm);
        let g = h.sub(&x).gcd(&fm);
        if !g.is_constant() {
            out.push((d, g.clone()));
            fm = fm.exact_div(&g);
            h = h.rem(&fm);
        }
    }
    Ok(out)
}

/// The multiset of irreducible-factor degrees of a squarefree polynomial
/// mod p — the Frobenius cycle type.
pub fn ddf_degrees(f: &Poly<FpCtx>) -> Result<Profile, ModFactorError> {
    let stages = ddf(f)?;
    let mut pairs = Vec::new();
    for (d, g) in &stages {
        debug_assert_eq!(g.deg() % d, 0);
        pairs.push((*d, g.deg() / d));
    }
    Ok(Profile::from_pairs(&pairs))
}

/// Splits a product of distinct irreducibles all of degree d
/// (Cantor–Zassenhaus; p must be odd).
fn edf(f: &Poly<FpCtx>, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly<FpCtx>>) {
    if f.deg() == d {
        out.push(f.monic());
        return;
    }
    let ctx = f.ctx;
    assert!(ctx.p % 2 == 1, "equal-degree splitting needs odd p");
    let e = (BigUint::from(ctx.p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let coeffs: Vec<u64> = (0..f.deg()).map(|_| rng.gen_range(0..ctx.p)).collect();
        let a = Poly::new(ctx, coeffs);
        if a.is_constant() {
            continue;
        }
        let b = a.powmod(&e, f).sub(&Poly::one(ctx));
        let g = b.gcd(f);
        if !g.is_constant() && g.deg() < f.deg() {
            edf(&g, d, rng, out);
            edf(&f.exact_div(&g), d, rng, out);
            return;
        }
    }
}

/// Complete monic factorization of a squarefree polynomial mod an odd prime.
/// Deterministic for a fixed rng seed; output sorted for reproducibility.
pub fn factor_squarefree_mod_p(
    f: &Poly<FpCtx>,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Poly<FpCtx>>, ModFactorError> {
    let stages = ddf(f)?;
    let mut out = Vec::new();
    for (d, g) in &stages {
        if g.deg() == *d {
            out.push(g.monic());
        } else {
            edf(g, *d, rng, &mut out);
        }
    }
    out.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| cmp_coeffs(a, b)));
    Ok(out)
}

fn cmp_coeffs(a: &Poly<FpCtx>, b: &Poly<FpCtx>) -> std::cmp::Ordering {
    a.coeffs().cmp(b.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn ddf_irreducible_quadratic() {
        // x^2 + 1 mod 3 has no roots -> one factor of degree 2
        let f = Poly::from_i64(FpCtx::new(3), &[1, 0, 1]);
        assert_eq!(ddf_degrees(&f).unwrap(), Profile::from_parts(&[2]));
    }

    #[test]
    fn ddf_split_quadratic() {
        // x^2 - 1 mod 3 has roots +-1
        let f = Poly::from_i64(FpCtx::new(3), &[-1, 0, 1]);
        assert_eq!(ddf_degrees(&f).unwrap(), Profile::from_parts(&[1, 1]));
    }

    #[test]
    fn ddf_rejects_non_squarefree() {
        let f = Poly::from_i64(FpCtx::new(5), &[1, 2, 1]); // (x+1)^2
        assert_eq!(ddf_degrees(&f), Err(ModFactorError::NotSquarefree));
    }

    #[test]
    fn planted_degrees_recovered() {
        // (x^2+x+1)(x^3+x+1) irreducible mod 2? use p=5 with planted factors
        let p = FpCtx::new(7);
        let f1 = Poly::from_i64(p, &[3, 1]); // x+3
        let f2 = Poly::from_i64(p, &[1, 0, 1]); // x^2+1, irreducible mod 7
        let f3 = Poly::from_i64(p, &[1, 1, 0, 1]); // x^3+x+1, no roots mod 7
        let f = f1.mul(&f2).mul(&f3);
        let degs = ddf_degrees(&f).unwrap();
        assert_eq!(degs, Profile::from_parts(&[1, 2, 3]));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let facs = factor_squarefree_mod_p(&f, &mut rng).unwrap();
        let mut re = Poly::one(p);
        for g in &facs {
            re = re.mul(g);
        }
        assert_eq!(re, f.monic());
        let mut got: Vec<usize> = facs.iter().map(|g| g.deg()).collect();
        got.sort();
        assert_eq!(got, vec![1, 2, 3]);
    }
}
