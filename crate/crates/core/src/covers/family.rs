//! The degree-31 cover family f = A(x) - t*B(x) at a rational parameter
//! value, its fiber profiles at t=0 and t=infinity, and the exact
//! comparison of the alpha=0 member against its independently recorded
//! expanded form.

use super::coeffs::FamilyCoefficients;
use super::CoversError;
use crate::algebra::profile::Profile;
use crate::algebra::sqfree::{multiplicity_profile_qq, multiplicity_profile_projective};
use crate::algebra::{FieldCtx, Poly, Rational, QQ};

/// f = A - t*B with A = f0^3 (x-3) of degree 31 and B = g0^8 g1^4 x of
/// degree 29.
pub struct CoverPolynomial {
    pub a: Poly<QQ>,
    pub b: Poly<QQ>,
    pub alpha: Rational,
    pub f0: Poly<QQ>,
    pub g0: Poly<QQ>,
    pub g1: Poly<QQ>,
}

pub const DEGENERATE_ALPHAS: [i64; 3] = [2, -1, -4];

pub fn is_degenerate_alpha(alpha: &Rational) -> bool {
    DEGENERATE_ALPHAS
        .iter()
        .any(|&d| *alpha == Rational::from_integer(d.into()))
}

pub fn family(alpha: &Rational) -> Result<CoverPolynomial, CoversError> {
    if is_degenerate_alpha(alpha) {
        return Err(CoversError::DegenerateAlpha(alpha.clone()));
    }
    let coeffs = FamilyCoefficients::new()
        .eval(alpha)
        .ok_or_else(|| CoversError::DegenerateAlpha(alpha.clone()))?;
    // f0 = x^10 + a1 x^9 + ... + a10, ascending storage
    let mut f0c = Vec::with_capacity(11);
    for i in (0..10).rev() {
        f0c.push(coeffs[i].clone());
    }
    f0c.push(QQ.one());
    let f0 = Poly::new(QQ, f0c);
    let g0 = Poly::new(QQ, vec![coeffs[10].clone(), QQ.from_i64(-6), QQ.one()]);
    let g1 = Poly::new(
        QQ,
        vec![
            coeffs[13].clone(),
            coeffs[12].clone(),
            coeffs[11].clone(),
            QQ.one(),
        ],
    );
    let a = f0.pow(3).mul(&Poly::from_i64(QQ, &[-3, 1]));
    let b = g0.pow(8).mul(&g1.pow(4)).mul(&Poly::x(QQ));
    assert_eq!(a.deg(), 31);
    assert_eq!(b.deg(), 29);
    Ok(CoverPolynomial {
        a,
        b,
        alpha: alpha.clone(),
        f0,
        g0,
        g1,
    })
}

/// Root-multiplicity profiles of the t=0 fiber (A itself) and the
/// t=infinity fiber (B, completed projectively to degree 31).
pub fn profiles(c: &CoverPolynomial) -> (Profile, Profile) {
    (
        multiplicity_profile_qq(&c.a),
        multiplicity_profile_projective(&c.b, 31),
    )
}

/// The expanded alpha=0 member, recorded independently of the coefficient
/// formulas: quintic factors of f0 and the split of g1 into a quadratic
/// and a linear factor.
pub fn specialized_zero_reference() -> (Poly<QQ>, Poly<QQ>) {
    let q1 = Poly::from_i64(QQ, &[-3, -75, -150, -110, -95, 1]);
    let q2 = Poly::from_i64(QQ, &[-4, 53, 56, -38, 4, 1]);
    let a = q1
        .pow(3)
        .mul(&q2.pow(3))
        .mul(&Poly::from_i64(QQ, &[-3, 1]));
    let g0 = Poly::from_i64(QQ, &[-1, -6, 1]);
    let h1 = Poly::from_i64(QQ, &[-1, -1, 1]);
    let h2 = Poly::from_i64(QQ, &[2, 1]);
    let b = g0
        .pow(8)
        .mul(&h1.pow(4))
        .mul(&h2.pow(4))
        .mul(&Poly::x(QQ));
    (a, b)
}

/// Coefficient-for-coefficient equality of family(0) with the recorded
/// expansion.
pub fn specialization_match() -> Result<(), CoversError> {
    let c = family(&Rational::from_integer(0.into()))?;
    let (a_ref, b_ref) = specialized_zero_reference();
    if c.a != a_ref || c.b != b_ref {
        return Err(CoversError::SpecializationMismatch);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{rat, rat_int};

    #[test]
    fn degenerate_alphas_rejected() {
        for d in DEGENERATE_ALPHAS {
            assert!(family(&rat_int(d)).is_err());
        }
        assert!(family(&rat_int(1)).is_ok());
    }

    #[test]
    fn alpha_zero_matches_reference() {
        specialization_match().unwrap();
    }

    #[test]
    fn fiber_profiles() {
        for al in [rat_int(0), rat(1, 2), rat_int(5)] {
            let c = family(&al).unwrap();
            let (p0, pinf) = profiles(&c);
            assert_eq!(p0, Profile::parse("3^10.1").unwrap());
            assert_eq!(pinf, Profile::parse("8^2.4^3.2.1").unwrap());
        }
    }
}
