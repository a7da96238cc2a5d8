//! Branch locus of a family member in the t-line: the discriminant in t
//! factors as unit * t^e * (t^2 + Bt + C)^8, and the scaling-invariant
//! lambda = C/B^2 locates the member on the base curve. The two roots of
//! the quadratic carry the involution fibers.

use super::family::CoverPolynomial;
use super::CoversError;
use crate::algebra::field::perfect_sqrt;
use crate::algebra::profile::Profile;
use crate::algebra::resultant::disc_poly_in_t_qq;
use crate::algebra::sqfree::{multiplicity_profile_qq, yun_with};
use crate::algebra::{FieldCtx, Poly, Rational, QQ};
use num_traits::{Signed, Zero};

pub struct BranchLocus {
    pub t_exponent: usize,
    /// monic branch quadratic t^2 + b t + c
    pub b: Rational,
    pub c: Rational,
    pub lambda: Rational,
}

pub fn branch_locus(cover: &CoverPolynomial) -> Result<BranchLocus, CoversError> {
    let d = disc_poly_in_t_qq(&cover.a, &cover.b);
    let coeffs = d.coeffs();
    let e = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("discriminant in t is nonzero");
    let cof = Poly::new(QQ, coeffs[e..].to_vec());
    let (_, parts) = yun_with(&cof, crate::algebra::zpoly::gcd_qq);
    let quad = match parts.as_slice() {
        [(q, 8)] if q.deg() == 2 => q.monic(),
        _ => {
            return Err(CoversError::BranchShape(format!(
                "squarefree split {:?}",
                parts.iter().map(|(q, m)| (q.deg(), *m)).collect::<Vec<_>>()
            )))
        }
    };
    let b = quad.coeff(1);
    let c = quad.coeff(0);
    if c.is_zero() {
        return Err(CoversError::BranchShape("branch point at t=0".into()));
    }
    let disc = &b * &b - Rational::from_integer(4.into()) * &c;
    if disc.is_zero() {
        return Err(CoversError::BranchShape("double branch point".into()));
    }
    if b.is_zero() {
        return Err(CoversError::BranchShape("lambda undefined (B = 0)".into()));
    }
    let lambda = &c / (&b * &b);
    Ok(BranchLocus {
        t_exponent: e,
        b,
        c,
        lambda,
    })
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = perfect_sqrt(x.numer())?;
    let d = perfect_sqrt(x.denom())?;
    Some(Rational::new(n, d))
}

/// Substitutes both roots of the branch quadratic for t and checks the
/// multiplicity profile 2^8.1^15 at each. When the roots are irrational
/// the check runs on the product of the two conjugate fibers,
/// N = A^2 + b*A*B + c*B^2 over Q: the fibers share no root (a common one
/// would be a common root of A and B), so N's profile is the disjoint
/// union of the two conjugate (hence equal) fiber profiles.
pub fn verify_2a_fibers(
    cover: &CoverPolynomial,
    locus: &BranchLocus,
) -> Result<(), CoversError> {
    let want = Profile::parse("2^8.1^15").unwrap();
    let disc = &locus.b * &locus.b - Rational::from_integer(4.into()) * &locus.c;
    if let Some(s) = rational_sqrt(&disc) {
        for sign in [1i64, -1] {
            let root =
                (QQ.neg(&locus.b) + Rational::from_integer(sign.into()) * &s) / rat2();
            let fiber = cover.a.sub(&cover.b.mul_scalar(&root));
            check_profile(multiplicity_profile_qq(&fiber), &want)?;
        }
        return Ok(());
    }
    assert!(
        crate::algebra::zpoly::gcd_qq(&cover.a, &cover.b).is_constant(),
        "A and B share a root"
    );
    let ab = cover.a.mul(&cover.b);
    let n = cover
        .a
        .mul(&cover.a)
        .add(&ab.mul_scalar(&locus.b))
        .add(&cover.b.mul(&cover.b).mul_scalar(&locus.c));
    let doubled = Profile::parse("2^16.1^30").unwrap();
    check_profile(multiplicity_profile_qq(&n), &doubled)
}

fn rat2() -> Rational {
    Rational::from_integer(2.into())
}

fn check_profile(found: Profile, want: &Profile) -> Result<(), CoversError> {
    if &found == want {
        Ok(())
    } else {
        Err(CoversError::ProfileMismatch {
            expected: want.to_string(),
            found: found.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::rat_int;
    use crate::covers::family::family;

    #[test]
    fn alpha_zero_locus_and_fibers() {
        let cover = family(&rat_int(0)).unwrap();
        let locus = branch_locus(&cover).unwrap();
        // profile 3^10.1 at t=0 forces multiplicity sum 20 there
        assert_eq!(locus.t_exponent, 20);
        assert!(!locus.lambda.is_zero());
        verify_2a_fibers(&cover, &locus).unwrap();
    }

    #[test]
    fn alpha_five_fibers() {
        let cover = family(&rat_int(5)).unwrap();
        let locus = branch_locus(&cover).unwrap();
        assert_eq!(locus.t_exponent, 20);
        verify_2a_fibers(&cover, &locus).unwrap();
    }
}
