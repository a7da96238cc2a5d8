//! The 15/16 splitting witness: pulling the alpha = 1/2 member back along
//! the normalized alpha = 0 rational map gives, at a generic rational base
//! point s, a degree-31 polynomial that factors over Q into degrees 15 and
//! 16. Both sides are first rescaled in t so their branch quadratics take
//! the shape t^2 + t + lambda, which is what makes the two base curves
//! match up; the shared lambda value is a precondition.

use super::branch::branch_locus;
use super::family::family;
use super::CoversError;
use crate::algebra::factor::factor_over_q;
use crate::algebra::field::{rat, Rational};
use crate::algebra::{Poly, QQ};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};

pub struct SplitReport {
    /// (s, sorted irreducible factor degrees) per sample
    pub samples: Vec<(Rational, Vec<usize>)>,
}

/// Runs the pullback at `count` seeded random rational base points and
/// checks every factor-degree multiset is {15, 16}.
pub fn split_1516(seed: u64, count: usize) -> Result<SplitReport, CoversError> {
    let c0 = family(&rat(0, 1))?;
    let ch = family(&rat(1, 2))?;
    let b0 = branch_locus(&c0)?;
    let bh = branch_locus(&ch)?;
    if b0.lambda != bh.lambda {
        return Err(CoversError::Split(
            "normalized branch quadratics disagree".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::new();
    while samples.len() < count {
        let s = rat(rng.gen_range(-100i64..=100), rng.gen_range(1i64..=8));
        let f = match pullback_fiber(&c0, &ch, &b0.b, &bh.b, &s) {
            Some(f) => f,
            None => continue,
        };
        let (_, parts) = factor_over_q(&f);
        if parts.iter().any(|(_, m)| *m > 1) {
            continue; // s hit a ramified fiber; resample
        }
        let mut degs: Vec<usize> = parts.iter().map(|(g, _)| g.deg()).collect();
        degs.sort();
        if degs != [15, 16] {
            return Err(CoversError::Split(format!(
                "factor degrees {degs:?} at s = {s}"
            )));
        }
        samples.push((s, degs));
    }
    Ok(SplitReport { samples })
}

/// The fiber polynomial A_h(x) * b0 * B_0(s) - A_0(s) * bh * B_h(x): the
/// alpha = 1/2 member evaluated at the normalized parameter value
/// u = A_0(s) / (b0 * B_0(s)), cleared of denominators. b0 and bh are the
/// linear coefficients of the two branch quadratics (the t-rescales).
pub fn pullback_fiber(
    c0: &super::CoverPolynomial,
    ch: &super::CoverPolynomial,
    b0: &Rational,
    bh: &Rational,
    s: &Rational,
) -> Option<Poly<QQ>> {
    let b0s = c0.b.eval(s);
    if b0s.is_zero() {
        return None;
    }
    let lhs = ch.a.mul_scalar(&(b0 * &b0s));
    let rhs = ch.b.mul_scalar(&(c0.a.eval(s) * bh));
    let f = lhs.sub(&rhs);
    if f.deg() != 31 {
        return None;
    }
    Some(f)
}
