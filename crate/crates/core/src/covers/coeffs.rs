//! The fourteen coefficient functions of the degree-31 family, as exact
//! rational functions of the parameter alpha. Transcription fidelity is
//! cross-checked by the alpha=0 specialization comparison, which matches
//! an independently recorded expansion coefficient for coefficient.

use crate::algebra::ratfunc::{RatFunc, RatFuncCtx};
use crate::algebra::{Poly, Rational, QQ};

fn p(coeffs: &[i64]) -> Poly<QQ> {
    Poly::from_i64(QQ, coeffs)
}

/// (alpha + c)^e
fn shift_pow(c: i64, e: u64) -> Poly<QQ> {
    p(&[c, 1]).pow(e)
}

fn scaled(s: i64, factors: &[Poly<QQ>]) -> Poly<QQ> {
    let mut out = p(&[s]);
    for f in factors {
        out = out.mul(f);
    }
    out
}

pub struct FamilyCoefficients {
    pub a: [RatFunc; 14],
}

impl FamilyCoefficients {
    pub fn new() -> Self {
        let am2 = || shift_pow(-2, 1);
        let am2sq = || shift_pow(-2, 2);
        let ap1 = |e| shift_pow(1, e);
        let ap4 = || shift_pow(4, 1);
        let mk = |num: Poly<QQ>, den: Poly<QQ>| RatFuncCtx.make(num, den);
        let a = [
            mk(
                p(&[182, -109, -6, -37, 2]),
                am2().mul(&ap1(2)),
            ),
            mk(
                scaled(-6, &[p(&[-16, -5, 2]), p(&[44, 17, 10, 1])]),
                am2().mul(&ap1(1)).mul(&ap4()),
            ),
            mk(
                scaled(-4, &[p(&[6152, -1926, -507, -1343, -261, -93, 2])]),
                am2().mul(&ap1(1)).mul(&ap4()),
            ),
            mk(
                scaled(
                    2,
                    &[p(&[
                        -56384, 256224, -50196, -72480, -52905, -30597, -3834, -1410, 159, 31,
                    ])],
                ),
                am2sq().mul(&ap1(1)).mul(&ap4().pow(2)),
            ),
            mk(
                scaled(
                    -6,
                    &[p(&[
                        61888, -102688, -116372, -25744, -19319, 2966, 1042, 452, 241, 6,
                    ])],
                ),
                am2sq().mul(&ap4().pow(2)),
            ),
            mk(
                scaled(
                    -4,
                    &[
                        ap1(2),
                        p(&[44048, -35740, 2166, -7724, -2075, -237, -337, 23]),
                    ],
                ),
                am2sq().mul(&ap4()),
            ),
            mk(
                scaled(
                    4,
                    &[
                        ap1(3),
                        p(&[-46384, -5764, -7536, -4367, -407, -489, 5, 38]),
                    ],
                ),
                am2sq().mul(&ap4()),
            ),
            mk(
                scaled(-3, &[ap1(4), p(&[4724, 300, -3, 532, 66, 96, 29])]),
                am2sq(),
            ),
            mk(
                scaled(3, &[ap1(6), p(&[188, 752, 333, 140, 53, 6])]),
                am2sq(),
            ),
            mk(scaled(-6, &[ap1(9), ap4()]), am2()),
            mk(scaled(-1, &[ap1(2)]), Poly::one(QQ)),
            mk(
                scaled(1, &[ap1(1), p(&[-8, -16, 1])]),
                am2().mul(&ap4()),
            ),
            mk(scaled(-3, &[ap1(2)]), Poly::one(QQ)),
            mk(scaled(1, &[ap1(3), ap4()]), am2()),
        ];
        FamilyCoefficients { a }
    }

    /// All fourteen values at a rational alpha; None if any pole is hit.
    pub fn eval(&self, alpha: &Rational) -> Option<Vec<Rational>> {
        self.a.iter().map(|f| RatFuncCtx.eval(f, alpha)).collect()
    }
}

impl Default for FamilyCoefficients {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{rat, rat_int};
    use crate::algebra::FieldCtx;

    #[test]
    fn fixed_shape_coefficients() {
        let c = FamilyCoefficients::new();
        // a11 = -(alpha+1)^2 and a13 = -3(alpha+1)^2 are polynomial
        assert!(c.a[10].den.is_constant());
        assert_eq!(c.a[10].num, p(&[-1, -2, -1]));
        assert!(c.a[12].den.is_constant());
        assert_eq!(c.a[12].num, p(&[-3, -6, -3]));
    }

    #[test]
    fn poles_only_at_degenerate_alpha() {
        let c = FamilyCoefficients::new();
        for f in &c.a {
            let (_, facs) = crate::algebra::factor::factor_over_q(&f.den);
            for (q, _) in facs {
                assert_eq!(q.deg(), 1);
                let root = QQ.neg(&(q.coeff(0) / q.lc()));
                assert!(
                    [rat_int(2), rat_int(-1), rat_int(-4)].contains(&root),
                    "unexpected pole at {:?}",
                    root
                );
            }
        }
    }

    #[test]
    fn values_at_zero() {
        let c = FamilyCoefficients::new();
        let v = c.eval(&rat_int(0)).unwrap();
        assert_eq!(v[0], rat_int(-91)); // a1(0)
        assert_eq!(v[10], rat_int(-1)); // a11(0): g0 = x^2 - 6x - 1
        assert_eq!(v[13], rat_int(-2)); // a14(0) = 4 / (-2)
        assert!(c.eval(&rat_int(-4)).is_none());
        assert!(c.eval(&rat(-1, 1)).is_none());
        assert!(c.eval(&rat_int(2)).is_none());
    }
}
