//! The rational function field Q(alpha) in one variable.

use super::field::{FieldCtx, Rational, QQ};
use super::poly::Poly;

/// num/den with den monic and gcd(num, den) = 1.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc {
    pub num: Poly<QQ>,
    pub den: Poly<QQ>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RatFuncCtx;

impl RatFuncCtx {
    pub fn make(&self, num: Poly<QQ>, den: Poly<QQ>) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::one(QQ),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g);
        let mut den = den.exact_div(&g);
        let lcinv = QQ.inv(&den.lc()).unwrap();
        num = num.mul_scalar(&lcinv);
        den = den.mul_scalar(&lcinv);
        RatFunc { num, den }
    }

    pub fn from_poly(&self, num: Poly<QQ>) -> RatFunc {
        RatFunc {
            num,
            den: Poly::one(QQ),
        }
    }

    pub fn var(&self) -> RatFunc {
        self.from_poly(Poly::x(QQ))
    }

    /// Evaluation at a rational point; None at a pole.
    pub fn eval(&self, f: &RatFunc, x: &Rational) -> Option<Rational> {
        let d = f.den.eval(x);
        if QQ.is_zero(&d) {
            return None;
        }
        Some(f.num.eval(x) / d)
    }

    pub fn is_pole(&self, f: &RatFunc, x: &Rational) -> bool {
        QQ.is_zero(&f.den.eval(x))
    }
}

impl FieldCtx for RatFuncCtx {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        self.from_poly(Poly::zero(QQ))
    }
    fn one(&self) -> RatFunc {
        self.from_poly(Poly::one(QQ))
    }
    fn from_i64(&self, n: i64) -> RatFunc {
        self.from_poly(Poly::from_i64(QQ, &[n]))
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let num = a.num.mul(&b.den).add(&b.num.mul(&a.den));
        self.make(num, a.den.mul(&b.den))
    }
    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let num = a.num.mul(&b.den).sub(&b.num.mul(&a.den));
        self.make(num, a.den.mul(&b.den))
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        self.make(a.num.mul(&b.num), a.den.mul(&b.den))
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFunc {
            num: a.num.neg(),
            den: a.den.clone(),
        }
    }
    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        if a.num.is_zero() {
            None
        } else {
            Some(self.make(a.den.clone(), a.num.clone()))
        }
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.num.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::rat_int;
    use super::*;

    #[test]
    fn reduction() {
        // (x^2 - 1)/(x - 1) reduces to x + 1
        let f = RatFuncCtx.make(Poly::from_i64(QQ, &[-1, 0, 1]), Poly::from_i64(QQ, &[-1, 1]));
        assert_eq!(f.num, Poly::from_i64(QQ, &[1, 1]));
        assert!(f.den.is_constant());
    }

    #[test]
    fn field_ops() {
        let c = RatFuncCtx;
        let x = c.var();
        let inv = c.inv(&x).unwrap();
        assert_eq!(c.mul(&x, &inv), c.one());
        assert_eq!(c.eval(&inv, &rat_int(0)), None);
    }
}
