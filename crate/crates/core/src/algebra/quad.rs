//! Quadratic extensions Q(sqrt(d)) for a squarefree integer d.

use super::field::{FieldCtx, Rational, QQ};
use num_bigint::BigInt;
use num_traits::Zero;

/// Element a + b*sqrt(d); `d` lives in the context.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadElem {
    pub a: Rational,
    pub b: Rational,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadCtx {
    pub d: BigInt,
}

impl QuadCtx {
    pub fn new(d: i64) -> Self {
        QuadCtx { d: BigInt::from(d) }
    }

    /// d need not be squarefree, only a non-square, so adjoining sqrt(n*m)
    /// models Q(sqrt(n/m)) without factoring anything.
    pub fn new_big(d: BigInt) -> Self {
        QuadCtx { d }
    }

    pub fn embed(&self, a: Rational) -> QuadElem {
        QuadElem {
            a,
            b: Rational::zero(),
        }
    }

    pub fn elem(&self, a: Rational, b: Rational) -> QuadElem {
        QuadElem { a, b }
    }

    pub fn sqrt_d(&self) -> QuadElem {
        QuadElem {
            a: Rational::zero(),
            b: QQ.one(),
        }
    }

    /// The nontrivial field automorphism a + b*sqrt(d) -> a - b*sqrt(d).
    pub fn conj(&self, x: &QuadElem) -> QuadElem {
        QuadElem {
            a: x.a.clone(),
            b: -&x.b,
        }
    }

    /// Field norm a^2 - d b^2.
    pub fn norm(&self, x: &QuadElem) -> Rational {
        &x.a * &x.a - Rational::from_integer(self.d.clone()) * &x.b * &x.b
    }

    pub fn is_rational(&self, x: &QuadElem) -> bool {
        x.b.is_zero()
    }
}

impl FieldCtx for QuadCtx {
    type Elem = QuadElem;

    fn zero(&self) -> QuadElem {
        self.embed(Rational::zero())
    }
    fn one(&self) -> QuadElem {
        self.embed(QQ.one())
    }
    fn from_i64(&self, n: i64) -> QuadElem {
        self.embed(QQ.from_i64(n))
    }
    fn add(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        QuadElem {
            a: &x.a + &y.a,
            b: &x.b + &y.b,
        }
    }
    fn sub(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        QuadElem {
            a: &x.a - &y.a,
            b: &x.b - &y.b,
        }
    }
    fn mul(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        let d = Rational::from_integer(self.d.clone());
        QuadElem {
            a: &x.a * &y.a + &d * &x.b * &y.b,
            b: &x.a * &y.b + &x.b * &y.a,
        }
    }
    fn neg(&self, x: &QuadElem) -> QuadElem {
        QuadElem { a: -&x.a, b: -&x.b }
    }
    fn inv(&self, x: &QuadElem) -> Option<QuadElem> {
        let n = self.norm(x);
        if n.is_zero() {
            return None; // zero, or d a square (not a field) — neither occurs here
        }
        let c = self.conj(x);
        Some(QuadElem {
            a: &c.a / &n,
            b: &c.b / &n,
        })
    }
    fn is_zero(&self, x: &QuadElem) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::rat_int;
    use super::*;

    #[test]
    fn conjugation_is_ring_automorphism() {
        let k = QuadCtx::new(-7);
        let x = k.elem(rat_int(3), rat_int(2));
        let y = k.elem(rat_int(-1), rat_int(5));
        assert_eq!(k.conj(&k.mul(&x, &y)), k.mul(&k.conj(&x), &k.conj(&y)));
        assert_eq!(k.conj(&k.add(&x, &y)), k.add(&k.conj(&x), &k.conj(&y)));
    }

    #[test]
    fn inverse() {
        let k = QuadCtx::new(-7);
        let x = k.elem(rat_int(11), rat_int(-1));
        let i = k.inv(&x).unwrap();
        assert_eq!(k.mul(&x, &i), k.one());
    }
}
