//! The ring Z/p^k, used as truncated p-adic integers.

use super::field::FieldCtx;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Context for arithmetic mod p^k. Values are canonical representatives in
/// [0, p^k).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZpkCtx {
    pub p: BigInt,
    pub k: u32,
    pub pk: BigInt,
}

impl ZpkCtx {
    pub fn new(p: u64, k: u32) -> Self {
        let p = BigInt::from(p);
        let pk = p.pow(k);
        ZpkCtx { p, k, pk }
    }

    pub fn reduce(&self, n: &BigInt) -> BigInt {
        n.mod_floor(&self.pk)
    }

    /// Representative in (-p^k/2, p^k/2].
    pub fn symmetric(&self, n: &BigInt) -> BigInt {
        let r = self.reduce(n);
        if &r * 2 > self.pk {
            r - &self.pk
        } else {
            r
        }
    }

    /// Ring map down to precision k' <= k.
    pub fn truncate(&self, n: &BigInt, k2: u32) -> BigInt {
        assert!(k2 <= self.k);
        n.mod_floor(&self.p.pow(k2))
    }

    /// Image of a rational with denominator prime to p.
    pub fn from_rational(&self, x: &super::field::Rational) -> BigInt {
        let num = self.reduce(x.numer());
        let den = self.reduce(x.denom());
        let deninv = self.inv(&den).expect("denominator not a p-unit");
        self.reduce(&(num * deninv))
    }
}

impl FieldCtx for ZpkCtx {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        if self.pk.is_one() {
            BigInt::zero()
        } else {
            BigInt::one()
        }
    }
    fn from_i64(&self, n: i64) -> BigInt {
        self.reduce(&BigInt::from(n))
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(&(a + b))
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(&(a - b))
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(&(a * b))
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        self.reduce(&(-a))
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        let e = a.extended_gcd(&self.pk);
        if e.gcd.is_one() {
            Some(self.reduce(&e.x))
        } else {
            None
        }
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.mod_floor(&self.pk).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_is_ring_map() {
        let c = ZpkCtx::new(7, 5);
        let c2 = ZpkCtx::new(7, 3);
        let a = BigInt::from(12345);
        let b = BigInt::from(9876);
        let prod_then_trunc = c.truncate(&c.mul(&a, &b), 3);
        let trunc_then_prod = c2.mul(&c2.reduce(&a), &c2.reduce(&b));
        assert_eq!(prod_then_trunc, trunc_then_prod);
    }

    #[test]
    fn unit_inverse() {
        let c = ZpkCtx::new(11, 4);
        let a = BigInt::from(123);
        let i = c.inv(&a).unwrap();
        assert_eq!(c.mul(&a, &i), BigInt::one());
        assert!(c.inv(&BigInt::from(22)).is_none());
    }
}
