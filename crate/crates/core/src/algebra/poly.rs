//! Dense univariate polynomials over any [`FieldCtx`].
//!
//! Degrees in this crate stay small (≤ 31 in x, ≤ ~70 in auxiliary
//! variables), so a dense coefficient vector is the right representation.

use super::field::FieldCtx;

/// `c[i]` is the coefficient of `x^i`; trailing zeros are trimmed, so the
/// zero polynomial has an empty vector.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<C: FieldCtx> {
    pub ctx: C,
    c: Vec<C::Elem>,
}

impl<C: FieldCtx> Poly<C> {
    pub fn new(ctx: C, mut coeffs: Vec<C::Elem>) -> Self {
        while let Some(last) = coeffs.last() {
            if ctx.is_zero(last) {
                coeffs.pop();
            } else {
                break;
            }
        }
        Poly { ctx, c: coeffs }
    }

    pub fn zero(ctx: C) -> Self {
        Poly { ctx, c: vec![] }
    }

    pub fn one(ctx: C) -> Self {
        let e = ctx.one();
        Poly::new(ctx, vec![e])
    }

    pub fn constant(ctx: C, e: C::Elem) -> Self {
        Poly::new(ctx, vec![e])
    }

    pub fn x(ctx: C) -> Self {
        let c = vec![ctx.zero(), ctx.one()];
        Poly::new(ctx, c)
    }

    /// `e * x^k`
    pub fn monomial(ctx: C, e: C::Elem, k: usize) -> Self {
        let mut c = vec![ctx.zero(); k + 1];
        c[k] = e;
        Poly::new(ctx, c)
    }

    pub fn from_i64(ctx: C, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&n| ctx.from_i64(n)).collect();
        Poly::new(ctx, c)
    }

    pub fn coeffs(&self) -> &[C::Elem] {
        &self.c
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> C::Elem {
        self.c.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    /// Degree of a known-nonzero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lc(&self) -> C::Elem {
        self.c.last().cloned().expect("lc of zero polynomial")
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.ctx.add(&self.coeff(i), &rhs.coeff(i)));
        }
        Poly::new(self.ctx.clone(), c)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.ctx.sub(&self.coeff(i), &rhs.coeff(i)));
        }
        Poly::new(self.ctx.clone(), c)
    }

    pub fn neg(&self) -> Self {
        let c = self.c.iter().map(|e| self.ctx.neg(e)).collect();
        Poly::new(self.ctx.clone(), c)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.ctx.clone());
        }
        let mut c = vec![self.ctx.zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if self.ctx.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] = self.ctx.add(&c[i + j], &self.ctx.mul(a, b));
            }
        }
        Poly::new(self.ctx.clone(), c)
    }

    pub fn mul_scalar(&self, s: &C::Elem) -> Self {
        let c = self.c.iter().map(|e| self.ctx.mul(e, s)).collect();
        Poly::new(self.ctx.clone(), c)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one(self.ctx.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Division with remainder. Requires the leading coefficient of `rhs`
    /// to be a unit.
    pub fn divrem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let ctx = self.ctx.clone();
        let dr = rhs.deg();
        if self.is_zero() || self.deg() < dr {
            return (Poly::zero(ctx), self.clone());
        }
        let lcinv = ctx.inv(&rhs.lc()).expect("divisor lc not a unit");
        let mut rem = self.c.clone();
        let dq = self.deg() - dr;
        let mut q = vec![ctx.zero(); dq + 1];
        for i in (0..=dq).rev() {
            let t = ctx.mul(&rem[i + dr], &lcinv);
            if ctx.is_zero(&t) {
                continue;
            }
            q[i] = t.clone();
            for (j, b) in rhs.c.iter().enumerate() {
                rem[i + j] = ctx.sub(&rem[i + j], &ctx.mul(&t, b));
            }
        }
        (Poly::new(ctx.clone(), q), Poly::new(ctx, rem))
    }

    pub fn rem(&self, rhs: &Self) -> Self {
        self.divrem(rhs).1
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.divrem(rhs);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn monic(&self) -> Self {
        assert!(!self.is_zero());
        let inv = self.ctx.inv(&self.lc()).expect("lc not a unit");
        self.mul_scalar(&inv)
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Poly::zero(self.ctx.clone());
        }
        let mut c = Vec::with_capacity(self.c.len() - 1);
        for (i, e) in self.c.iter().enumerate().skip(1) {
            c.push(self.ctx.mul(&self.ctx.from_i64(i as i64), e));
        }
        Poly::new(self.ctx.clone(), c)
    }

    pub fn eval(&self, x: &C::Elem) -> C::Elem {
        let mut acc = self.ctx.zero();
        for e in self.c.iter().rev() {
            acc = self.ctx.add(&self.ctx.mul(&acc, x), e);
        }
        acc
    }

    /// `self(g(x))`
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Poly::zero(self.ctx.clone());
        for e in self.c.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(self.ctx.clone(), e.clone()));
        }
        acc
    }

    /// Modular exponentiation `self^e mod m`.
    pub fn powmod(&self, e: &num_bigint::BigUint, m: &Self) -> Self {
        use num_traits::Zero;
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.ctx.clone());
        let mut e = e.clone();
        let one: num_bigint::BigUint = num_traits::One::one();
        while !e.is_zero() {
            if (&e & &one) == one {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if !e.is_zero() {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Maps coefficients into another scalar domain.
    pub fn map<D: FieldCtx>(&self, ctx: D, f: impl Fn(&C::Elem) -> D::Elem) -> Poly<D> {
        let c = self.c.iter().map(|e| f(e)).collect();
        Poly::new(ctx, c)
    }
}

/// Lagrange interpolation: the unique polynomial of degree < points.len()
/// through the given (x, y) pairs. Abscissae must be pairwise distinct.
pub fn interpolate<C: FieldCtx>(ctx: &C, points: &[(C::Elem, C::Elem)]) -> Poly<C> {
    let mut acc = Poly::zero(ctx.clone());
    for (i, (xi, yi)) in points.iter().enumerate() {
        // numerator prod_{j != i} (x - xj), denominator prod (xi - xj)
        let mut num = Poly::one(ctx.clone());
        let mut den = ctx.one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let lin = Poly::new(ctx.clone(), vec![ctx.neg(xj), ctx.one()]);
            num = num.mul(&lin);
            den = ctx.mul(&den, &ctx.sub(xi, xj));
        }
        let s = ctx.div(yi, &den);
        acc = acc.add(&num.mul_scalar(&s));
    }
    acc
}
