//! Hensel lifting: simple roots by quadratic Newton steps, and coprime
//! factorizations mod p raised to mod p^k by linear steps.

use super::field::FieldCtx;
use super::fp::FpCtx;
use super::padic::ZpkCtx;
use super::poly::Poly;
use super::zpoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum HenselError {
    #[error("not a root mod p")]
    NotARoot,
    #[error("singular root: f'(r) = 0 mod p")]
    SingularRoot,
    #[error("factors not coprime mod p")]
    FactorsNotCoprime,
    #[error("factorization does not match f mod p")]
    FactorizationMismatch,
}

/// Lifts a simple root r of f mod p to a root mod p^k. Quadratic
/// convergence: each Newton step doubles the number of correct digits.
pub fn lift_root(f: &[BigInt], p: u64, r: u64, k: u32) -> Result<BigInt, HenselError> {
    let ctx1 = ZpkCtx::new(p, 1);
    let fp = zpoly::reduce_mod_p(f, p);
    if fp.eval(&(r % p)) != 0 {
        return Err(HenselError::NotARoot);
    }
    let dfp = fp.derivative();
    if dfp.eval(&(r % p)) == 0 {
        return Err(HenselError::SingularRoot);
    }
    let _ = ctx1;
    let mut prec = 1u32;
    let mut root = BigInt::from(r % p);
    while prec < k {
        prec = (prec * 2).min(k);
        let ctx = ZpkCtx::new(p, prec);
        let fz = Poly::new(ctx.clone(), f.iter().map(|c| ctx.reduce(c)).collect());
        let dfz = fz.derivative();
        let fv = fz.eval(&root);
        let dv = dfz.eval(&root);
        let dinv = ctx.inv(&dv).expect("derivative unit by simple-root check");
        root = ctx.sub(&root, &ctx.mul(&fv, &dinv));
    }
    Ok(root)
}

/// One linear Hensel step for a coprime pair, all arithmetic on integer
/// coefficient vectors. Invariants: f = g*h mod p^j, g monic,
/// s*g + t*h = 1 mod p.
struct PairLift {
    p: u64,
    g: Vec<BigInt>,
    h: Vec<BigInt>,
    g0: Poly<FpCtx>,
    h0: Poly<FpCtx>,
    t: Poly<FpCtx>,
}

impl PairLift {
    fn new(f: &[BigInt], g0: Poly<FpCtx>, h0: Poly<FpCtx>) -> Result<Self, HenselError> {
        let p = g0.ctx.p;
        let fp = zpoly::reduce_mod_p(f, p);
        if g0.mul(&h0) != fp {
            return Err(HenselError::FactorizationMismatch);
        }
        // extended Euclid for s g0 + t h0 = 1
        let (gcd, s, t) = extended_gcd_poly(&g0, &h0);
        if !gcd.is_constant() {
            return Err(HenselError::FactorsNotCoprime);
        }
        let cinv = g0.ctx.inv(&gcd.coeff(0)).unwrap();
        let s = s.mul_scalar(&cinv);
        let t = t.mul_scalar(&cinv);
        debug_assert_eq!(s.mul(&g0).add(&t.mul(&h0)), Poly::one(g0.ctx));
        Ok(PairLift {
            p,
            g: lift_coeffs(&g0),
            h: lift_coeffs(&h0),
            g0,
            h0,
            t,
        })
    }

    /// Raises the factorization from mod p^j to mod p^{j+1}.
    fn step(&mut self, f: &[BigInt], j: u32) {
        let pj = BigInt::from(self.p).pow(j);
        let prod = mul_int(&self.g, &self.h);
        let mut e = sub_int(f, &prod);
        for c in &mut e {
            let (q, r) = c.div_rem(&pj);
            debug_assert!(r.is_zero());
            *c = q;
        }
        let ep = zpoly::reduce_mod_p(&e, self.p);
        if ep.is_zero() {
            let m = &pj * self.p;
            mod_reduce(&mut self.g, &m);
            mod_reduce(&mut self.h, &m);
            return;
        }
        // delta_g = (t e) mod g0 ; delta_h = (e - delta_g h0) / g0
        let dg = self.t.mul(&ep).rem(&self.g0);
        let dh = ep.sub(&dg.mul(&self.h0)).exact_div(&self.g0);
        add_scaled(&mut self.g, &dg, &pj);
        add_scaled(&mut self.h, &dh, &pj);
        let m = &pj * self.p;
        mod_reduce(&mut self.g, &m);
        mod_reduce(&mut self.h, &m);
    }
}

fn lift_coeffs(f: &Poly<FpCtx>) -> Vec<BigInt> {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

fn mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

fn sub_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
            x - y
        })
        .collect()
}

fn add_scaled(acc: &mut Vec<BigInt>, d: &Poly<FpCtx>, scale: &BigInt) {
    if acc.len() < d.coeffs().len() {
        acc.resize(d.coeffs().len(), BigInt::zero());
    }
    for (i, &c) in d.coeffs().iter().enumerate() {
        acc[i] += scale * BigInt::from(c);
    }
}

fn mod_reduce(v: &mut [BigInt], m: &BigInt) {
    for c in v.iter_mut() {
        *c = c.mod_floor(m);
    }
}

fn extended_gcd_poly(a: &Poly<FpCtx>, b: &Poly<FpCtx>) -> (Poly<FpCtx>, Poly<FpCtx>, Poly<FpCtx>) {
    let ctx = a.ctx;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(ctx), Poly::zero(ctx));
    let (mut t0, mut t1) = (Poly::zero(ctx), Poly::one(ctx));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        (r0, r1) = (r1, r);
        let ns = s0.sub(&q.mul(&s1));
        (s0, s1) = (s1, ns);
        let nt = t0.sub(&q.mul(&t1));
        (t0, t1) = (t1, nt);
    }
    (r0, s0, t0)
}

/// Lifts a pairwise-coprime monic factorization of f mod p (so that
/// f = lc(f) * prod(g_i) mod p) to the analogous monic factorization mod
/// p^k. Returns integer coefficient vectors with entries in [0, p^k).
pub fn lift_factorization(
    f: &[BigInt],
    factors: &[Poly<FpCtx>],
    k: u32,
) -> Result<Vec<Vec<BigInt>>, HenselError> {
    assert!(!factors.is_empty());
    let p = factors[0].ctx.p;
    let ctx = ZpkCtx::new(p, k);
    if factors.len() == 1 {
        // f is lc * g mod p^k only when g is the whole thing; return monic f mod p^k
        let fk: Vec<BigInt> = f.iter().map(|c| ctx.reduce(c)).collect();
        let fz = Poly::new(ctx.clone(), fk);
        let lcinv = ctx
            .inv(&fz.lc())
            .ok_or(HenselError::FactorizationMismatch)?;
        return Ok(vec![fz.mul_scalar(&lcinv).coeffs().to_vec()]);
    }
    let fp_ctx = factors[0].ctx;
    let g0 = factors[0].clone();
    let mut h0 = Poly::constant(fp_ctx, zpoly::reduce_mod_p(f, p).lc());
    for g in &factors[1..] {
        h0 = h0.mul(g);
    }
    let mut pair = PairLift::new(f, g0, h0)?;
    for j in 1..k {
        pair.step(f, j);
    }
    let g_final = pair.g.iter().map(|c| ctx.reduce(c)).collect::<Vec<_>>();
    // recurse on the cofactor with the remaining factors
    let rest = lift_factorization(&pair.h, &factors[1..], k)?;
    let mut out = vec![g_final];
    out.extend(rest);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_mod_49() {
        // f = x^2 - 2, p = 7, r = 3, k = 2 -> 10
        let f = vec![BigInt::from(-2), BigInt::zero(), BigInt::from(1)];
        let r = lift_root(&f, 7, 3, 2).unwrap();
        assert_eq!(r, BigInt::from(10));
    }

    #[test]
    fn k_one_returns_seed() {
        let f = vec![BigInt::from(-2), BigInt::zero(), BigInt::from(1)];
        assert_eq!(lift_root(&f, 7, 3, 1).unwrap(), BigInt::from(3));
    }

    #[test]
    fn singular_root_rejected() {
        // f = (x-3)^2 mod 7: root 3 is singular
        let f = vec![BigInt::from(9), BigInt::from(-6), BigInt::from(1)];
        assert_eq!(lift_root(&f, 7, 3, 4), Err(HenselError::SingularRoot));
    }

    #[test]
    fn precision_coherence() {
        let f = vec![BigInt::from(-2), BigInt::zero(), BigInt::from(1)];
        let r5 = lift_root(&f, 7, 3, 5).unwrap();
        let r4 = lift_root(&f, 7, 3, 4).unwrap();
        let c = ZpkCtx::new(7, 5);
        assert_eq!(c.truncate(&r5, 4), r4);
    }

    #[test]
    fn factor_lift_roundtrip() {
        // f = (x^2+1)(x-3)(x+5) * 2, lift mod 7^6
        let fp = FpCtx::new(7);
        let f: Vec<BigInt> = {
            let a = Poly::from_i64(crate::algebra::field::QQ, &[1, 0, 1]);
            let b = Poly::from_i64(crate::algebra::field::QQ, &[-3, 1]);
            let c = Poly::from_i64(crate::algebra::field::QQ, &[5, 1]);
            let two = Poly::from_i64(crate::algebra::field::QQ, &[2]);
            let prod = a.mul(&b).mul(&c).mul(&two);
            prod.coeffs().iter().map(|x| x.numer().clone()).collect()
        };
        let factors = vec![
            Poly::from_i64(fp, &[1, 0, 1]),
            Poly::from_i64(fp, &[-3, 1]),
            Poly::from_i64(fp, &[5, 1]),
        ];
        let lifted = lift_factorization(&f, &factors, 6).unwrap();
        let ctx = ZpkCtx::new(7, 6);
        let mut prod = Poly::constant(ctx.clone(), ctx.from_i64(2));
        for g in &lifted {
            prod = prod.mul(&Poly::new(ctx.clone(), g.clone()));
        }
        let f_red = Poly::new(ctx.clone(), f.iter().map(|c| ctx.reduce(c)).collect());
        assert_eq!(prod, f_red);
    }
}
