//! Resultants and discriminants.
//!
//! Over a generic field the resultant comes from the Euclidean remainder
//! sequence. Over Q we clear denominators and go multimodular: resultants of
//! the mod-p images for enough word-size primes, recombined by CRT under a
//! Hadamard bound. That keeps the degree-31 discriminant evaluations cheap.

use super::field::{FieldCtx, Rational, QQ};
use super::poly::Poly;
use super::primes::primes_from;
use super::zpoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Res_x(f, g) over any field. Zero iff f and g share a root in a closure
/// (for nonzero inputs).
pub fn resultant_field<C: FieldCtx>(f: &Poly<C>, g: &Poly<C>) -> C::Elem {
    let ctx = f.ctx.clone();
    assert!(!f.is_zero() && !g.is_zero(), "resultant of zero polynomial");
    let mut a = f.clone();
    let mut b = g.clone();
    let mut acc = ctx.one();
    let mut sign_neg = false;
    loop {
        if b.is_constant() {
            // Res(a, c) = c^deg(a)
            let e = a.degree().unwrap_or(0);
            let mut c = ctx.one();
            let bv = b.coeff(0);
            for _ in 0..e {
                c = ctx.mul(&c, &bv);
            }
            acc = ctx.mul(&acc, &c);
            break;
        }
        let m = a.deg();
        let n = b.deg();
        let r = a.rem(&b);
        if r.is_zero() {
            return ctx.zero();
        }
        // Res(a,b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
        if (m * n) % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let k = m - r.degree().unwrap_or(0);
        let lcb = b.lc();
        for _ in 0..k {
            acc = ctx.mul(&acc, &lcb);
        }
        a = b;
        b = r;
    }
    if sign_neg {
        ctx.neg(&acc)
    } else {
        acc
    }
}

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
pub fn discriminant_field<C: FieldCtx>(f: &Poly<C>) -> C::Elem {
    let ctx = f.ctx.clone();
    assert!(
        f.degree().map_or(false, |d| d >= 1),
        "discriminant needs degree >= 1"
    );
    let df = f.derivative();
    if df.is_zero() {
        return ctx.zero();
    }
    let r = resultant_field(f, &df);
    let n = f.deg();
    let v = ctx.div(&r, &f.lc());
    if (n * (n - 1) / 2) % 2 == 1 {
        ctx.neg(&v)
    } else {
        v
    }
}

/// Resultant of two nonzero integer polynomials, multimodular.
pub fn resultant_int(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let m = f.len() - 1;
    let n = g.len() - 1;
    assert!(!f.last().unwrap().is_zero() && !g.last().unwrap().is_zero());
    if m == 0 {
        return f[0].pow(n as u32);
    }
    if n == 0 {
        return g[0].pow(m as u32);
    }
    // Hadamard: Res^2 <= |f|_2^{2n} |g|_2^{2m}
    let bound_sq = zpoly::norm2_sq(f).pow(n as u32) * zpoly::norm2_sq(g).pow(m as u32);
    let mut residues = Vec::new();
    let mut moduli = Vec::new();
    let mut prod_sq = BigInt::one();
    // 2^62-range primes keep products in u128
    for p in primes_from(1u64 << 62) {
        let fb = BigInt::from(p);
        if (f.last().unwrap() % &fb).is_zero() || (g.last().unwrap() % &fb).is_zero() {
            continue;
        }
        let fp = zpoly::reduce_mod_p(f, p);
        let gp = zpoly::reduce_mod_p(g, p);
        residues.push(resultant_field(&fp, &gp));
        moduli.push(p);
        prod_sq *= BigInt::from(p).pow(2);
        if prod_sq > &bound_sq * 4u32 {
            break;
        }
    }
    zpoly::crt_symmetric(&residues, &moduli)
}

/// Resultant over Q through the primitive-integer route.
pub fn resultant_qq(f: &Poly<QQ>, g: &Poly<QQ>) -> Rational {
    assert!(!f.is_zero() && !g.is_zero());
    let (cf, fi) = zpoly::to_primitive_integer(f);
    let (cg, gi) = zpoly::to_primitive_integer(g);
    let r = resultant_int(&fi, &gi);
    // Res(cf F, cg G) = cf^deg g * cg^deg f * Res(F, G)
    let mut scale = Rational::one();
    for _ in 0..g.deg() {
        scale *= &cf;
    }
    for _ in 0..f.deg() {
        scale *= &cg;
    }
    Rational::from_integer(r) * scale
}

pub fn discriminant_qq(f: &Poly<QQ>) -> Rational {
    assert!(f.deg() >= 1);
    let df = f.derivative();
    if df.is_zero() {
        return Rational::zero();
    }
    let r = resultant_qq(f, &df);
    let n = f.deg();
    let v = r / f.lc();
    if (n * (n - 1) / 2) % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Resultant of f(x) with g(x) evaluated many times: disc of A - t*B as a
/// polynomial in t, by interpolation through integer values of t.
pub fn disc_in_t<C: FieldCtx>(
    a: &Poly<C>,
    b: &Poly<C>,
    disc: impl Fn(&Poly<C>) -> C::Elem,
) -> Poly<C> {
    let ctx = a.ctx.clone();
    // deg_t of disc(A - tB) is at most deg A + deg B - 1 (Sylvester entries
    // are linear in t); sample a couple extra and verify.
    let dbound = a.deg() + b.deg();
    let npts = dbound + 3;
    let mut pts = Vec::with_capacity(npts);
    for i in 0..npts {
        let t = ctx.from_i64(i as i64);
        let ft = a.sub(&b.mul_scalar(&t));
        pts.push((t, disc(&ft)));
    }
    let d = super::poly::interpolate(&ctx, &pts[..dbound + 1]);
    for (t, v) in &pts[dbound + 1..] {
        assert!(
            d.eval(t) == *v,
            "disc interpolation inconsistent: degree bound violated"
        );
    }
    d
}

/// disc_x(A - tB) over Q as an exact polynomial in t, multimodular: one
/// reduction of A, B per prime serves every interpolation point, which is
/// far cheaper than independent rational discriminants.
pub fn disc_poly_in_t_qq(a: &Poly<QQ>, b: &Poly<QQ>) -> Poly<QQ> {
    assert!(a.deg() >= 1 && a.deg() > b.deg(), "need deg A > deg B");
    let n = a.deg();
    // common integer model l*A, l*B; disc is homogeneous of degree 2n-2
    let mut l = BigInt::one();
    for c in a.coeffs().iter().chain(b.coeffs()) {
        l = num_integer::Integer::lcm(&l, c.denom());
    }
    let lr = Rational::from_integer(l.clone());
    let ai: Vec<BigInt> = a.coeffs().iter().map(|c| (c * &lr).to_integer()).collect();
    let mut bi: Vec<BigInt> = b.coeffs().iter().map(|c| (c * &lr).to_integer()).collect();
    bi.resize(ai.len(), BigInt::zero());

    let dbound = 2 * n - 2;
    let npts = dbound + 3;
    // one Hadamard bound covering every sample point: coefficientwise
    // |a_i| + t_max |b_i| dominates each |a_i - j b_i|
    let tmax = BigInt::from(npts - 1);
    let fmax: Vec<BigInt> = ai
        .iter()
        .zip(&bi)
        .map(|(x, y)| x.abs() + &tmax * y.abs())
        .collect();
    let dfmax: Vec<BigInt> = fmax
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let need: BigInt =
        zpoly::norm2_sq(&fmax).pow((n - 1) as u32) * zpoly::norm2_sq(&dfmax).pow(n as u32) * 4u32;

    let mut residues: Vec<Vec<u64>> = vec![Vec::new(); npts];
    let mut moduli = Vec::new();
    let mut prod_sq = BigInt::one();
    for p in primes_from(1u64 << 62) {
        let fb = BigInt::from(p);
        if (ai.last().unwrap() % &fb).is_zero() {
            continue;
        }
        let ap = zpoly::reduce_mod_p(&ai, p);
        let bp = zpoly::reduce_mod_p(&bi, p);
        let ctx = ap.ctx.clone();
        for (j, res) in residues.iter_mut().enumerate() {
            let t = ctx.reduce_i64(j as i64);
            let fj = ap.sub(&bp.mul_scalar(&t));
            res.push(discriminant_field(&fj));
        }
        moduli.push(p);
        prod_sq *= BigInt::from(p).pow(2);
        if prod_sq > need {
            break;
        }
    }
    let values: Vec<BigInt> = residues
        .iter()
        .map(|r| zpoly::crt_symmetric(r, &moduli))
        .collect();
    // back to disc(A - tB) = disc(l*A - t*l*B) / l^(2n-2)
    let div = Rational::from_integer(l.pow(dbound as u32));
    let pts: Vec<(Rational, Rational)> = values
        .into_iter()
        .enumerate()
        .map(|(j, v)| {
            (
                Rational::from_integer(j.into()),
                Rational::from_integer(v) / &div,
            )
        })
        .collect();
    let d = super::poly::interpolate(&QQ, &pts[..dbound + 1]);
    for (t, v) in &pts[dbound + 1..] {
        assert!(d.eval(t) == *v, "disc interpolation degree bound violated");
    }
    d
}

#[cfg(test)]
mod tests {
    use super::super::field::{rat_int, QQ};
    use super::*;

    #[test]
    fn res_linear() {
        // Res(x^2 - 1, x - 2) = 3
        let f = Poly::from_i64(QQ, &[-1, 0, 1]);
        let g = Poly::from_i64(QQ, &[-2, 1]);
        assert_eq!(resultant_field(&f, &g), rat_int(3));
        assert_eq!(resultant_qq(&f, &g), rat_int(3));
    }

    #[test]
    fn res_constant() {
        // Res(f, c) = c^deg f
        let f = Poly::from_i64(QQ, &[1, 2, 0, 7]);
        let c = Poly::from_i64(QQ, &[5]);
        assert_eq!(resultant_field(&f, &c), rat_int(125));
    }

    #[test]
    fn res_common_root() {
        let f = Poly::from_i64(QQ, &[1, 0, 1]);
        assert_eq!(resultant_field(&f, &f), rat_int(0));
    }

    #[test]
    fn disc_quadratic() {
        // disc(x^2 + bx + c) = b^2 - 4c, at b=-6, c=-1: 40
        let f = Poly::from_i64(QQ, &[-1, -6, 1]);
        assert_eq!(discriminant_field(&f), rat_int(40));
        assert_eq!(discriminant_qq(&f), rat_int(40));
    }

    #[test]
    fn disc_repeated_root() {
        // (x-1)^2
        let f = Poly::from_i64(QQ, &[1, -2, 1]);
        assert_eq!(discriminant_qq(&f), rat_int(0));
    }

    #[test]
    fn disc_poly_matches_generic_route() {
        use super::super::field::rat;
        let a = Poly::new(
            QQ,
            vec![rat(1, 3), rat_int(-2), rat(7, 2), rat_int(0), rat_int(1), rat_int(2)],
        );
        let b = Poly::from_i64(QQ, &[5, -1, 0, 4]);
        let fast = disc_poly_in_t_qq(&a, &b);
        let slow = disc_in_t(&a, &b, discriminant_qq);
        assert_eq!(fast, slow);
    }

    #[test]
    fn multimodular_matches_field() {
        let f = Poly::from_i64(QQ, &[3, -1, 0, 0, 9, 2]);
        let g = Poly::from_i64(QQ, &[-7, 5, 1, 11]);
        assert_eq!(resultant_qq(&f, &g), resultant_field(&f, &g));
    }
}
