//! The degenerate member at a special parameter value is a three-point
//! cover defined over Q(sqrt(-7)): p = x^21 (x-1)^7 (x-a1)^3 against
//! q = (x^2-2x+a2)^8 (x^3-2x^2+a3 x+a4)^4 (x-a5). Its third critical value
//! t0 is recovered from the Wronskian of (p, q), and the certificate is the
//! exact factorization p - t0 q = u v^2 with u, v squarefree and coprime.

use super::CoversError;
use crate::algebra::field::rat;
use crate::algebra::profile::Profile;
use crate::algebra::quad::{QuadCtx, QuadElem};
use crate::algebra::{FieldCtx, Poly};

pub struct DegenerateCover {
    pub k: QuadCtx,
    pub p: Poly<QuadCtx>,
    pub q: Poly<QuadCtx>,
    /// a1..a5 in order
    pub a: [QuadElem; 5],
}

pub struct DegenerateCertificate {
    pub t0: QuadElem,
    pub u: Poly<QuadCtx>,
    pub v: Poly<QuadCtx>,
    pub profile_zero: Profile,
    pub profile_infinity: Profile,
    pub profile_t0: Profile,
}

/// The recorded coefficients, as (c + s*sqrt(-7))/den.
pub fn degenerate_cover() -> DegenerateCover {
    let k = QuadCtx::new(-7);
    let e = |c: i64, s: i64, den: i64| k.elem(rat(c, den), rat(s, den));
    let a = [
        e(11, -1, 8),
        e(11, -1, 16),
        e(21, 1, 16),
        e(-31, -3, 128),
        e(3, -1, 8),
    ];
    let x = Poly::x(k.clone());
    let lin = |c: &QuadElem| Poly::new(k.clone(), vec![k.neg(c), k.one()]);
    let p = x
        .pow(21)
        .mul(&Poly::from_i64(k.clone(), &[-1, 1]).pow(7))
        .mul(&lin(&a[0]).pow(3));
    let quad = Poly::new(k.clone(), vec![a[1].clone(), k.from_i64(-2), k.one()]);
    let cubic = Poly::new(
        k.clone(),
        vec![a[3].clone(), a[2].clone(), k.from_i64(-2), k.one()],
    );
    let q = quad.pow(8).mul(&cubic.pow(4)).mul(&lin(&a[4]));
    assert_eq!(p.deg(), 31);
    assert_eq!(q.deg(), 29);
    DegenerateCover { k, p, q, a }
}

fn squarefree<C: FieldCtx>(f: &Poly<C>) -> bool {
    f.gcd(&f.derivative()).is_constant()
}

fn coprime<C: FieldCtx>(f: &Poly<C>, g: &Poly<C>) -> bool {
    f.gcd(g).is_constant()
}

fn err(msg: &str) -> CoversError {
    CoversError::Reconstruction(msg.into())
}

/// Checks the algebraic relations among the recorded coefficients, recovers
/// the third critical value t0 and certifies p - t0 q = u v^2. Returns the
/// three fiber profiles 21.7.3, 8^2.4^3.2.1 and 2^8.1^15.
pub fn verify_degenerate() -> Result<DegenerateCertificate, CoversError> {
    let dc = degenerate_cover();
    let k = dc.k.clone();
    let [a1, a2, a3, a4, a5] = dc.a.clone();

    // a1 is a root of 4x^2 - 11x + 8 and a2 = a1/2
    let rel = k.add(
        &k.sub(
            &k.mul(&k.from_i64(4), &k.mul(&a1, &a1)),
            &k.mul(&k.from_i64(11), &a1),
        ),
        &k.from_i64(8),
    );
    if !k.is_zero(&rel) {
        return Err(err("a1 fails its quadratic relation"));
    }
    if k.sub(&k.add(&a2, &a2), &a1) != k.zero() {
        return Err(err("a2 != a1/2"));
    }

    // t=0 fiber p: linear factors at 0, 1, a1 must be distinct
    if k.is_zero(&a1) || a1 == k.one() {
        return Err(err("degenerate t=0 fiber"));
    }
    let profile_zero = Profile::from_parts(&[21, 7, 3]);

    // t=infinity fiber q: quad and cubic squarefree, all factors coprime
    let quad = Poly::new(k.clone(), vec![a2.clone(), k.from_i64(-2), k.one()]);
    let cubic = Poly::new(
        k.clone(),
        vec![a4.clone(), a3.clone(), k.from_i64(-2), k.one()],
    );
    if !squarefree(&quad) || !squarefree(&cubic) {
        return Err(err("repeated root inside a t=infinity factor"));
    }
    if !coprime(&quad, &cubic)
        || k.is_zero(&quad.eval(&a5))
        || k.is_zero(&cubic.eval(&a5))
    {
        return Err(err("t=infinity factors share a root"));
    }
    let profile_infinity = Profile::from_parts(&[8, 8, 4, 4, 4, 2, 1]);

    // Wronskian p'q - pq' carries each finite critical point with
    // multiplicity one less; stripping the known fibers leaves the new
    // double points, a degree-8 polynomial v
    let w = dc
        .p
        .derivative()
        .mul(&dc.q)
        .sub(&dc.p.mul(&dc.q.derivative()));
    let x = Poly::x(k.clone());
    let lin1 = Poly::new(k.clone(), vec![k.neg(&a1), k.one()]);
    let strip = x
        .pow(20)
        .mul(&Poly::from_i64(k.clone(), &[-1, 1]).pow(6))
        .mul(&lin1.pow(2))
        .mul(&quad.pow(7))
        .mul(&cubic.pow(3));
    let (v0, r) = w.divrem(&strip);
    if !r.is_zero() {
        return Err(err("Wronskian not divisible by the known ramification"));
    }
    if v0.deg() != 8 {
        return Err(err("unexpected number of extra critical points"));
    }
    let v = v0.monic();

    // p/q is constant on the roots of v; that constant is t0
    let pr = dc.p.rem(&v);
    let qr = dc.q.rem(&v);
    let i = (0..qr.coeffs().len())
        .find(|&i| !k.is_zero(&qr.coeff(i)))
        .ok_or_else(|| err("q vanishes on the extra critical points"))?;
    let t0 = k.div(&pr.coeff(i), &qr.coeff(i));
    if pr != qr.mul_scalar(&t0) {
        return Err(err("p/q is not constant on the extra critical points"));
    }
    if k.is_zero(&t0) || k.is_rational(&t0) {
        return Err(err("t0 should be irrational and nonzero"));
    }

    // the certificate: p - t0 q = u v^2 with u, v squarefree and coprime,
    // which forces the fiber profile 2^8.1^15 at t0
    let f = dc.p.sub(&dc.q.mul_scalar(&t0));
    let (u, r) = f.divrem(&v.mul(&v));
    if !r.is_zero() {
        return Err(err("p - t0 q is not divisible by v^2"));
    }
    if u.deg() != 15 || !squarefree(&u) || !squarefree(&v) || !coprime(&u, &v) {
        return Err(err("t0 fiber is not 2^8.1^15"));
    }
    let mut parts = vec![2usize; 8];
    parts.extend(vec![1usize; 15]);
    let profile_t0 = Profile::from_parts(&parts);

    Ok(DegenerateCertificate {
        t0,
        u,
        v,
        profile_zero,
        profile_infinity,
        profile_t0,
    })
}

/// The conjugate cover certificate: applying the nontrivial automorphism of
/// Q(sqrt(-7)) to every coefficient must verify the same way.
pub fn conjugate_t0(cert: &DegenerateCertificate) -> QuadElem {
    QuadCtx::new(-7).conj(&cert.t0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificate_verifies() {
        let cert = verify_degenerate().unwrap();
        assert_eq!(cert.profile_zero.to_string(), "21.7.3");
        assert_eq!(cert.profile_infinity.to_string(), "8^2.4^3.2.1");
        assert_eq!(cert.profile_t0.to_string(), "2^8.1^15");
        // t0 and its conjugate are the two roots of a rational quadratic
        let k = QuadCtx::new(-7);
        let tr = k.add(&cert.t0, &k.conj(&cert.t0));
        assert!(k.is_rational(&tr));
    }
}
