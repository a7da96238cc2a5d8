//! p-adic roundtrip for the degenerate cover: its defining equations are
//! seeded mod 11 from the exact certificate, Newton-lifted with precision
//! doubling to 11^64, verified coefficient by coefficient at full precision,
//! and the quadratic coefficients are then recovered from their residues by
//! lattice reduction. Agreement with the exact values closes the loop.

use super::degenerate::{degenerate_cover, verify_degenerate};
use super::CoversError;
use crate::algebra::padic::ZpkCtx;
use crate::algebra::quad::QuadElem;
use crate::algebra::zpoly::mod_inverse;
use crate::lattice::{algdep_padic, quad_min_poly};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub struct NewtonRoundtrip {
    pub p: u64,
    pub k: u32,
    /// reconstructed integer minimal polynomials of a1..a5 and t0,
    /// lowest-first
    pub minpolys: Vec<Vec<BigInt>>,
    /// the same polynomials computed from the exact values
    pub expected: Vec<Vec<BigInt>>,
}

/// (value, derivative with respect to the one active unknown) mod m.
#[derive(Clone)]
struct Dual {
    v: BigInt,
    d: BigInt,
}

fn dmul(x: &Dual, y: &Dual, m: &BigInt) -> Dual {
    Dual {
        v: (&x.v * &y.v) % m,
        d: (&x.v * &y.d + &x.d * &y.v) % m,
    }
}

fn dsub(x: &Dual, y: &Dual, m: &BigInt) -> Dual {
    Dual {
        v: (&x.v - &y.v) % m,
        d: (&x.d - &y.d) % m,
    }
}

fn dconst(n: i64) -> Dual {
    Dual {
        v: BigInt::from(n),
        d: BigInt::zero(),
    }
}

fn pmul(a: &[Dual], b: &[Dual], m: &BigInt) -> Vec<Dual> {
    let mut out = vec![
        Dual {
            v: BigInt::zero(),
            d: BigInt::zero()
        };
        a.len() + b.len() - 1
    ];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let t = dmul(x, y, m);
            out[i + j].v = (&out[i + j].v + t.v) % m;
            out[i + j].d = (&out[i + j].d + t.d) % m;
        }
    }
    out
}

fn ppow(a: &[Dual], e: usize, m: &BigInt) -> Vec<Dual> {
    let mut out = vec![dconst(1)];
    for _ in 0..e {
        out = pmul(&out, a, m);
    }
    out
}

/// The 31 low coefficients of p - t0 q - u v^2 as functions of the 29
/// unknowns z = (a1..a5, t0, u0..u14, v0..v7), with the derivative in the
/// active unknown carried along. The leading coefficient cancels identically.
fn residuals(z: &[BigInt], active: Option<usize>, m: &BigInt) -> Vec<Dual> {
    let var = |i: usize| Dual {
        v: z[i].clone(),
        d: if active == Some(i) {
            BigInt::one()
        } else {
            BigInt::zero()
        },
    };
    // p = x^21 (x-1)^7 (x-a1)^3
    let xm1 = vec![dconst(-1), dconst(1)];
    let p_tail = pmul(
        &ppow(&xm1, 7, m),
        &ppow(&[dsub(&dconst(0), &var(0), m), dconst(1)], 3, m),
        m,
    );
    let mut p = vec![dconst(0); 21];
    p.extend(p_tail);
    // q = (x^2 - 2x + a2)^8 (x^3 - 2x^2 + a3 x + a4)^4 (x - a5)
    let quad = vec![var(1), dconst(-2), dconst(1)];
    let cubic = vec![var(3), var(2), dconst(-2), dconst(1)];
    let q = pmul(
        &pmul(&ppow(&quad, 8, m), &ppow(&cubic, 4, m), m),
        &[dsub(&dconst(0), &var(4), m), dconst(1)],
        m,
    );
    // u v^2 with u, v monic
    let mut u: Vec<Dual> = (6..21).map(var).collect();
    u.push(dconst(1));
    let mut v: Vec<Dual> = (21..29).map(var).collect();
    v.push(dconst(1));
    let uv2 = pmul(&u, &pmul(&v, &v, m), m);
    let t0 = var(5);
    let mut out = Vec::with_capacity(31);
    for i in 0..31 {
        // deg q = 29 < 31
        let qi = if i < q.len() {
            dmul(&t0, &q[i], m)
        } else {
            dconst(0)
        };
        out.push(dsub(&dsub(&p[i], &qi, m), &uv2[i], m));
    }
    out
}

fn nonneg(x: BigInt, m: &BigInt) -> BigInt {
    let r = x % m;
    if r < BigInt::zero() {
        r + m
    } else {
        r
    }
}

/// Row-reduces the 31 x 29 Jacobian mod p and returns 29 equation indices
/// forming an invertible square system.
fn select_rows(jac: &[Vec<BigInt>], p: &BigInt) -> Result<Vec<usize>, CoversError> {
    let rows = jac.len();
    let cols = jac[0].len();
    let mut m: Vec<Vec<BigInt>> = jac
        .iter()
        .map(|r| r.iter().map(|x| nonneg(x.clone(), p)).collect())
        .collect();
    let mut chosen = Vec::new();
    let mut used = vec![false; rows];
    for c in 0..cols {
        let pivot = (0..rows).find(|&r| !used[r] && !m[r][c].is_zero());
        let Some(r0) = pivot else {
            return Err(CoversError::Reconstruction(
                "Jacobian is singular mod p".into(),
            ));
        };
        used[r0] = true;
        chosen.push(r0);
        let inv = mod_inverse(&m[r0][c], p).unwrap();
        for r in 0..rows {
            if r == r0 || m[r][c].is_zero() {
                continue;
            }
            let f = nonneg(&m[r][c] * &inv, p);
            for j in c..cols {
                m[r][j] = nonneg(&m[r][j] - &f * &m[r0][j], p);
            }
        }
    }
    chosen.sort();
    Ok(chosen)
}

/// Solves the square unit-pivot system J delta = f mod m in place.
fn solve(mut jac: Vec<Vec<BigInt>>, mut f: Vec<BigInt>, p: &BigInt, m: &BigInt) -> Vec<BigInt> {
    let n = f.len();
    for c in 0..n {
        let r0 = (c..n)
            .find(|&r| !(&jac[r][c] % p).is_zero())
            .expect("pivot is a unit by row selection");
        jac.swap(c, r0);
        f.swap(c, r0);
        let inv = mod_inverse(&nonneg(jac[c][c].clone(), m), m).unwrap();
        for j in c..n {
            jac[c][j] = nonneg(&jac[c][j] * &inv, m);
        }
        f[c] = nonneg(&f[c] * &inv, m);
        for r in 0..n {
            if r == c || jac[r][c].is_zero() {
                continue;
            }
            let factor = jac[r][c].clone();
            for j in c..n {
                jac[r][j] = nonneg(&jac[r][j] - &factor * &jac[c][j], m);
            }
            f[r] = nonneg(&f[r] - &factor * &f[c], m);
        }
    }
    f
}

fn embed(ctx: &ZpkCtx, sqrt_d: &BigInt, x: &QuadElem) -> BigInt {
    ctx.reduce(&(ctx.from_rational(&x.a) + ctx.from_rational(&x.b) * sqrt_d))
}

/// Runs the full roundtrip at precision p^k. Fails if the lift stalls, the
/// full-precision residuals are nonzero, or lattice reduction recovers a
/// polynomial other than the exact minimal polynomial.
pub fn newton_roundtrip(p: u64, k: u32) -> Result<NewtonRoundtrip, CoversError> {
    let cert = verify_degenerate()?;
    let dc = degenerate_cover();
    // square root of d mod p^k, seeded from the smaller root mod p
    let d = dc.k.d.clone();
    let pb = BigInt::from(p);
    let r0 = (0..p)
        .find(|&r| (BigInt::from(r) * r - &d) % &pb == BigInt::zero())
        .ok_or_else(|| CoversError::Reconstruction("d is not a square mod p".into()))?;
    let fx = vec![-d.clone(), BigInt::zero(), BigInt::one()];
    let sqrt_d = crate::algebra::hensel::lift_root(&fx, p, r0, k)
        .map_err(|e| CoversError::Reconstruction(e.to_string()))?;
    let full = ZpkCtx::new(p, k);

    // seed all 29 unknowns mod p from the exact certificate
    let c1 = ZpkCtx::new(p, 1);
    let s1 = c1.reduce(&sqrt_d);
    let mut z: Vec<BigInt> = Vec::with_capacity(29);
    for a in &dc.a {
        z.push(embed(&c1, &s1, a));
    }
    z.push(embed(&c1, &s1, &cert.t0));
    for i in 0..15 {
        z.push(embed(&c1, &s1, &cert.u.coeff(i)));
    }
    for i in 0..8 {
        z.push(embed(&c1, &s1, &cert.v.coeff(i)));
    }

    // equation selection from the Jacobian mod p
    let jac_p: Vec<Vec<BigInt>> = {
        let cols: Vec<Vec<Dual>> = (0..29).map(|i| residuals(&z, Some(i), &c1.pk)).collect();
        (0..31)
            .map(|e| (0..29).map(|i| cols[i][e].d.clone()).collect())
            .collect()
    };
    let rows = select_rows(&jac_p, &pb)?;

    // Newton with precision doubling: correct mod p^e -> correct mod p^2e
    let mut e = 1u32;
    while e < k {
        e = (2 * e).min(k);
        let ctx = ZpkCtx::new(p, e);
        let cols: Vec<Vec<Dual>> = (0..29).map(|i| residuals(&z, Some(i), &ctx.pk)).collect();
        let jac: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|&r| (0..29).map(|i| nonneg(cols[i][r].d.clone(), &ctx.pk)).collect())
            .collect();
        let f: Vec<BigInt> = rows
            .iter()
            .map(|&r| nonneg(cols[0][r].v.clone(), &ctx.pk))
            .collect();
        let delta = solve(jac, f, &pb, &ctx.pk);
        for (zi, di) in z.iter_mut().zip(&delta) {
            *zi = nonneg(&*zi - di, &ctx.pk);
        }
    }

    // every one of the 31 coefficient equations must vanish at p^k,
    // including the two left out of the square system
    for (i, r) in residuals(&z, None, &full.pk).iter().enumerate() {
        if !nonneg(r.v.clone(), &full.pk).is_zero() {
            return Err(CoversError::Reconstruction(format!(
                "equation {i} fails at full precision"
            )));
        }
    }

    // lattice reconstruction of a1..a5 and t0 against the exact values
    let height = BigInt::one() << 64;
    let mut minpolys = Vec::new();
    let mut expected = Vec::new();
    let exact: Vec<&QuadElem> = dc.a.iter().chain(std::iter::once(&cert.t0)).collect();
    for (i, x) in exact.iter().enumerate() {
        let mp = algdep_padic(&z[i], &full, 2, &height)
            .map_err(|e| CoversError::Reconstruction(e.to_string()))?;
        let want = quad_min_poly(&x.a, &x.b, -7);
        if mp != want {
            return Err(CoversError::Reconstruction(format!(
                "unknown {i}: reconstructed {mp:?}, exact {want:?}"
            )));
        }
        minpolys.push(mp);
        expected.push(want);
    }
    Ok(NewtonRoundtrip {
        p,
        k,
        minpolys,
        expected,
    })
}
