//! Factorization over Q: squarefree split, a good prime, modular
//! factorization, Hensel lifting to a coefficient bound, and subset
//! recombination. Factor counts for the degree-31 targets here are small,
//! so plain subset enumeration is all the recombination we need.

use super::field::{Rational, QQ};
use super::hensel;
use super::modfactor;
use super::padic::ZpkCtx;
use super::poly::Poly;
use super::primes::primes_from;
use super::sqfree::yun_with;
use super::zpoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Complete irreducible factorization: f = constant * prod factor_i^mult_i
/// with monic irreducible factors, sorted deterministically.
pub fn factor_over_q(f: &Poly<QQ>) -> (Rational, Vec<(Poly<QQ>, usize)>) {
    assert!(!f.is_zero(), "factorization of zero");
    let (constant, sq_parts) = yun_with(f, zpoly::gcd_qq);
    let mut out: Vec<(Poly<QQ>, usize)> = Vec::new();
    for (part, mult) in sq_parts {
        for g in factor_squarefree(&part) {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.deg()
            .cmp(&b.0.deg())
            .then_with(|| cmp_poly(&a.0, &b.0))
            .then_with(|| a.1.cmp(&b.1))
    });
    (constant, out)
}

fn cmp_poly(a: &Poly<QQ>, b: &Poly<QQ>) -> std::cmp::Ordering {
    for i in (0..=a.deg().max(b.deg())).rev() {
        let o = a.coeff(i).cmp(&b.coeff(i));
        if o != std::cmp::Ordering::Equal {
            return o;
        }
    }
    std::cmp::Ordering::Equal
}

/// Smallest prime >= 37 with unit leading coefficient and squarefree image.
/// Starting past the working degrees keeps the modular factor counts honest.
pub fn good_prime(coeffs: &[BigInt]) -> u64 {
    for p in primes_from(37) {
        let pb = BigInt::from(p);
        if (coeffs.last().unwrap() % &pb).is_zero() {
            continue;
        }
        let fp = zpoly::reduce_mod_p(coeffs, p);
        if modfactor::is_squarefree_mod_p(&fp) {
            return p;
        }
    }
    unreachable!("squarefree integer polynomial has good primes")
}

/// Monic irreducible factors of a squarefree polynomial over Q.
fn factor_squarefree(f: &Poly<QQ>) -> Vec<Poly<QQ>> {
    if f.deg() == 1 {
        return vec![f.monic()];
    }
    let (_, fi) = zpoly::to_primitive_integer(f);
    let p = good_prime(&fi);
    let fp = zpoly::reduce_mod_p(&fi, p).monic();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a55);
    let modular = modfactor::factor_squarefree_mod_p(&fp, &mut rng).expect("good prime");
    if modular.len() == 1 {
        return vec![f.monic()];
    }
    // precision: p^k beyond twice the factor coefficient bound
    let bound = zpoly::factor_coeff_bound(&fi);
    let mut k = 1u32;
    let mut pk = BigInt::from(p);
    while pk <= &bound * 2 {
        pk *= p;
        k += 1;
    }
    let lifted = hensel::lift_factorization(&fi, &modular, k).expect("coprime by squarefreeness");
    recombine(&fi, lifted, p, k)
        .into_iter()
        .map(|g| zpoly::from_integer(&g).monic())
        .collect()
}

/// Zassenhaus subset search over the lifted modular factors.
fn recombine(f: &[BigInt], lifted: Vec<Vec<BigInt>>, p: u64, k: u32) -> Vec<Vec<BigInt>> {
    let ctx = ZpkCtx::new(p, k);
    let mut remaining: Vec<Vec<BigInt>> = lifted;
    let mut w: Vec<BigInt> = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for subset in subsets(&idxs, size) {
            if let Some(g) = try_subset(&w, &remaining, &subset, &ctx) {
                w = exact_div_int(&w, &g);
                let mut keep = Vec::new();
                for (i, fac) in remaining.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(fac);
                    }
                }
                remaining = keep;
                out.push(g);
                continue 'outer;
            }
        }
        size += 1;
    }
    if w.len() > 1 {
        // primitive part of what is left is irreducible
        let prim = primitive(&w);
        out.push(prim);
    }
    out.sort();
    out
}

/// Candidate factor from a subset: lc(w) * prod of lifted factors, symmetric
/// residues, primitive part; accepted iff it divides w over Z.
fn try_subset(
    w: &[BigInt],
    factors: &[Vec<BigInt>],
    subset: &[usize],
    ctx: &ZpkCtx,
) -> Option<Vec<BigInt>> {
    let mut prod = Poly::constant(ctx.clone(), ctx.reduce(w.last().unwrap()));
    for &i in subset {
        prod = prod.mul(&Poly::new(ctx.clone(), factors[i].clone()));
    }
    let cand: Vec<BigInt> = prod.coeffs().iter().map(|c| ctx.symmetric(c)).collect();
    let cand = primitive(&cand);
    // cheap rejection mod an unrelated prime before the exact division;
    // wrong subsets almost never survive it
    for q in primes_from(1u64 << 62) {
        let qb = BigInt::from(q);
        if (w.last().unwrap() % &qb).is_zero() || (cand.last().unwrap() % &qb).is_zero() {
            continue;
        }
        let wq = zpoly::reduce_mod_p(w, q);
        let cq = zpoly::reduce_mod_p(&cand, q);
        if !wq.rem(&cq).is_zero() {
            return None;
        }
        break;
    }
    divides_int(&cand, w).then_some(cand)
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut content = BigInt::zero();
    for c in v {
        content = content.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    v.iter().map(|c| c / &content).collect()
}

fn divides_int(g: &[BigInt], f: &[BigInt]) -> bool {
    let fq = zpoly::from_integer(f);
    let gq = zpoly::from_integer(g);
    let (_, r) = fq.divrem(&gq);
    if !r.is_zero() {
        return false;
    }
    // quotient must be integral for a true Z[x] divisor of a primitive f
    let q = fq.exact_div(&gq);
    q.coeffs().iter().all(|c| c.denom().is_one())
}

fn exact_div_int(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let q = zpoly::from_integer(f).exact_div(&zpoly::from_integer(g));
    q.coeffs().iter().map(|c| c.numer().clone()).collect()
}

fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, size, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, size, 0, &mut cur, &mut out);
    out
}

/// Certifies irreducibility of a single polynomial (used for spot checks):
/// true if the factorization returns one factor of full degree.
pub fn is_irreducible(f: &Poly<QQ>) -> bool {
    let (_, facs) = factor_over_q(f);
    facs.len() == 1 && facs[0].1 == 1 && facs[0].0.deg() == f.deg()
}

#[cfg(test)]
mod tests {
    use super::super::field::rat_int;
    use super::*;

    fn recompose(c: &Rational, facs: &[(Poly<QQ>, usize)]) -> Poly<QQ> {
        let mut acc = Poly::constant(QQ, c.clone());
        for (g, m) in facs {
            acc = acc.mul(&g.pow(*m as u64));
        }
        acc
    }

    #[test]
    fn x4_minus_1() {
        let f = Poly::from_i64(QQ, &[-1, 0, 0, 0, 1]);
        let (c, facs) = factor_over_q(&f);
        assert_eq!(c, rat_int(1));
        let degs: Vec<usize> = facs.iter().map(|(g, _)| g.deg()).collect();
        assert_eq!(degs, vec![1, 1, 2]);
        assert_eq!(recompose(&c, &facs), f);
    }

    #[test]
    fn repeated_factors() {
        // 3 (x-1)^2 (x^2+x+1)
        let f = Poly::from_i64(QQ, &[-1, 1])
            .pow(2)
            .mul(&Poly::from_i64(QQ, &[1, 1, 1]))
            .mul_scalar(&rat_int(3));
        let (c, facs) = factor_over_q(&f);
        assert_eq!(c, rat_int(3));
        assert_eq!(recompose(&c, &facs), f);
        assert_eq!(facs.len(), 2);
    }

    #[test]
    fn irreducible_stays_whole() {
        // x^5 - x - 1 is irreducible over Q
        let f = Poly::from_i64(QQ, &[-1, -1, 0, 0, 0, 1]);
        assert!(is_irreducible(&f));
    }

    #[test]
    fn swinnerton_dyer_like() {
        // (x^2-2)(x^2-3)(x^2-6): splits nowhere into linears over Q but in
        // many pieces mod p; exercises recombination.
        let f = Poly::from_i64(QQ, &[-2, 0, 1])
            .mul(&Poly::from_i64(QQ, &[-3, 0, 1]))
            .mul(&Poly::from_i64(QQ, &[-6, 0, 1]));
        let (c, facs) = factor_over_q(&f);
        assert_eq!(recompose(&c, &facs), f);
        assert_eq!(facs.len(), 3);
        assert!(facs.iter().all(|(g, _)| g.deg() == 2));
    }
}
