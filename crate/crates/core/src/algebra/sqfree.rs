//! Yun squarefree decomposition over characteristic-zero fields, and the
//! multiplicity profile of a polynomial (optionally completed projectively).

use super::field::FieldCtx;
use super::poly::Poly;
use super::profile::Profile;

/// f = constant * prod_i part_i^i with the parts monic, squarefree and
/// pairwise coprime. Entries are (part, multiplicity); constant = lc(f).
pub fn yun<C: FieldCtx>(f: &Poly<C>) -> (C::Elem, Vec<(Poly<C>, usize)>) {
    yun_with(f, |a, b| a.gcd(b))
}

/// Yun with a pluggable gcd, so Q can use the multimodular one.
pub fn yun_with<C: FieldCtx>(
    f: &Poly<C>,
    gcd: impl Fn(&Poly<C>, &Poly<C>) -> Poly<C>,
) -> (C::Elem, Vec<(Poly<C>, usize)>) {
    assert!(!f.is_zero(), "squarefree decomposition of zero");
    let lc = f.lc();
    let f = f.monic();
    if f.is_constant() {
        return (lc, vec![]);
    }
    let df = f.derivative();
    let a0 = gcd(&f, &df);
    let mut b = f.exact_div(&a0);
    let mut c = df.exact_div(&a0);
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1usize;
    while !b.is_constant() {
        let g = gcd(&b, &d);
        if !g.is_constant() {
            out.push((g.clone(), i));
        }
        b = b.exact_div(&g);
        c = d.exact_div(&g);
        d = c.sub(&b.derivative());
        i += 1;
    }
    (lc, out)
}

/// Root-multiplicity profile over an algebraic closure: each squarefree part
/// of degree d and multiplicity m contributes d parts equal to m.
pub fn multiplicity_profile<C: FieldCtx>(f: &Poly<C>) -> Profile {
    let (_, parts) = yun(f);
    let mut ps = Vec::new();
    for (g, m) in &parts {
        for _ in 0..g.deg() {
            ps.push(*m);
        }
    }
    Profile::from_parts(&ps)
}

/// Profile over Q through the multimodular gcd; same result as
/// multiplicity_profile, much faster for large coefficients.
pub fn multiplicity_profile_qq(f: &Poly<super::field::QQ>) -> Profile {
    let (_, parts) = yun_with(f, super::zpoly::gcd_qq);
    let mut ps = Vec::new();
    for (g, m) in &parts {
        for _ in 0..g.deg() {
            ps.push(*m);
        }
    }
    Profile::from_parts(&ps)
}

/// Profile completed projectively relative to a stated degree bound: a root
/// at infinity of multiplicity `bound - deg f` is appended when deg f < bound.
pub fn multiplicity_profile_projective<C: FieldCtx>(f: &Poly<C>, bound: usize) -> Profile {
    let p = multiplicity_profile(f);
    let d = f.deg();
    assert!(d <= bound);
    if d < bound {
        p.with_part(bound - d)
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::{rat_int, QQ};
    use super::*;

    #[test]
    fn cube_profile() {
        // x^3 -> 3^1
        let f = Poly::from_i64(QQ, &[0, 0, 0, 1]);
        assert_eq!(multiplicity_profile(&f).to_string(), "3");
    }

    #[test]
    fn recomposition() {
        // (x-1)^2 (x+2)^3 * 5
        let f = Poly::from_i64(QQ, &[-1, 1])
            .pow(2)
            .mul(&Poly::from_i64(QQ, &[2, 1]).pow(3))
            .mul_scalar(&rat_int(5));
        let (c, parts) = yun(&f);
        assert_eq!(c, rat_int(5));
        let mut re = Poly::constant(QQ, c);
        for (g, m) in &parts {
            re = re.mul(&g.pow(*m as u64));
        }
        assert_eq!(re, f);
        assert_eq!(multiplicity_profile(&f).to_string(), "3.2");
    }

    #[test]
    fn projective_completion() {
        let f = Poly::from_i64(QQ, &[0, 1]); // x, completed to degree 3
        assert_eq!(multiplicity_profile_projective(&f, 3).to_string(), "2.1");
    }
}
