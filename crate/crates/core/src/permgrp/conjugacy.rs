//! Conjugacy of subgroups inside an ambient group: cheap invariants first,
//! then a complete transporter search seeded at a single well-chosen
//! element, so "non-conjugate" verdicts are proofs, not failures to find.

use super::classes::class_bfs;
use super::perm::Perm;
use super::stabchain::StabChain;
use crate::algebra::profile::Profile;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq)]
pub enum ConjugacyVerdict {
    Conjugate(Perm),
    /// The invariant (or exhaustion) that separates the two subgroups.
    NonConjugate(String),
}

fn orbit_lengths(gens: &[Perm], n: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut stack = vec![s];
        seen[s] = true;
        let mut len = 0;
        while let Some(x) = stack.pop() {
            len += 1;
            for g in gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

fn subgroup_census(chain: &StabChain) -> BTreeMap<Profile, u64> {
    let mut m = BTreeMap::new();
    chain.for_each_element(&mut |g: &Perm| {
        *m.entry(g.cycle_type()).or_default() += 1;
    });
    m
}

/// Decides whether h1 and h2 are conjugate in the group given by
/// (group_gens, group_chain). Both must be subgroups of it.
pub fn subgroup_conjugacy(
    h1: &[Perm],
    h2: &[Perm],
    group_gens: &[Perm],
    group_chain: &StabChain,
) -> ConjugacyVerdict {
    let n = group_chain.degree();
    for g in h1.iter().chain(h2) {
        assert!(group_chain.contains(g), "input not inside the group");
    }
    let c1 = StabChain::new(h1, n);
    let c2 = StabChain::new(h2, n);
    if c1.order() != c2.order() {
        return ConjugacyVerdict::NonConjugate(format!(
            "orders differ: {} vs {}",
            c1.order(),
            c2.order()
        ));
    }
    if c1.order() == group_chain.order() {
        // both are the whole group
        return ConjugacyVerdict::Conjugate(Perm::identity(n));
    }
    let o1 = orbit_lengths(h1, n);
    let o2 = orbit_lengths(h2, n);
    if o1 != o2 {
        return ConjugacyVerdict::NonConjugate(format!(
            "orbit length multisets differ: {:?} vs {:?}",
            o1, o2
        ));
    }
    let s1 = subgroup_census(&c1);
    let s2 = subgroup_census(&c2);
    if s1 != s2 {
        return ConjugacyVerdict::NonConjugate("cycle-type censuses differ".into());
    }

    // complete search: any conjugator maps a fixed h in h1 to an element
    // of h2 in the same class, and the conjugators doing so form one
    // centralizer coset. Pick h of maximal order so the centralizer (and
    // with it the coset) is as small as the invariant allows.
    let mut elements1 = Vec::new();
    c1.for_each_element(&mut |g: &Perm| elements1.push(g.clone()));
    let h = elements1
        .iter()
        .filter(|g| !g.is_identity())
        .max_by_key(|g| g.order())
        .expect("nontrivial subgroup")
        .clone();
    let class = class_bfs(&h, group_gens);
    let cent = class.centralizer_chain(group_gens, group_order_u64(group_chain));
    let mut cent_elems = Vec::new();
    cent.for_each_element(&mut |z: &Perm| cent_elems.push(z.clone()));

    let mut targets = Vec::new();
    c2.for_each_element(&mut |e: &Perm| {
        if class.contains(e) {
            targets.push(e.clone());
        }
    });
    for e in &targets {
        let te = class_transporter(&class, e);
        for z in &cent_elems {
            let g = z.compose(&te);
            if h1
                .iter()
                .all(|a| c2.contains(&a.conj(&g)))
            {
                return ConjugacyVerdict::Conjugate(g);
            }
        }
    }
    ConjugacyVerdict::NonConjugate("transporter search exhausted".into())
}

fn class_transporter(class: &super::classes::ClassWithTransporters, e: &Perm) -> Perm {
    // rep^t = e
    class
        .transporter_to_rep(e)
        .expect("target in class")
        .inv()
}

fn group_order_u64(chain: &StabChain) -> u64 {
    chain.order_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> Vec<Perm> {
        vec![
            Perm::from_images(vec![1, 2, 3, 0]),
            Perm::from_images(vec![1, 0, 2, 3]),
        ]
    }

    #[test]
    fn equal_subgroups_conjugate() {
        let gens = s4();
        let chain = StabChain::new(&gens, 4);
        let h = vec![Perm::from_images(vec![1, 0, 2, 3])];
        match subgroup_conjugacy(&h, &h, &gens, &chain) {
            ConjugacyVerdict::Conjugate(g) => {
                assert!(chain.contains(&g));
            }
            v => panic!("expected conjugate, got {:?}", v),
        }
    }

    #[test]
    fn transposition_vs_double_transposition() {
        let gens = s4();
        let chain = StabChain::new(&gens, 4);
        let h1 = vec![Perm::from_images(vec![1, 0, 2, 3])]; // (1 2)
        let h2 = vec![Perm::from_images(vec![1, 0, 3, 2])]; // (1 2)(3 4)
        match subgroup_conjugacy(&h1, &h2, &gens, &chain) {
            ConjugacyVerdict::NonConjugate(_) => {}
            v => panic!("expected non-conjugate, got {:?}", v),
        }
    }

    #[test]
    fn conjugate_transpositions_found() {
        let gens = s4();
        let chain = StabChain::new(&gens, 4);
        let h1 = vec![Perm::from_images(vec![1, 0, 2, 3])]; // (1 2)
        let h2 = vec![Perm::from_images(vec![0, 1, 3, 2])]; // (3 4)
        match subgroup_conjugacy(&h1, &h2, &gens, &chain) {
            ConjugacyVerdict::Conjugate(g) => {
                let c = h1[0].conj(&g);
                assert_eq!(c, h2[0]);
            }
            v => panic!("expected conjugate, got {:?}", v),
        }
    }

    #[test]
    fn v4_vs_c4_in_s4() {
        // both order 4, but distinguishable by censuses
        let gens = s4();
        let chain = StabChain::new(&gens, 4);
        let v4 = vec![
            Perm::from_images(vec![1, 0, 3, 2]),
            Perm::from_images(vec![2, 3, 0, 1]),
        ];
        let c4 = vec![Perm::from_images(vec![1, 2, 3, 0])];
        match subgroup_conjugacy(&v4, &c4, &gens, &chain) {
            ConjugacyVerdict::NonConjugate(_) => {}
            v => panic!("expected non-conjugate, got {:?}", v),
        }
    }
}
