//! Conjugacy classes by breadth-first search under generator conjugation,
//! carrying transporters so arbitrary class elements can be pulled back to
//! the chosen representative.

use super::perm::Perm;
use super::stabchain::StabChain;
use crate::algebra::profile::Profile;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// A full conjugacy class with, for every element e, a transporter t
/// satisfying rep^t = e.
pub struct ClassWithTransporters {
    pub rep: Perm,
    map: HashMap<Perm, Perm>,
}

impl ClassWithTransporters {
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.map.contains_key(g)
    }

    /// t with e^t = rep, if e lies in the class.
    pub fn transporter_to_rep(&self, e: &Perm) -> Option<Perm> {
        self.map.get(e).map(|t| t.inv())
    }

    pub fn elements(&self) -> impl Iterator<Item = &Perm> {
        self.map.keys()
    }

    /// Centralizer of rep from the Schreier generators of the conjugation
    /// action; orbit-stabilizer gives the target order, so collection stops
    /// as soon as the chain reaches it.
    pub fn centralizer_chain(&self, gens: &[Perm], group_order: u64) -> StabChain {
        let n = self.rep.degree();
        let target = group_order / self.map.len() as u64;
        let mut chain = StabChain::new(&[], n);
        'outer: for (e, te) in &self.map {
            for g in gens {
                let e2 = e.conj(g);
                let t2 = &self.map[&e2];
                let z = te.compose(g).compose(&t2.inv());
                debug_assert_eq!(self.rep.conj(&z), self.rep);
                if !chain.contains(&z) {
                    chain = StabChain::new(
                        &chain
                            .strong_generators()
                            .into_iter()
                            .chain(std::iter::once(z))
                            .collect::<Vec<_>>(),
                        n,
                    );
                    if chain.order_u64() == target {
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(chain.order_u64(), target);
        chain
    }
}

pub fn class_bfs(rep: &Perm, gens: &[Perm]) -> ClassWithTransporters {
    let n = rep.degree();
    let mut map = HashMap::new();
    map.insert(rep.clone(), Perm::identity(n));
    let mut queue = vec![rep.clone()];
    while let Some(e) = queue.pop() {
        let t = map[&e].clone();
        for g in gens {
            let e2 = e.conj(g);
            if !map.contains_key(&e2) {
                map.insert(e2.clone(), t.compose(g));
                queue.push(e2);
            }
        }
    }
    ClassWithTransporters {
        rep: rep.clone(),
        map,
    }
}

/// A group element with the requested cycle type, by seeded random words in
/// the generators. Panics only if none exists among many random products,
/// which for the classes used here would mean wrong generators.
pub fn find_element_of_type(gens: &[Perm], n: usize, want: &Profile) -> Perm {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1bd5);
    let mut cur = Perm::identity(n);
    for _ in 0..2_000_000u64 {
        cur = cur.compose(&gens[rng.gen_range(0..gens.len())]);
        if cur.cycle_type() == *want {
            return cur;
        }
        // powers reach small-order types faster than raw words
        let o = cur.order() as i64;
        for d in 2..=o {
            if o % d == 0 {
                let p = cur.pow(o / d);
                if p.cycle_type() == *want {
                    return p;
                }
            }
        }
    }
    panic!("no element of type {} found", want);
}

/// All elements commuting with g, by full enumeration. Feasible because it
/// is only used for the small centralizers of the fixed class
/// representatives.
pub fn centralizer_elements(g: &Perm, chain: &StabChain) -> Vec<Perm> {
    let mut out = Vec::new();
    chain.for_each_element(&mut |h: &Perm| {
        if g.compose(h) == h.compose(g) {
            out.push(h.clone());
        }
    });
    out
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
    fn transposition_class_in_s4() {
        let rep = Perm::from_images(vec![1, 0, 2, 3]);
        let class = class_bfs(&rep, &s4());
        assert_eq!(class.len(), 6);
        for e in class.elements() {
            assert_eq!(e.cycle_type(), rep.cycle_type());
            let t = class.transporter_to_rep(e).unwrap();
            assert_eq!(e.conj(&t), rep);
        }
    }

    #[test]
    fn find_element_types() {
        let gens = s4();
        for parts in [vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1]] {
            let want = Profile::from_parts(&parts);
            let g = find_element_of_type(&gens, 4, &want);
            assert_eq!(g.cycle_type(), want);
        }
    }

    #[test]
    fn centralizer_order_times_class_size() {
        let gens = s4();
        let chain = StabChain::new(&gens, 4);
        let rep = Perm::from_images(vec![1, 0, 2, 3]);
        let class = class_bfs(&rep, &gens);
        let cent = centralizer_elements(&rep, &chain);
        assert_eq!(class.len() as u64 * cent.len() as u64, chain.order_u64());
    }
}
