//! Shared group data for the tuple search and orbit computation: class
//! representatives, the full small classes, and the transporter table used
//! by the canonical form.

use super::tuple::NielsenTuple;
use crate::permgrp::classes::{class_bfs, find_element_of_type, ClassWithTransporters};
use crate::permgrp::{gl52, ClassLabel, Perm, StabChain, GROUP_ORDER, N};

pub struct GroupData {
    pub gens: Vec<Perm>,
    pub chain: StabChain,
    pub rep2a: Perm,
    pub rep8a: Perm,
    pub class2a: Vec<Perm>,
    pub class8a: ClassWithTransporters,
    /// the 16 elements commuting with rep8a
    pub cent8a: Vec<Perm>,
}

impl GroupData {
    pub fn new() -> Self {
        let gens = gl52::point_generators();
        let chain = StabChain::new(&gens, N);
        assert_eq!(chain.order_u64(), GROUP_ORDER);
        let rep2a = find_element_of_type(&gens, N, &ClassLabel::C2A.cycle_type());
        let rep8a = find_element_of_type(&gens, N, &ClassLabel::C8A.cycle_type());
        let class2a: Vec<Perm> = {
            let mut v: Vec<Perm> = class_bfs(&rep2a, &gens).elements().cloned().collect();
            v.sort();
            v
        };
        let class8a = class_bfs(&rep8a, &gens);
        let cent_chain = class8a.centralizer_chain(&gens, GROUP_ORDER);
        let mut cent8a = Vec::new();
        cent_chain.for_each_element(&mut |z: &Perm| cent8a.push(z.clone()));
        cent8a.sort();
        GroupData {
            gens,
            chain,
            rep2a,
            rep8a,
            class2a,
            class8a,
            cent8a,
        }
    }

    /// Unique representative of a tuple's simultaneous-conjugation orbit:
    /// the single slot carrying the order-8 class is conjugated onto rep8a,
    /// and the leftover 16-element centralizer freedom is spent on the
    /// lexicographically least image vector.
    pub fn canonical_form(&self, t: &NielsenTuple) -> NielsenTuple {
        let want = ClassLabel::C8A.cycle_type();
        let slot = (0..4)
            .find(|&i| t.0[i].cycle_type() == want)
            .expect("tuple carries one order-8 entry");
        let tr = self
            .class8a
            .transporter_to_rep(&t.0[slot])
            .expect("order-8 entry lies in the class");
        let aligned = t.conj(&tr);
        debug_assert_eq!(aligned.0[slot], self.rep8a);
        self.cent8a
            .iter()
            .map(|z| aligned.conj(z))
            .min()
            .unwrap()
    }
}

impl Default for GroupData {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    #[test]
    fn canonical_form_constant_on_conjugates() {
        let gd = GroupData::new();
        assert_eq!(gd.class2a.len(), 465);
        assert_eq!(gd.cent8a.len(), 16);
        // build one generating tuple
        let s1 = gd.class2a[0].clone();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let tuple = 'found: loop {
            let s2 = gd.class2a[rng.gen_range(0..465)].clone();
            let s3 = s2.inv().compose(&s1.inv()).compose(&gd.rep8a.inv());
            if s3.cycle_type() == ClassLabel::C3B.cycle_type() {
                break 'found NielsenTuple::new([s1.clone(), s2, s3, gd.rep8a.clone()]);
            }
        };
        let canon = gd.canonical_form(&tuple);
        assert_eq!(gd.canonical_form(&canon), canon);
        for _ in 0..20 {
            let mut g = Perm::identity(N);
            for _ in 0..12 {
                g = g.compose(&gd.gens[rng.gen_range(0..gd.gens.len())]);
            }
            assert_eq!(gd.canonical_form(&tuple.conj(&g)), canon);
        }
    }
}
