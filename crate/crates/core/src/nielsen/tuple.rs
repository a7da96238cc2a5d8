//! Four-tuples of group elements with product 1 and the Hurwitz braid
//! moves on them.

use crate::permgrp::Perm;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NielsenTuple(pub [Perm; 4]);

impl NielsenTuple {
    pub fn new(s: [Perm; 4]) -> Self {
        let t = NielsenTuple(s);
        debug_assert!(t.product_is_one());
        t
    }

    pub fn product_is_one(&self) -> bool {
        self.0[0]
            .compose(&self.0[1])
            .compose(&self.0[2])
            .compose(&self.0[3])
            .is_identity()
    }

    pub fn conj(&self, g: &Perm) -> NielsenTuple {
        NielsenTuple(std::array::from_fn(|i| self.0[i].conj(g)))
    }

    /// Q_i replaces (s_i, s_{i+1}) by (s_i s_{i+1} s_i^-1, s_i); i in 0..3.
    pub fn braid_move(&self, i: usize) -> NielsenTuple {
        assert!(i < 3, "braid index out of range");
        let mut s = self.0.clone();
        let a = s[i].clone();
        let b = s[i + 1].clone();
        s[i] = a.compose(&b).compose(&a.inv()); // a b a^-1
        s[i + 1] = a;
        NielsenTuple(s)
    }

    /// Inverse of Q_i: (s_i, s_{i+1}) -> (s_{i+1}, s_{i+1}^-1 s_i s_{i+1}).
    pub fn braid_move_inv(&self, i: usize) -> NielsenTuple {
        assert!(i < 3, "braid index out of range");
        let mut s = self.0.clone();
        let a = s[i].clone();
        let b = s[i + 1].clone();
        s[i] = b.clone();
        s[i + 1] = b.inv().compose(&a).compose(&b); // b^-1 a b
        NielsenTuple(s)
    }

    /// (s1,s2,s3,s4) -> (s2,s3,s4,s1); preserves the product since the
    /// rotated product is a conjugate of the original.
    pub fn shift(&self) -> NielsenTuple {
        let s = &self.0;
        NielsenTuple([s[1].clone(), s[2].clone(), s[3].clone(), s[0].clone()])
    }

    pub fn shift_inv(&self) -> NielsenTuple {
        let s = &self.0;
        NielsenTuple([s[3].clone(), s[0].clone(), s[1].clone(), s[2].clone()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> NielsenTuple {
        // (1 2), (2 3), product completion on 4 points
        let a = Perm::from_images(vec![1, 0, 2, 3]);
        let b = Perm::from_images(vec![0, 2, 1, 3]);
        let c = Perm::from_images(vec![2, 0, 1, 3]);
        let d = a.compose(&b).compose(&c).inv();
        NielsenTuple::new([a, b, c, d])
    }

    #[test]
    fn moves_preserve_product() {
        let t = sample();
        for i in 0..3 {
            assert!(t.braid_move(i).product_is_one());
            assert!(t.braid_move_inv(i).product_is_one());
        }
        assert!(t.shift().product_is_one());
    }

    #[test]
    fn move_inverse_cancels() {
        let t = sample();
        for i in 0..3 {
            assert_eq!(t.braid_move(i).braid_move_inv(i), t);
            assert_eq!(t.braid_move_inv(i).braid_move(i), t);
        }
        assert_eq!(t.shift().shift_inv(), t);
    }

    #[test]
    fn braid_relation() {
        let t = sample();
        let lhs = t.braid_move(0).braid_move(1).braid_move(0);
        let rhs = t.braid_move(1).braid_move(0).braid_move(1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cycle_types_permuted_not_changed() {
        let t = sample();
        let mut before: Vec<_> = t.0.iter().map(|p| p.cycle_type()).collect();
        let mut after: Vec<_> = t.braid_move(1).0.iter().map(|p| p.cycle_type()).collect();
        before.sort();
        after.sort();
        assert_eq!(before, after);
    }
}
