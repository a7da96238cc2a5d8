//! Permutations on at most 255 points, stored as image vectors. Composition
//! reads left to right: (a * b)(x) = b(a(x)).

use crate::algebra::profile::Profile;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            img: (0..n as u8).collect(),
        }
    }

    /// Images must be a permutation of 0..n.
    pub fn from_images(img: Vec<u8>) -> Self {
        debug_assert!({
            let mut seen = vec![false; img.len()];
            img.iter().all(|&x| {
                let ok = (x as usize) < img.len() && !seen[x as usize];
                if ok {
                    seen[x as usize] = true;
                }
                ok
            })
        });
        Perm { img }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.img
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// self then other.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            img: self.img.iter().map(|&x| other.img[x as usize]).collect(),
        }
    }

    pub fn inv(&self) -> Perm {
        let mut img = vec![0u8; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u8;
        }
        Perm { img }
    }

    /// g^-1 * self * g; relabels every cycle entry p by g(p).
    pub fn conj(&self, g: &Perm) -> Perm {
        g.inv().compose(self).compose(g)
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn cycle_type(&self) -> Profile {
        Profile::from_parts(&self.cycle_lengths())
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .iter()
            .fold(1u64, |acc, &l| num_integer::lcm(acc, l as u64))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // disjoint cycles, 1-based to match the usual tables
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for s in 0..n {
            if seen[s] || self.apply(s) == s {
                seen[s] = true;
                continue;
            }
            write!(f, "(")?;
            let mut x = s;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.apply(x);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(img: &[u8]) -> Perm {
        Perm::from_images(img.to_vec())
    }

    #[test]
    fn compose_convention() {
        // a = (1 2), b = (2 3) on 3 points; a*b sends 0 -> 1 -> 2
        let a = p(&[1, 0, 2]);
        let b = p(&[0, 2, 1]);
        assert_eq!(a.compose(&b).apply(0), 2);
        assert_eq!(b.compose(&a).apply(0), 1);
    }

    #[test]
    fn inverse_and_identity() {
        let a = p(&[2, 0, 1, 3]);
        assert!(a.compose(&a.inv()).is_identity());
        assert!(a.inv().compose(&a).is_identity());
    }

    #[test]
    fn cycle_type_and_order() {
        let a = p(&[1, 2, 0, 4, 3, 5]);
        assert_eq!(a.cycle_lengths(), vec![3, 2, 1]);
        assert_eq!(a.order(), 6);
        assert_eq!(a.cycle_type(), Profile::from_parts(&[3, 2, 1]));
    }

    #[test]
    fn conjugation_relabels() {
        let a = p(&[1, 0, 2, 3]); // (1 2)
        let g = p(&[2, 3, 0, 1]); // (1 3)(2 4)
        let c = a.conj(&g); // should be (3 4)
        assert_eq!(c, p(&[0, 1, 3, 2]));
        assert_eq!(c.cycle_type(), a.cycle_type());
    }

    #[test]
    fn pow_matches_repeated_compose() {
        let a = p(&[1, 2, 3, 4, 0]);
        let mut acc = Perm::identity(5);
        for _ in 0..3 {
            acc = acc.compose(&a);
        }
        assert_eq!(a.pow(3), acc);
        assert_eq!(a.pow(-3), acc.inv());
        assert_eq!(a.pow(0), Perm::identity(5));
    }
}
