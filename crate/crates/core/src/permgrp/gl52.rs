//! GL(5,2) acting on the 31 nonzero vectors of F_2^5 and on the 31
//! hyperplanes. Points are indexed 0..31 by the vector's value minus one,
//! first coordinate in the high bit, so index order is lexicographic order
//! on coordinate strings. Hyperplanes are indexed by their normal vectors
//! the same way; a matrix M moves the normal vector by (M^T)^{-1}.

use super::perm::Perm;

/// Row-mask matrix over F_2; row i is a 5-bit mask, coordinate 1 in bit 4.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mat5(pub [u8; 5]);

pub const N: usize = 31;

impl Mat5 {
    pub fn identity() -> Self {
        Mat5([16, 8, 4, 2, 1])
    }

    pub fn mul(&self, other: &Mat5) -> Mat5 {
        let mut out = [0u8; 5];
        for i in 0..5 {
            let mut row = 0u8;
            for j in 0..5 {
                if self.0[i] >> (4 - j) & 1 == 1 {
                    row ^= other.0[j];
                }
            }
            out[i] = row;
        }
        Mat5(out)
    }

    pub fn transpose(&self) -> Mat5 {
        let mut out = [0u8; 5];
        for i in 0..5 {
            for j in 0..5 {
                if self.0[i] >> (4 - j) & 1 == 1 {
                    out[j] |= 1 << (4 - i);
                }
            }
        }
        Mat5(out)
    }

    /// Gauss-Jordan over F_2; None for singular matrices.
    pub fn inverse(&self) -> Option<Mat5> {
        let mut a = self.0;
        let mut b = Mat5::identity().0;
        for col in 0..5 {
            let bit = 4 - col;
            let piv = (col..5).find(|&r| a[r] >> bit & 1 == 1)?;
            a.swap(col, piv);
            b.swap(col, piv);
            for r in 0..5 {
                if r != col && a[r] >> bit & 1 == 1 {
                    a[r] ^= a[col];
                    b[r] ^= b[col];
                }
            }
        }
        Some(Mat5(b))
    }

    pub fn apply_vec(&self, v: u8) -> u8 {
        let mut out = 0u8;
        for i in 0..5 {
            out |= (((self.0[i] & v).count_ones() & 1) as u8) << (4 - i);
        }
        out
    }

    /// Permutation of the 31 nonzero vectors.
    pub fn point_perm(&self) -> Perm {
        let img: Vec<u8> = (1..=31u8).map(|v| self.apply_vec(v) - 1).collect();
        Perm::from_images(img)
    }

    /// Permutation of the 31 hyperplanes, indexed by normal vector.
    pub fn hyperplane_perm(&self) -> Perm {
        let nt = self
            .inverse()
            .expect("group element is invertible")
            .transpose();
        nt.point_perm()
    }
}

/// Generators: a 5-cycle of coordinates, a coordinate swap, and one
/// elementary row addition. Row reduction over F_2 shows these generate
/// the whole group; the stabilizer chain order check is the witness.
pub fn generators() -> Vec<Mat5> {
    let cycle = Mat5([1, 16, 8, 4, 2]);
    let swap = Mat5([8, 16, 4, 2, 1]);
    let add = Mat5([24, 8, 4, 2, 1]);
    vec![cycle, swap, add]
}

pub fn point_generators() -> Vec<Perm> {
    generators().iter().map(|m| m.point_perm()).collect()
}

pub fn hyperplane_generators() -> Vec<Perm> {
    generators().iter().map(|m| m.hyperplane_perm()).collect()
}

/// |GL(5,2)| = (2^5-1)(2^5-2)(2^5-4)(2^5-8)(2^5-16).
pub const GROUP_ORDER: u64 = 9_999_360;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_acts_trivially() {
        assert!(Mat5::identity().point_perm().is_identity());
        assert!(Mat5::identity().hyperplane_perm().is_identity());
    }

    #[test]
    fn inverse_roundtrip() {
        for m in generators() {
            let mi = m.inverse().unwrap();
            assert_eq!(m.mul(&mi), Mat5::identity());
            assert_eq!(mi.mul(&m), Mat5::identity());
        }
    }

    #[test]
    fn action_respects_products() {
        // (AB)v = A(Bv), and perms compose left to right, so the product
        // matrix corresponds to "b then a"
        let gens = generators();
        for a in &gens {
            for b in &gens {
                let ab = a.mul(b);
                assert_eq!(
                    ab.point_perm(),
                    b.point_perm().compose(&a.point_perm())
                );
                assert_eq!(
                    ab.hyperplane_perm(),
                    b.hyperplane_perm().compose(&a.hyperplane_perm())
                );
            }
        }
    }

    #[test]
    fn order_product_formula() {
        let q: u64 = 32;
        let expect: u64 = (0..5).map(|i| q - (1 << i)).product();
        assert_eq!(expect, GROUP_ORDER);
    }

    #[test]
    fn hyperplane_action_preserves_incidence() {
        // v lies on hyperplane h iff <v, h> = 0; both actions together
        // must preserve that pairing
        for m in generators() {
            let pp = m.point_perm();
            let hp = m.hyperplane_perm();
            for v in 1..=31u8 {
                for h in 1..=31u8 {
                    let before = (v & h).count_ones() % 2;
                    let v2 = pp.apply(v as usize - 1) as u8 + 1;
                    let h2 = hp.apply(h as usize - 1) as u8 + 1;
                    let after = (v2 & h2).count_ones() % 2;
                    assert_eq!(before, after);
                }
            }
        }
    }
}
