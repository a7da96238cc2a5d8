//! Block systems of a transitive action. The closure of a seed pair under
//! the generators is the finest system in which the pair shares a block, so
//! scanning all seed pairs finds every minimal system.

use super::perm::Perm;
use std::collections::BTreeSet;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Partition of 0..n refined from merging a with b and closing under the
/// generators; blocks listed sorted, each block sorted.
pub fn block_closure(gens: &[Perm], n: usize, a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(n);
    let mut work = vec![(a, b)];
    uf.union(a, b);
    while let Some((x, y)) = work.pop() {
        for g in gens {
            let (gx, gy) = (g.apply(x), g.apply(y));
            if uf.union(gx, gy) {
                work.push((gx, gy));
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for x in 0..n {
        let r = uf.find(x);
        if index[r] == usize::MAX {
            index[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[index[r]].push(x);
    }
    blocks.sort();
    blocks
}

/// All minimal nontrivial block systems of a transitive action.
pub fn minimal_block_systems(gens: &[Perm], n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    for b in 1..n {
        let sys = block_closure(gens, n, 0, b);
        if sys.len() > 1 {
            out.insert(sys);
        }
    }
    out.into_iter().collect()
}

pub fn is_primitive(gens: &[Perm], n: usize) -> bool {
    minimal_block_systems(gens, n).is_empty()
}

/// Sorted multiset of block sizes.
pub fn block_sizes(system: &[Vec<usize>]) -> Vec<usize> {
    let mut v: Vec<usize> = system.iter().map(|b| b.len()).collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_on_square() {
        // D_4 on the square's corners: the two diagonals form a system,
        // and so do the two edge pairs {0,1},{2,3} ... no: blocks must be
        // preserved setwise; the systems are diagonals and adjacent pairs
        let r = Perm::from_images(vec![1, 2, 3, 0]);
        let s = Perm::from_images(vec![1, 0, 3, 2]);
        let gens = vec![r, s];
        let systems = minimal_block_systems(&gens, 4);
        assert!(!systems.is_empty());
        for sys in &systems {
            assert_eq!(block_sizes(sys), vec![2, 2]);
            // setwise invariance under both generators
            for g in &gens {
                for b in sys {
                    let mut img: Vec<usize> = b.iter().map(|&x| g.apply(x)).collect();
                    img.sort_unstable();
                    assert!(sys.contains(&img));
                }
            }
        }
    }

    #[test]
    fn symmetric_group_primitive() {
        let gens = vec![
            Perm::from_images(vec![1, 2, 3, 4, 0]),
            Perm::from_images(vec![1, 0, 2, 3, 4]),
        ];
        assert!(is_primitive(&gens, 5));
    }

    #[test]
    fn cyclic_c6_systems() {
        // C_6 has systems with blocks of size 2 and of size 3; minimal ones
        // come from prime divisors
        let g = Perm::from_images(vec![1, 2, 3, 4, 5, 0]);
        let systems = minimal_block_systems(&[g], 6);
        let sizes: BTreeSet<Vec<usize>> =
            systems.iter().map(|s| block_sizes(s)).collect();
        assert!(sizes.contains(&vec![2, 2, 2]));
        assert!(sizes.contains(&vec![3, 3]));
    }
}
