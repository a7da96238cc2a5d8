//! Deterministic Schreier-Sims stabilizer chain: order, membership, and
//! exhaustive element enumeration through the transversal tree.

use super::perm::Perm;
use num_bigint::BigUint;
use num_traits::One;

struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// trans[p] maps base to p for p in the orbit
    trans: Vec<Option<Perm>>,
}

impl Level {
    fn new(base: usize, n: usize) -> Self {
        let mut trans = vec![None; n];
        trans[base] = Some(Perm::identity(n));
        Level {
            base,
            gens: Vec::new(),
            trans,
        }
    }

    fn recompute_orbit(&mut self, n: usize) {
        for t in self.trans.iter_mut() {
            *t = None;
        }
        self.trans[self.base] = Some(Perm::identity(n));
        let mut queue = vec![self.base];
        while let Some(p) = queue.pop() {
            let up = self.trans[p].clone().unwrap();
            for s in &self.gens {
                let q = s.apply(p);
                if self.trans[q].is_none() {
                    self.trans[q] = Some(up.compose(s));
                    queue.push(q);
                }
            }
        }
    }

    fn orbit_points(&self) -> Vec<usize> {
        (0..self.trans.len())
            .filter(|&p| self.trans[p].is_some())
            .collect()
    }

    fn orbit_len(&self) -> usize {
        self.trans.iter().filter(|t| t.is_some()).count()
    }
}

pub struct StabChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(gens: &[Perm], n: usize) -> Self {
        let mut chain = StabChain {
            n,
            levels: Vec::new(),
        };
        for g in gens {
            chain.add_strong(g.clone());
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Sifts g through levels starting at `from`; returns the residue and
    /// the level where sifting stopped.
    fn strip_from(&self, from: usize, g: &Perm) -> (Perm, usize) {
        let mut g = g.clone();
        for i in from..self.levels.len() {
            let p = g.apply(self.levels[i].base);
            match &self.levels[i].trans[p] {
                Some(u) => g = g.compose(&u.inv()),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    /// Installs a strong generator: level i holds exactly the strong
    /// generators fixing the first i base points, and every level it lands
    /// in gets re-verified bottom-up.
    fn add_strong(&mut self, g: Perm) {
        if g.is_identity() {
            return;
        }
        let mut i = 0;
        while i < self.levels.len() && g.apply(self.levels[i].base) == self.levels[i].base {
            i += 1;
        }
        if i == self.levels.len() {
            let base = (0..self.n).find(|&x| g.apply(x) != x).unwrap();
            self.levels.push(Level::new(base, self.n));
        }
        for j in 0..=i {
            self.levels[j].gens.push(g.clone());
        }
        for j in (0..=i).rev() {
            self.verify_level(j);
        }
    }

    /// Recomputes the orbit at `lev` and sifts every Schreier generator;
    /// residues become new strong generators at strictly deeper levels.
    fn verify_level(&mut self, lev: usize) {
        self.levels[lev].recompute_orbit(self.n);
        let points = self.levels[lev].orbit_points();
        let gens = self.levels[lev].gens.clone();
        for &p in &points {
            let up = self.levels[lev].trans[p].clone().unwrap();
            for s in &gens {
                let q = s.apply(p);
                let uq = self.levels[lev].trans[q].clone().unwrap();
                let sg = up.compose(s).compose(&uq.inv());
                let (h, _) = self.strip_from(lev + 1, &sg);
                if !h.is_identity() {
                    debug_assert!(h.apply(self.levels[lev].base) == self.levels[lev].base);
                    self.add_strong(h);
                }
            }
        }
    }

    pub fn order(&self) -> BigUint {
        let mut o = BigUint::one();
        for l in &self.levels {
            o *= BigUint::from(l.orbit_len());
        }
        o
    }

    pub fn order_u64(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit_len() as u64).product()
    }

    /// Every strong generator lives in level 0's list by construction.
    pub fn strong_generators(&self) -> Vec<Perm> {
        match self.levels.first() {
            Some(l) => {
                let mut v = l.gens.clone();
                v.sort();
                v.dedup();
                v
            }
            None => Vec::new(),
        }
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (h, _) = self.strip_from(0, g);
        h.is_identity()
    }

    /// Calls f exactly once per group element.
    pub fn for_each_element<F: FnMut(&Perm)>(&self, f: &mut F) {
        let id = Perm::identity(self.n);
        self.dfs(0, &id, f);
    }

    fn dfs<F: FnMut(&Perm)>(&self, level: usize, suffix: &Perm, f: &mut F) {
        if level == self.levels.len() {
            f(suffix);
            return;
        }
        for t in self.levels[level].trans.iter().flatten() {
            let next = t.compose(suffix);
            self.dfs(level + 1, &next, f);
        }
    }
}
