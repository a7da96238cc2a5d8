//! Multiplicity profiles.
//!
//! The same multiset-of-multiplicities datum serves two roles: root
//! multiplicities of a fiber polynomial, and cycle types of permutations.
//! Rendered in exponent notation, e.g. "8^2.4^3.2.1".

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Sorted multiset of (multiplicity, count) with multiplicities descending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Profile(Vec<(usize, usize)>);

impl Profile {
    pub fn from_parts(parts: &[usize]) -> Self {
        let mut m: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in parts {
            assert!(p > 0);
            *m.entry(p).or_default() += 1;
        }
        Profile(m.into_iter().rev().collect())
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        let mut m: BTreeMap<usize, usize> = BTreeMap::new();
        for &(p, c) in pairs {
            assert!(p > 0 && c > 0);
            *m.entry(p).or_default() += c;
        }
        Profile(m.into_iter().rev().collect())
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }

    /// Sum multiplicity * count.
    pub fn total(&self) -> usize {
        self.0.iter().map(|&(m, c)| m * c).sum()
    }

    /// Number of parts.
    pub fn num_parts(&self) -> usize {
        self.0.iter().map(|&(_, c)| c).sum()
    }

    /// Flat list of parts, descending.
    pub fn parts(&self) -> Vec<usize> {
        let mut v = Vec::new();
        for &(m, c) in &self.0 {
            v.extend(std::iter::repeat(m).take(c));
        }
        v
    }

    /// Sum of (part - 1) over all parts: the ramification index contribution.
    pub fn index(&self) -> usize {
        self.total() - self.num_parts()
    }

    /// Adds one part of the given multiplicity.
    pub fn with_part(&self, m: usize) -> Self {
        let mut parts = self.parts();
        parts.push(m);
        Profile::from_parts(&parts)
    }

    pub fn parse(s: &str) -> Option<Self> {
        let mut pairs = Vec::new();
        for piece in s.split('.') {
            let (m, c) = match piece.split_once('^') {
                Some((m, c)) => (m.parse().ok()?, c.parse().ok()?),
                None => (piece.parse().ok()?, 1),
            };
            pairs.push((m, c));
        }
        Some(Profile::from_pairs(&pairs))
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(m, c) in &self.0 {
            if !first {
                write!(f, ".")?;
            }
            first = false;
            if c == 1 {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}^{}", m, c)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let p = Profile::from_parts(&[8, 8, 4, 4, 4, 2, 1]);
        assert_eq!(p.to_string(), "8^2.4^3.2.1");
        assert_eq!(Profile::parse("8^2.4^3.2.1"), Some(p.clone()));
        assert_eq!(p.total(), 31);
        assert_eq!(p.index(), 31 - 7);
    }
}
