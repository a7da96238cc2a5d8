//! Exhaustive cycle-type census of a permutation group, with a JSON disk
//! cache. The census walks every element through the stabilizer chain, so
//! it is the one genuinely heavy computation here; the cache keys on the
//! generators so a stale file can never be mistaken for the right one.

use super::perm::Perm;
use super::stabchain::StabChain;
use crate::algebra::profile::Profile;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Census {
    /// cycle type (display form) -> element count
    pub counts: BTreeMap<String, u64>,
    /// hex SHA-256 of the generator images, the cache key
    pub generator_digest: String,
}

pub fn generator_digest(gens: &[Perm]) -> String {
    let mut h = Sha256::new();
    for g in gens {
        h.update(g.images());
        h.update([0xff]);
    }
    hex(&h.finalize())
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{:02x}", b)).collect()
}

/// Counts elements of each cycle type by full enumeration.
pub fn compute_census(gens: &[Perm], n: usize) -> Census {
    let chain = StabChain::new(gens, n);
    let mut counts: BTreeMap<Profile, u64> = BTreeMap::new();
    chain.for_each_element(&mut |g: &Perm| {
        *counts.entry(g.cycle_type()).or_default() += 1;
    });
    Census {
        counts: counts
            .into_iter()
            .map(|(p, c)| (p.to_string(), c))
            .collect(),
        generator_digest: generator_digest(gens),
    }
}

/// Census via the cache file if it matches the generators, recomputing and
/// rewriting otherwise.
pub fn cached_census(gens: &[Perm], n: usize, cache: &Path) -> std::io::Result<Census> {
    let digest = generator_digest(gens);
    if let Ok(text) = std::fs::read_to_string(cache) {
        if let Ok(c) = serde_json::from_str::<Census>(&text) {
            if c.generator_digest == digest {
                return Ok(c);
            }
        }
    }
    let c = compute_census(gens, n);
    if let Some(dir) = cache.parent() {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(cache, serde_json::to_string_pretty(&c)?)?;
    Ok(c)
}

impl Census {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn count(&self, profile: &Profile) -> u64 {
        self.counts.get(&profile.to_string()).copied().unwrap_or(0)
    }

    /// True if some element has this cycle type.
    pub fn contains(&self, profile: &Profile) -> bool {
        self.count(profile) > 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4_gens() -> Vec<Perm> {
        vec![
            Perm::from_images(vec![1, 2, 3, 0]),
            Perm::from_images(vec![1, 0, 2, 3]),
        ]
    }

    #[test]
    fn s4_census_by_formula() {
        // class sizes in S_4: 1 + 6 + 3 + 8 + 6 = 24
        let c = compute_census(&s4_gens(), 4);
        assert_eq!(c.total(), 24);
        assert_eq!(c.count(&Profile::from_parts(&[1, 1, 1, 1])), 1);
        assert_eq!(c.count(&Profile::from_parts(&[2, 1, 1])), 6);
        assert_eq!(c.count(&Profile::from_parts(&[2, 2])), 3);
        assert_eq!(c.count(&Profile::from_parts(&[3, 1])), 8);
        assert_eq!(c.count(&Profile::from_parts(&[4])), 6);
    }

    #[test]
    fn cache_roundtrip_and_invalidation() {
        let dir = std::env::temp_dir().join(format!("census-test-{}", std::process::id()));
        let path = dir.join("census.json");
        let c1 = cached_census(&s4_gens(), 4, &path).unwrap();
        let c2 = cached_census(&s4_gens(), 4, &path).unwrap();
        assert_eq!(c1, c2);
        // different generators must not reuse the file
        let a4 = vec![
            Perm::from_images(vec![1, 2, 0, 3]),
            Perm::from_images(vec![0, 2, 3, 1]),
        ];
        let c3 = cached_census(&a4, 4, &path).unwrap();
        assert_eq!(c3.total(), 12);
        std::fs::remove_dir_all(&dir).ok();
    }
}
