//! Frobenius sampling for a specialized member: the factor-degree pattern
//! of a squarefree integer polynomial mod a good prime is the cycle type of
//! a Galois-group element, so every observed pattern must occur in the
//! group's cycle-type census. Seeing the patterns 31 and 21.7.3 witnesses
//! elements of those orders.

use super::CoversError;
use crate::algebra::modfactor::{ddf_degrees, is_squarefree_mod_p};
use crate::algebra::primes::primes_below;
use crate::algebra::zpoly::{reduce_mod_p, to_primitive_integer};
use crate::algebra::{Poly, QQ};
use crate::permgrp::census::Census;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

pub struct DedekindScan {
    pub good_primes: usize,
    /// degree pattern (display form) -> number of witnessing primes
    pub patterns: BTreeMap<String, usize>,
    /// patterns observed but absent from the census, with one witness prime
    pub strangers: Vec<(String, u64)>,
    pub has_31: bool,
    pub has_21_7_3: bool,
}

impl DedekindScan {
    /// The scan is consistent with the group iff nothing fell outside the
    /// census and both witness patterns showed up.
    pub fn verdict(&self) -> bool {
        self.strangers.is_empty() && self.has_31 && self.has_21_7_3
    }
}

/// Scans all good primes below `bound`; errors if fewer than `min_good`
/// primes survive the squarefree/leading-coefficient filter.
pub fn dedekind_scan(
    f: &Poly<QQ>,
    census: &Census,
    bound: u64,
    min_good: usize,
) -> Result<DedekindScan, CoversError> {
    assert_eq!(f.deg(), 31);
    let (_, fi) = to_primitive_integer(f);
    let mut patterns: BTreeMap<String, usize> = BTreeMap::new();
    let mut strangers: Vec<(String, u64)> = Vec::new();
    let mut good = 0usize;
    for p in primes_below(bound) {
        if (fi.last().unwrap() % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce_mod_p(&fi, p);
        if !is_squarefree_mod_p(&fp) {
            continue;
        }
        good += 1;
        let pat = ddf_degrees(&fp)
            .map_err(|e| CoversError::Dedekind(e.to_string()))?
            .to_string();
        if !census.counts.contains_key(&pat) && !strangers.iter().any(|(s, _)| s == &pat) {
            strangers.push((pat.clone(), p));
        }
        *patterns.entry(pat).or_default() += 1;
    }
    if good < min_good {
        return Err(CoversError::Dedekind(format!(
            "only {good} good primes below {bound}, need {min_good}"
        )));
    }
    Ok(DedekindScan {
        good_primes: good,
        has_31: patterns.contains_key("31"),
        has_21_7_3: patterns.contains_key("21.7.3"),
        patterns,
        strangers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::rat_int;
    use crate::covers::family::family;
    use crate::permgrp::census::compute_census;
    use crate::permgrp::{psl52_action, ActionKind};

    // full census of the degree-31 point action; slow, so shared tests keep
    // the bound small
    #[test]
    #[ignore = "enumerates the whole group; run explicitly"]
    fn scan_alpha_one() {
        let census = compute_census(&psl52_action(ActionKind::Points), 31);
        let c = family(&rat_int(1)).unwrap();
        let f = c.a.sub(&c.b); // t = 1
        let scan = dedekind_scan(&f, &census, 10_000, 100).unwrap();
        assert!(scan.verdict(), "strangers: {:?}", scan.strangers);
        // planted control: a haphazard degree-31 polynomial is (almost
        // surely) S31 and must produce a pattern outside the census
        let control = Poly::from_i64(QQ, &[
            -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
        ]);
        let scan = dedekind_scan(&control, &census, 10_000, 100).unwrap();
        assert!(!scan.verdict());
        assert!(!scan.strangers.is_empty());
    }
}
