//! Reduction of the braid orbit to the 24-point symmetrized set, the
//! induced ramification braids with their 12-block imprimitivity system,
//! the Riemann-Hurwitz genus, and the cusp degenerations.
//!
//! The braid words and the slot arrangement are configuration data, not
//! code: conventions for reduced classes differ across the literature, so
//! the shipped words are calibrated against the known cycle structures and
//! recorded in config/braids.json.

use super::context::GroupData;
use super::orbit::OrbitGraph;
use crate::algebra::profile::Profile;
use crate::permgrp::blocks::minimal_block_systems;
use crate::permgrp::conjugacy::{subgroup_conjugacy, ConjugacyVerdict};
use crate::permgrp::{class_label, ClassLabel, Perm, StabChain, N};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReduceError {
    #[error("unknown class name {0:?} in arrangement")]
    UnknownClass(String),
    #[error("braid word {0:?} does not stabilize the reduced set")]
    WordLeavesSet(String),
    #[error("cycle structures are not partitions of {0}")]
    BadPartition(usize),
    #[error("config parse error: {0}")]
    Parse(#[from] serde_json::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWordSpec {
    pub name: String,
    /// operator names applied left to right
    pub word: Vec<String>,
    /// tuple slots merged at this braid's cusps, if the degeneration is a
    /// plain two-point coalescence
    pub coalesce: Option<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidConfig {
    /// class labels pinning one slot arrangement; the reduced set is the
    /// sub-fiber of orbit nodes carrying exactly this arrangement
    pub arrangement: Vec<String>,
    pub braids: Vec<BraidWordSpec>,
}

impl BraidConfig {
    /// The checked-in calibrated words. The exchange of the two order-2
    /// supports is realized inside the arrangement stabilizer by the half
    /// twist Q1, so the fixed-arrangement fiber represents unordered pairs.
    pub fn calibrated() -> Self {
        serde_json::from_str(include_str!(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/../../config/braids.json"
        )))
        .expect("embedded config parses")
    }

    pub fn from_json(s: &str) -> Result<Self, ReduceError> {
        Ok(serde_json::from_str(s)?)
    }

    fn labels(&self) -> Result<Vec<ClassLabel>, ReduceError> {
        self.arrangement
            .iter()
            .map(|s| {
                ClassLabel::all()
                    .into_iter()
                    .find(|l| l.name() == s)
                    .ok_or_else(|| ReduceError::UnknownClass(s.clone()))
            })
            .collect()
    }
}

/// The reduced point set, as indices into the orbit's node list.
pub struct ReducedSet {
    pub node_ids: Vec<usize>,
}

impl ReducedSet {
    pub fn len(&self) -> usize {
        self.node_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.node_ids.is_empty()
    }
}

/// Cuts the arrangement fiber out of the orbit. Every node whose slot
/// classes match the configured arrangement is one reduced point; nodes in
/// other arrangements are the same classes seen through a relabeling of
/// the branch points, so the fiber is a full set of representatives.
pub fn reduce_symmetrize(
    orbit: &OrbitGraph,
    config: &BraidConfig,
) -> Result<ReducedSet, ReduceError> {
    let want = config.labels()?;
    let node_ids = (0..orbit.len())
        .filter(|&i| {
            let t = &orbit.nodes[i];
            t.0.len() == want.len()
                && t.0
                    .iter()
                    .zip(&want)
                    .all(|(s, l)| class_label(s) == Some(*l))
        })
        .collect();
    Ok(ReducedSet { node_ids })
}

pub struct RamBraid {
    pub name: String,
    /// action on the reduced points, indexed as in ReducedSet::node_ids
    pub perm: Perm,
    pub coalesce: Option<[usize; 2]>,
}

pub struct RamificationData {
    pub braids: Vec<RamBraid>,
    /// minimal block systems of the group the braids generate
    pub block_systems: Vec<Vec<Vec<usize>>>,
}

impl RamificationData {
    /// Induced action on the blocks of one system.
    pub fn block_action(system: &[Vec<usize>], p: &Perm) -> Perm {
        let npts: usize = system.iter().map(|b| b.len()).sum();
        let mut which = vec![0usize; npts];
        for (bi, b) in system.iter().enumerate() {
            for &x in b {
                which[x] = bi;
            }
        }
        Perm::from_images(
            system
                .iter()
                .map(|b| which[p.apply(b[0])] as u8)
                .collect(),
        )
    }
}

/// Restricts each configured braid word to the reduced set and computes
/// the imprimitivity systems of the group they generate.
pub fn ramification_braids(
    orbit: &OrbitGraph,
    reduced: &ReducedSet,
    config: &BraidConfig,
) -> Result<RamificationData, ReduceError> {
    let pos: std::collections::HashMap<usize, usize> = reduced
        .node_ids
        .iter()
        .enumerate()
        .map(|(k, &i)| (i, k))
        .collect();
    let mut braids = Vec::new();
    for spec in &config.braids {
        let img = orbit.word_image(&spec.word);
        let restricted: Option<Vec<u8>> = reduced
            .node_ids
            .iter()
            .map(|&i| pos.get(&img[i]).map(|&k| k as u8))
            .collect();
        let images = restricted.ok_or_else(|| ReduceError::WordLeavesSet(spec.name.clone()))?;
        braids.push(RamBraid {
            name: spec.name.clone(),
            perm: Perm::from_images(images),
            coalesce: spec.coalesce,
        });
    }
    let gens: Vec<Perm> = braids.iter().map(|b| b.perm.clone()).collect();
    let block_systems = minimal_block_systems(&gens, reduced.len());
    Ok(RamificationData {
        braids,
        block_systems,
    })
}

/// Genus of a degree-m cover of the line from the cycle structures of all
/// branch monodromies: 2 - 2g = 2m - sum of (length - 1) over all cycles.
pub fn genus_rh(m: usize, structures: &[Profile]) -> Result<i64, ReduceError> {
    if structures.iter().any(|s| s.total() != m) {
        return Err(ReduceError::BadPartition(m));
    }
    let index: i64 = structures.iter().map(|s| s.index() as i64).sum();
    let two_minus_2g = 2 * m as i64 - index;
    debug_assert_eq!(two_minus_2g % 2, 0);
    Ok((2 - two_minus_2g) / 2)
}

pub struct CuspReport {
    pub cycle_len: usize,
    /// position of the representative in ReducedSet::node_ids
    pub rep: usize,
    pub merged_type: Profile,
    pub triple_types: [Profile; 3],
    pub subgroup_order: u64,
    pub triple: [Perm; 3],
}

/// One report per cycle of the braid on the reduced set: the two slots
/// being merged at this cusp are replaced by their product, giving a
/// three-point degeneration whose monodromy triple still multiplies to 1.
pub fn cusp_analysis(
    orbit: &OrbitGraph,
    reduced: &ReducedSet,
    braid: &RamBraid,
) -> Vec<CuspReport> {
    let pair = braid
        .coalesce
        .expect("cusp analysis needs a configured coalescence pair");
    assert_eq!(pair[1], pair[0] + 1, "coalesced slots must be adjacent");
    let n = reduced.len();
    let mut seen = vec![false; n];
    let mut reports = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = braid.perm.apply(x);
        }
        let t = &orbit.nodes[reduced.node_ids[s]];
        let merged = t.0[pair[0]].compose(&t.0[pair[1]]);
        let mut entries = Vec::with_capacity(3);
        for i in 0..4 {
            if i == pair[0] {
                entries.push(merged.clone());
            } else if i != pair[1] {
                entries.push(t.0[i].clone());
            }
        }
        let triple: [Perm; 3] = entries.try_into().unwrap();
        debug_assert!(triple[0]
            .compose(&triple[1])
            .compose(&triple[2])
            .is_identity());
        let order = StabChain::new(&triple, N).order_u64();
        reports.push(CuspReport {
            cycle_len: len,
            rep: s,
            merged_type: merged.cycle_type(),
            triple_types: std::array::from_fn(|k| triple[k].cycle_type()),
            subgroup_order: order,
            triple,
        });
    }
    reports.sort_by_key(|r| (std::cmp::Reverse(r.cycle_len), r.rep));
    reports
}

pub struct CuspPair {
    pub i: usize,
    pub j: usize,
    pub verdict: ConjugacyVerdict,
}

/// Conjugacy verdicts between the coalesced subgroups of every pair of
/// equal-length cycles.
pub fn cusp_pairwise(reports: &[CuspReport], gd: &GroupData) -> Vec<CuspPair> {
    let mut out = Vec::new();
    for i in 0..reports.len() {
        for j in i + 1..reports.len() {
            if reports[i].cycle_len != reports[j].cycle_len {
                continue;
            }
            let verdict = subgroup_conjugacy(
                &reports[i].triple,
                &reports[j].triple,
                &gd.gens,
                &gd.chain,
            );
            out.push(CuspPair { i, j, verdict });
        }
    }
    out
}
