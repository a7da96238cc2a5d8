//! Tuple search and the braid orbit as a labeled graph: nodes are
//! canonical tuple representatives, operators act as permutations of the
//! node indices.

use super::context::GroupData;
use super::tuple::NielsenTuple;
use crate::permgrp::{ClassLabel, StabChain, GROUP_ORDER, N};
use std::collections::{BTreeMap, HashMap};

pub const OPERATOR_NAMES: [&str; 8] = ["q1", "q2", "q3", "q1i", "q2i", "q3i", "sh", "shi"];

pub fn apply_operator(t: &NielsenTuple, name: &str) -> NielsenTuple {
    match name {
        "q1" => t.braid_move(0),
        "q2" => t.braid_move(1),
        "q3" => t.braid_move(2),
        "q1i" => t.braid_move_inv(0),
        "q2i" => t.braid_move_inv(1),
        "q3i" => t.braid_move_inv(2),
        "sh" => t.shift(),
        "shi" => t.shift_inv(),
        other => panic!("unknown operator {:?}", other),
    }
}

/// Canonical representatives of all straight tuples (2A,2A,3B,8A) with
/// product 1 and full generation, found with the order-8 slot pinned to
/// the class representative.
pub fn search_tuples(gd: &GroupData) -> Vec<NielsenTuple> {
    let want3b = ClassLabel::C3B.cycle_type();
    let s4inv = gd.rep8a.inv();
    let mut found = Vec::new();
    for s1 in &gd.class2a {
        let s1i = s1.inv();
        for s2 in &gd.class2a {
            let s3 = s2.inv().compose(&s1i).compose(&s4inv);
            if s3.cycle_type() != want3b {
                continue;
            }
            let sub = StabChain::new(
                &[s1.clone(), s2.clone(), s3.clone(), gd.rep8a.clone()],
                N,
            );
            if sub.order_u64() != GROUP_ORDER {
                continue;
            }
            found.push(gd.canonical_form(&NielsenTuple::new([
                s1.clone(),
                s2.clone(),
                s3,
                gd.rep8a.clone(),
            ])));
        }
    }
    found.sort();
    found.dedup();
    found
}

pub struct OrbitGraph {
    /// canonical tuples, sorted, so node indices are reproducible
    pub nodes: Vec<NielsenTuple>,
    /// operator name -> image vector over node indices
    pub ops: BTreeMap<String, Vec<usize>>,
}

impl OrbitGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, t: &NielsenTuple) -> Option<usize> {
        self.nodes.binary_search(t).ok()
    }

    /// Image vector of a word (applied left to right) on node indices.
    pub fn word_image(&self, word: &[String]) -> Vec<usize> {
        let mut img: Vec<usize> = (0..self.nodes.len()).collect();
        for name in word {
            let op = self
                .ops
                .get(name)
                .unwrap_or_else(|| panic!("unknown operator {:?}", name));
            for x in img.iter_mut() {
                *x = op[*x];
            }
        }
        img
    }
}

/// Closure of the seeds under all braid moves and the shift, through the
/// canonical form.
pub fn braid_orbit(seeds: &[NielsenTuple], gd: &GroupData) -> OrbitGraph {
    let mut seen: HashMap<NielsenTuple, ()> = HashMap::new();
    let mut queue: Vec<NielsenTuple> = Vec::new();
    for s in seeds {
        let c = gd.canonical_form(s);
        if seen.insert(c.clone(), ()).is_none() {
            queue.push(c);
        }
    }
    while let Some(t) = queue.pop() {
        for name in OPERATOR_NAMES {
            let u = gd.canonical_form(&apply_operator(&t, name));
            debug_assert!(u.product_is_one());
            if seen.insert(u.clone(), ()).is_none() {
                queue.push(u);
            }
        }
    }
    let mut nodes: Vec<NielsenTuple> = seen.into_keys().collect();
    nodes.sort();
    let index: HashMap<&NielsenTuple, usize> =
        nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut ops = BTreeMap::new();
    for name in OPERATOR_NAMES {
        let img: Vec<usize> = nodes
            .iter()
            .map(|t| index[&gd.canonical_form(&apply_operator(t, name))])
            .collect();
        ops.insert(name.to_string(), img);
    }
    let graph = OrbitGraph { nodes, ops };
    for img in graph.ops.values() {
        debug_assert!(is_bijection(img));
    }
    graph
}

fn is_bijection(img: &[usize]) -> bool {
    let mut seen = vec![false; img.len()];
    img.iter().all(|&x| {
        let ok = x < img.len() && !seen[x];
        if ok {
            seen[x] = true;
        }
        ok
    })
}
