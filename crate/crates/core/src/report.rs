//! Machine-readable verification reports: a flat list of claims, each with
//! a self-contained statement, the inputs it was checked at, a verdict and
//! witness data. Entries keep insertion order and all maps are ordered, so
//! identical runs serialize byte-identically.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ClaimReport {
    /// stable machine identifier, e.g. "family.profiles"
    pub claim_id: String,
    /// human-readable statement of what was checked, self-contained
    pub claim: String,
    pub inputs: BTreeMap<String, String>,
    pub verdict: bool,
    pub witness: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Default)]
pub struct VerificationReport {
    pub entries: Vec<ClaimReport>,
}

impl VerificationReport {
    pub fn push(
        &mut self,
        claim_id: &str,
        claim: &str,
        inputs: &[(&str, String)],
        verdict: bool,
        witness: &[(&str, String)],
    ) {
        self.entries.push(ClaimReport {
            claim_id: claim_id.to_string(),
            claim: claim.to_string(),
            inputs: inputs
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            verdict,
            witness: witness
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
        });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.verdict)
    }

    /// Schema check: ids unique and nonempty, every entry carries a claim
    /// statement.
    pub fn validate(&self) -> Result<(), String> {
        let mut seen = std::collections::BTreeSet::new();
        for e in &self.entries {
            if e.claim_id.is_empty() {
                return Err("entry with empty claim_id".into());
            }
            if e.claim.is_empty() {
                return Err(format!("claim {} has no statement", e.claim_id));
            }
            if !seen.insert(&e.claim_id) {
                return Err(format!("duplicate claim_id {}", e.claim_id));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let mark = if e.verdict { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{mark}] {}: {}\n", e.claim_id, e.claim));
            for (k, v) in &e.inputs {
                out.push_str(&format!("       in  {k} = {v}\n"));
            }
            for (k, v) in &e.witness {
                out.push_str(&format!("       out {k} = {v}\n"));
            }
        }
        let total = self.entries.len();
        let passed = self.entries.iter().filter(|e| e.verdict).count();
        out.push_str(&format!("{passed}/{total} claims pass\n"));
        out
    }
}
