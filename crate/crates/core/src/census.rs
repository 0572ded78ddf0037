//! Counts of complete subsets by isomorphism type of their visual subsystem.
//!
//! Two generating sets of maximum rank for the same group have equal
//! censuses, which makes the census a cheap invariant to compare.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::type_string;
use crate::diagram::{canonical_form_with_limit, CanonicalForm, CoxeterDiagram, Subset, MAX_RANK};
use crate::error::Result;

/// Every nonempty clique of the P-diagram, in discovery order.
pub fn all_cliques(d: &CoxeterDiagram) -> Vec<Subset> {
    fn grow(d: &CoxeterDiagram, clique: Subset, cand: Subset, out: &mut Vec<Subset>) {
        for v in cand.iter() {
            let c = clique.with(v);
            out.push(c);
            let rest = cand.intersection(d.p_neighbors(v)).iter().filter(|&u| u > v).collect();
            grow(d, c, rest, out);
        }
    }
    let mut out = Vec::new();
    grow(d, Subset::EMPTY, d.all(), &mut out);
    out
}

/// Maximal cliques by Bron–Kerbosch with pivoting.
pub fn maximal_cliques(d: &CoxeterDiagram) -> Vec<Subset> {
    fn bk(d: &CoxeterDiagram, r: Subset, mut p: Subset, mut x: Subset, out: &mut Vec<Subset>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p.union(x).iter().max_by_key(|&u| p.intersection(d.p_neighbors(u)).len()).unwrap();
        for v in p.difference(d.p_neighbors(pivot)).iter() {
            let n = d.p_neighbors(v);
            bk(d, r.with(v), p.intersection(n), x.intersection(n), out);
            p = p.without(v);
            x = x.with(v);
        }
    }
    let mut out = Vec::new();
    if d.rank() > 0 {
        bk(d, Subset::EMPTY, d.all(), Subset::EMPTY, &mut out);
    }
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    /// Hex of the canonical form of the induced diagram.
    pub key: String,
    pub diagram: String,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub rank: usize,
    /// Sorted by clique rank, then key.
    pub entries: Vec<CensusEntry>,
}

/// Type string when spherical, otherwise the lower triangle of labels.
fn describe(d: &CoxeterDiagram, c: Subset) -> String {
    if let Some(t) = type_string(d, c) {
        return t;
    }
    let v = c.to_vec();
    let mut labels = Vec::new();
    for i in 1..v.len() {
        for j in 0..i {
            labels.push(d.m(v[i], v[j]).to_string());
        }
    }
    format!("K{}[{}]", v.len(), labels.join(" "))
}

pub fn simplex_census(d: &CoxeterDiagram) -> Result<Census> {
    let mut map: BTreeMap<CanonicalForm, (String, usize)> = BTreeMap::new();
    for c in all_cliques(d) {
        let key = canonical_form_with_limit(&d.induced(c), MAX_RANK)?;
        map.entry(key).or_insert_with(|| (describe(d, c), 0)).1 += 1;
    }
    let entries = map
        .into_iter()
        .map(|(k, (diagram, count))| CensusEntry { key: k.to_hex(), diagram, count })
        .collect();
    Ok(Census { rank: d.rank(), entries })
}

impl Census {
    /// Number of entries per clique rank.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for e in &self.entries {
            *h.entry(entry_rank(&e.key)).or_insert(0) += e.count;
        }
        h
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("census serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Census> {
        serde_json::from_str(text)
    }
}

fn entry_rank(key: &str) -> usize {
    usize::from_str_radix(&key[..8.min(key.len())], 16).unwrap_or(0)
}

/// One key whose counts differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusDiff {
    pub key: String,
    pub diagram: String,
    pub left: usize,
    pub right: usize,
}

/// Keys with different counts; empty exactly when the censuses agree.
pub fn compare_census(a: &Census, b: &Census) -> Vec<CensusDiff> {
    let mut m: BTreeMap<&str, (String, usize, usize)> = BTreeMap::new();
    for e in &a.entries {
        m.entry(&e.key).or_insert_with(|| (e.diagram.clone(), 0, 0)).1 = e.count;
    }
    for e in &b.entries {
        m.entry(&e.key).or_insert_with(|| (e.diagram.clone(), 0, 0)).2 = e.count;
    }
    m.into_iter()
        .filter(|(_, v)| v.1 != v.2)
        .map(|(k, (diagram, left, right))| CensusDiff { key: k.to_string(), diagram, left, right })
        .collect()
}
