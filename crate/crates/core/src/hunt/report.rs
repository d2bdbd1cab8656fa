//! Scan reports and per-graph summary rows.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::canon::is_isomorphic;
use crate::classify::{
    bipartite_chain, bracket_label, clique_chain, hadwiger_number, is_free_hadwiger, is_free_planar,
};
use crate::color::{chromatic_number, is_critical_fast};
use crate::families::{split_spoke_wheel, wheel, SplitInterpretation};
use crate::graph::Graph;
use crate::graph6::to_graph6;

pub const ENGINE_VERSION: &str = concat!("hadlab-core ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub scan: String,
    pub params: BTreeMap<String, serde_json::Value>,
    /// Length of each list in `classes`.
    pub counts: BTreeMap<String, usize>,
    pub classes: BTreeMap<String, Vec<String>>,
    /// Per-graph facts keyed by graph6 (tags, violating patterns, witnesses).
    pub annotations: BTreeMap<String, BTreeMap<String, String>>,
    /// Auxiliary totals such as graphs examined per order.
    pub stats: BTreeMap<String, u64>,
    pub findings: Vec<String>,
    pub engine_version: String,
    pub wall_ms: u64,
}

impl ScanReport {
    pub fn new(scan: &str) -> ScanReport {
        ScanReport {
            scan: scan.to_string(),
            engine_version: ENGINE_VERSION.to_string(),
            ..ScanReport::default()
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<serde_json::Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    /// Sets a class list (sorted) and its count.
    pub fn set_class(&mut self, name: &str, graphs: &[Graph]) {
        let mut list: Vec<String> = graphs.iter().map(to_graph6).collect();
        list.sort();
        self.counts.insert(name.to_string(), list.len());
        self.classes.insert(name.to_string(), list);
    }

    pub fn annotate(&mut self, g: &Graph, key: &str, value: impl Into<String>) {
        self.annotations
            .entry(to_graph6(g))
            .or_default()
            .insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    pub fn from_json(text: &str) -> serde_json::Result<ScanReport> {
        serde_json::from_str(text)
    }

    /// JSON with the wall time zeroed, for reproducibility comparisons.
    pub fn to_json_without_time(&self) -> String {
        ScanReport {
            wall_ms: 0,
            ..self.clone()
        }
        .to_json()
    }

    pub fn counts_consistent(&self) -> bool {
        self.counts.len() == self.classes.len()
            && self.classes.iter().all(|(k, v)| self.counts.get(k) == Some(&v.len()))
    }

    /// Every graph listed in any class.
    pub fn all_graph6(&self) -> Vec<&str> {
        self.classes.values().flatten().map(String::as_str).collect()
    }
}

/// Names a graph as an odd wheel, a split-spoke wheel, or `other`.
pub fn tag_graph(g: &Graph) -> String {
    let n = g.n();
    if n >= 4 && n % 2 == 0 && is_isomorphic(g, &wheel(n - 1).expect("n - 1 >= 3")) {
        return format!("odd wheel W{}", n - 1);
    }
    for interp in SplitInterpretation::ALL {
        let extra = interp.extra_vertices();
        if n >= 4 + extra && (n - 1 - extra) % 2 == 1 {
            let i = n - 1 - extra;
            if is_isomorphic(g, &split_spoke_wheel(i, interp).expect("odd i >= 3")) {
                return format!("split-spoke wheel W{i} ({interp})");
            }
        }
    }
    "other".to_string()
}

/// One CSV row of a graph summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub chi: usize,
    pub critical: bool,
    pub free_planar: bool,
    pub free_hadwiger4: bool,
    pub bracket_clique: String,
    pub bracket_bipartite: String,
    pub tag: String,
    pub hadwiger: usize,
}

pub fn classify_row(g: &Graph) -> GraphRow {
    let (chi, _) = chromatic_number(g);
    GraphRow {
        graph6: to_graph6(g),
        n: g.n(),
        m: g.m(),
        chi,
        critical: is_critical_fast(g, chi),
        free_planar: is_free_planar(g).verdict,
        free_hadwiger4: is_free_hadwiger(g, 4).expect("order 4 is valid").verdict,
        bracket_clique: bracket_label(g, &clique_chain()).expect("library chain"),
        bracket_bipartite: bracket_label(g, &bipartite_chain()).expect("library chain"),
        tag: tag_graph(g),
        hadwiger: hadwiger_number(g),
    }
}
