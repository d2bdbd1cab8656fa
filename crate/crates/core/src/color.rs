//! Exact vertex colouring and edge-criticality.
//!
//! `is_k_colorable` is a DSATUR-ordered backtracking search: the next vertex
//! is the uncoloured one with the most distinct neighbour colours (ties: larger
//! degree, then lower index), and a fresh colour is only ever the next unused
//! one, which removes colour-permutation symmetry.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    /// Colour of each vertex, `0..k`.
    pub colors: Vec<usize>,
    /// Number of colours used.
    pub k: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && g.edges().iter().all(|e| self.colors[e.u] != self.colors[e.v])
    }
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    /// Vertices of each colour class.
    classes: Vec<u64>,
    uncolored: u64,
    colors: Vec<usize>,
}

impl Dsatur<'_> {
    fn forbidden(&self, v: usize, used: usize) -> u64 {
        let nb = self.g.neighbors(v);
        (0..used).fold(0, |acc, c| if self.classes[c] & nb != 0 { acc | bit(c) } else { acc })
    }

    fn pick(&self, used: usize) -> (usize, u64) {
        let mut best = (0usize, 0u64);
        let mut key = (0u32, 0u32, false);
        for v in bits(self.uncolored) {
            let f = self.forbidden(v, used);
            let k = (f.count_ones(), self.g.degree(v) as u32, true);
            if !key.2 || k.0 > key.0 || (k.0 == key.0 && k.1 > key.1) {
                key = k;
                best = (v, f);
            }
        }
        best
    }

    fn solve(&mut self, used: usize) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        let (v, forbidden) = self.pick(used);
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if forbidden & bit(c) != 0 {
                continue;
            }
            self.uncolored &= !bit(v);
            self.classes[c] |= bit(v);
            self.colors[v] = c;
            if self.solve(used.max(c + 1)) {
                return true;
            }
            self.classes[c] &= !bit(v);
            self.uncolored |= bit(v);
        }
        false
    }
}

/// A proper colouring with at most `k` colours, if one exists.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    if g.n() == 0 {
        return Some(Coloring {
            colors: Vec::new(),
            k: 0,
        });
    }
    if k == 0 || k < 2 && g.m() > 0 {
        return None;
    }
    let k = k.min(g.n());
    let mut s = Dsatur {
        g,
        k,
        classes: vec![0; k],
        uncolored: g.vertex_mask(),
        colors: vec![usize::MAX; g.n()],
    };
    if !s.solve(0) {
        return None;
    }
    let used = s.colors.iter().max().map_or(0, |&c| c + 1);
    Some(Coloring {
        colors: s.colors,
        k: used,
    })
}

/// χ(G) together with an optimal colouring.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    let start = match (g.n(), g.m()) {
        (0, _) => 0,
        (_, 0) => 1,
        _ => 2,
    };
    for k in start..=g.n() {
        if let Some(c) = is_k_colorable(g, k) {
            return (k, c);
        }
    }
    unreachable!("every graph is n-colourable")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Critical,
    ChiMismatch,
    /// χ = k and every edge is critical, but the graph is disconnected.
    Disconnected,
    NonCriticalEdge {
        edge: Edge,
    },
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Critical => write!(f, "critical"),
            Verdict::ChiMismatch => write!(f, "chi_mismatch"),
            Verdict::Disconnected => write!(f, "disconnected"),
            Verdict::NonCriticalEdge { edge } => write!(f, "non_critical_edge({edge})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub chi: usize,
    pub k: usize,
    /// χ(G − e) for every edge, in edge order.
    pub edge_results: Vec<(Edge, usize)>,
    pub verdict: Verdict,
}

impl CriticalityReport {
    pub fn is_critical(&self) -> bool {
        self.verdict == Verdict::Critical
    }
}

/// χ(G − e), given χ(G): deleting an edge lowers χ by at most one.
fn chi_without_edge(g: &Graph, e: Edge, chi: usize) -> usize {
    let h = g.delete_edge(e).expect("edge taken from the graph");
    if chi > 0 && is_k_colorable(&h, chi - 1).is_some() {
        chi - 1
    } else {
        chi
    }
}

/// Edge-criticality report: G is k-critical iff χ(G) = k, G is connected and
/// χ(G − e) < k for every edge e.
pub fn is_k_critical(g: &Graph, k: usize) -> Result<CriticalityReport> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "criticality order k = {k} must be at least 2"
        )));
    }
    let (chi, _) = chromatic_number(g);
    let edge_results: Vec<(Edge, usize)> = g
        .edges()
        .into_iter()
        .map(|e| (e, chi_without_edge(g, e, chi)))
        .collect();
    let verdict = if chi != k {
        Verdict::ChiMismatch
    } else if let Some(&(edge, _)) = edge_results.iter().find(|(_, c)| *c >= k) {
        Verdict::NonCriticalEdge { edge }
    } else if !g.is_connected() {
        Verdict::Disconnected
    } else {
        Verdict::Critical
    };
    Ok(CriticalityReport {
        chi,
        k,
        edge_results,
        verdict,
    })
}

/// Short-circuiting criticality test for scans; agrees with
/// `is_k_critical(g, k)?.is_critical()`.
pub fn is_critical_fast(g: &Graph, k: usize) -> bool {
    if k < 2 || g.n() < k || g.min_degree() + 1 < k || !g.is_connected() {
        return false;
    }
    if is_k_colorable(g, k - 1).is_some() || is_k_colorable(g, k).is_none() {
        return false;
    }
    g.edges().into_iter().all(|e| {
        let h = g.delete_edge(e).expect("edge taken from the graph");
        is_k_colorable(&h, k - 1).is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hypercube, truncate_corners, wheel};
    use crate::oracle::chromatic_bruteforce;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn colorability_examples() {
        assert!(is_k_colorable(&Graph::complete(4).unwrap(), 3).is_none());
        let c = is_k_colorable(&cycle(5), 3).unwrap();
        assert!(c.is_proper(&cycle(5)));
        assert_eq!(c.k, 3);
        let q4 = hypercube(4).unwrap();
        let c = is_k_colorable(&q4, 2).unwrap();
        assert!(c.is_proper(&q4));
        for v in 0..16usize {
            assert_eq!(c.colors[v] != c.colors[0], (v.count_ones() % 2) == 1);
        }
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&wheel(5).unwrap()).0, 4);
        assert_eq!(chromatic_number(&wheel(6).unwrap()).0, 3);
        let g3 = truncate_corners(&hypercube(3).unwrap(), &[0]).unwrap();
        assert_eq!(chromatic_number(&g3).0, 4);
        assert!(is_k_colorable(&g3, 3).is_none());
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()).0, 0);
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()).0, 1);
    }

    #[test]
    fn criticality_examples() {
        let r = is_k_critical(&Graph::complete(4).unwrap(), 4).unwrap();
        assert_eq!(r.verdict, Verdict::Critical);
        assert!(r.edge_results.iter().all(|&(_, c)| c == 3));
        let r = is_k_critical(&wheel(5).unwrap(), 4).unwrap();
        assert_eq!(r.verdict, Verdict::Critical);
        for &(e, c) in &r.edge_results {
            let h = wheel(5).unwrap().delete_edge(e).unwrap();
            assert_eq!(Some(c), chromatic_bruteforce(&h, 4).unwrap());
        }
        let r = is_k_critical(&wheel(6).unwrap(), 4).unwrap();
        assert_eq!((r.verdict, r.chi), (Verdict::ChiMismatch, 3));
        assert!(is_k_critical(&cycle(5), 1).is_err());
    }

    #[test]
    fn non_critical_edge_is_named() {
        // K4 with a pendant vertex: the pendant edge is not critical
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let r = is_k_critical(&g, 4).unwrap();
        assert_eq!(r.verdict, Verdict::NonCriticalEdge { edge: Edge::new(3, 4) });
        assert!(!is_critical_fast(&g, 4));
    }

    #[test]
    fn disconnected_input() {
        let k4 = Graph::complete(4).unwrap();
        let with_isolated = k4.disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(is_k_critical(&with_isolated, 4).unwrap().verdict, Verdict::Disconnected);
        let two = k4.disjoint_union(&k4).unwrap();
        assert!(matches!(
            is_k_critical(&two, 4).unwrap().verdict,
            Verdict::NonCriticalEdge { .. }
        ));
    }

    #[test]
    fn odd_cycles_are_three_critical() {
        for n in 3..10 {
            let r = is_k_critical(&cycle(n), 3).unwrap();
            assert_eq!(r.is_critical(), n % 2 == 1, "C{n}");
            assert_eq!(is_critical_fast(&cycle(n), 3), n % 2 == 1);
        }
    }
}
