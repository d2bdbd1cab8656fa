//! Minor containment with explicit branch-set witnesses.
//!
//! `has_minor` places one branch set per pattern vertex. Branch sets are
//! enumerated as connected vertex sets rooted at their lowest host vertex
//! (host relabelled by descending degree), each generated exactly once by the
//! ESU extension rule. A candidate set is accepted only if it touches every
//! already placed neighbour set and leaves enough free neighbours for the
//! pattern edges still to be realised. Twin pattern vertices (those whose
//! transposition is an automorphism) must have increasing roots.

use std::cmp::Reverse;
use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::canon::canonical_graph;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, low_mask, Edge, Graph};

/// Witness for `H ≼ G`: `branch_sets[a]` is the host vertex set contracted onto pattern vertex `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorModel {
    /// Checks disjointness, connectivity and edge realisation directly.
    pub fn validate(&self, host: &Graph, pattern: &Graph) -> std::result::Result<(), String> {
        if self.branch_sets.len() != pattern.n() {
            return Err(format!(
                "{} branch sets for a pattern on {} vertices",
                self.branch_sets.len(),
                pattern.n()
            ));
        }
        let mut masks = Vec::with_capacity(pattern.n());
        let mut used = 0u64;
        for (a, set) in self.branch_sets.iter().enumerate() {
            let mut m = 0u64;
            for &v in set {
                if v >= host.n() {
                    return Err(format!("branch set {a} names vertex {v} outside the host"));
                }
                if (used | m) & bit(v) != 0 {
                    return Err(format!("vertex {v} used twice"));
                }
                m |= bit(v);
            }
            if !host.is_connected_set(m) {
                return Err(format!("branch set {a} is empty or disconnected"));
            }
            used |= m;
            masks.push(m);
        }
        for e in pattern.edges() {
            let touch = bits(masks[e.u]).any(|v| host.neighbors(v) & masks[e.v] != 0);
            if !touch {
                return Err(format!("pattern edge {e} not realised"));
            }
        }
        Ok(())
    }
}

struct Search<'a> {
    host: &'a Graph,
    hn: usize,
    /// Placement index -> mask of earlier placement indices adjacent in the pattern.
    earlier: Vec<u64>,
    /// `need[j][i]`: pattern neighbours of placement `j` placed strictly after `i`.
    need: Vec<Vec<u32>>,
    twin_prev: Vec<Option<usize>>,
    sets: Vec<u64>,
}

impl Search<'_> {
    #[inline]
    fn nbhd(&self, set: u64) -> u64 {
        bits(set).fold(0, |acc, v| acc | self.host.neighbors(v)) & !set
    }

    fn accept(&self, i: usize, set: u64, unused: u64) -> bool {
        let after = unused & !set;
        if (after.count_ones() as usize) < self.hn - i - 1 {
            return false;
        }
        let around = self.nbhd(set);
        if bits(self.earlier[i]).any(|j| around & self.sets[j] == 0) {
            return false;
        }
        if (around & after).count_ones() < self.need[i][i] {
            return false;
        }
        (0..i).all(|j| {
            let need = self.need[j][i];
            need == 0 || (self.nbhd(self.sets[j]) & after).count_ones() >= need
        })
    }

    fn place(&mut self, i: usize, unused: u64) -> bool {
        if i == self.hn {
            return true;
        }
        let remaining = self.hn - i;
        let free = unused.count_ones() as usize;
        if free < remaining {
            return false;
        }
        let max_size = free - (remaining - 1);
        let min_root = self.twin_prev[i].map_or(0, |j| self.sets[j].trailing_zeros() as usize + 1);
        for r in bits(unused & !low_mask(min_root)) {
            let allowed = unused & !low_mask(r + 1);
            let ext = self.host.neighbors(r) & allowed;
            if self.grow(i, bit(r), ext, allowed, unused, max_size) {
                return true;
            }
        }
        false
    }

    fn grow(&mut self, i: usize, sub: u64, ext: u64, allowed: u64, unused: u64, max_size: usize) -> bool {
        if self.accept(i, sub, unused) {
            self.sets[i] = sub;
            if self.place(i + 1, unused & !sub) {
                return true;
            }
        }
        if sub.count_ones() as usize >= max_size {
            return false;
        }
        let closed = sub | self.nbhd(sub);
        let mut rest = ext;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let fresh = self.host.neighbors(w) & allowed & !closed;
            if self.grow(i, sub | bit(w), rest | fresh, allowed, unused, max_size) {
                return true;
            }
        }
        false
    }
}

fn placement_order(h: &Graph) -> Vec<usize> {
    let hn = h.n();
    let mut placed = 0u64;
    let mut seq = Vec::with_capacity(hn);
    while seq.len() < hn {
        let next = (0..hn)
            .filter(|&a| placed & bit(a) == 0)
            .max_by_key(|&a| ((h.neighbors(a) & placed).count_ones(), h.degree(a), Reverse(a)))
            .expect("unplaced vertex remains");
        placed |= bit(next);
        seq.push(next);
    }
    seq
}

/// Groups pattern vertices into classes in which every pair are twins.
fn twin_classes(h: &Graph) -> Vec<usize> {
    let twins = |a: usize, b: usize| h.neighbors(a) & !bit(b) == h.neighbors(b) & !bit(a);
    let mut class_of = vec![usize::MAX; h.n()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..h.n() {
        match classes.iter().position(|c| c.iter().all(|&b| twins(a, b))) {
            Some(c) => {
                classes[c].push(a);
                class_of[a] = c;
            }
            None => {
                class_of[a] = classes.len();
                classes.push(vec![a]);
            }
        }
    }
    class_of
}

/// A minor model of the connected pattern `h` in `g`, if one exists.
pub fn has_minor(g: &Graph, h: &Graph) -> Result<Option<MinorModel>> {
    let hn = h.n();
    if hn == 0 {
        return Err(Error::UnsupportedPattern("empty pattern".into()));
    }
    if !h.is_connected() {
        return Err(Error::UnsupportedPattern("pattern must be connected".into()));
    }
    if hn > g.n() || h.m() > g.m() {
        return Ok(None);
    }

    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    let mut rank = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let host = g.permuted(&rank);

    let seq = placement_order(h);
    let mut pos = vec![0usize; hn];
    for (i, &a) in seq.iter().enumerate() {
        pos[a] = i;
    }
    let earlier: Vec<u64> = (0..hn)
        .map(|i| {
            bits(h.neighbors(seq[i]))
                .filter(|&b| pos[b] < i)
                .fold(0, |m, b| m | bit(pos[b]))
        })
        .collect();
    let need: Vec<Vec<u32>> = (0..hn)
        .map(|j| {
            (0..hn)
                .map(|i| bits(h.neighbors(seq[j])).filter(|&b| pos[b] > i).count() as u32)
                .collect()
        })
        .collect();
    let class_of = twin_classes(h);
    let twin_prev: Vec<Option<usize>> = (0..hn)
        .map(|i| (0..i).rev().find(|&j| class_of[seq[j]] == class_of[seq[i]]))
        .collect();

    let mut search = Search {
        host: &host,
        hn,
        earlier,
        need,
        twin_prev,
        sets: vec![0; hn],
    };
    if !search.place(0, host.vertex_mask()) {
        return Ok(None);
    }
    let mut branch_sets = vec![Vec::new(); hn];
    for (i, &a) in seq.iter().enumerate() {
        let mut set: Vec<usize> = bits(search.sets[i]).map(|x| order[x]).collect();
        set.sort_unstable();
        branch_sets[a] = set;
    }
    let model = MinorModel { branch_sets };
    debug_assert_eq!(model.validate(g, h), Ok(()));
    Ok(Some(model))
}

pub fn is_minor(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(has_minor(g, h)?.is_some())
}

/// An injective map from `pattern` vertices to `host` vertices carrying edges to edges.
pub fn subgraph_embedding(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    fn go(host: &Graph, pattern: &Graph, seq: &[usize], map: &mut Vec<usize>, used: u64, i: usize) -> bool {
        if i == seq.len() {
            return true;
        }
        let a = seq[i];
        for x in bits(host.vertex_mask() & !used) {
            if host.degree(x) < pattern.degree(a) {
                continue;
            }
            let ok = bits(pattern.neighbors(a))
                .filter(|&b| map[b] != usize::MAX)
                .all(|b| host.has_edge(x, map[b]));
            if ok {
                map[a] = x;
                if go(host, pattern, seq, map, used | bit(x), i + 1) {
                    return true;
                }
                map[a] = usize::MAX;
            }
        }
        false
    }
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return None;
    }
    let seq = placement_order(pattern);
    let mut map = vec![usize::MAX; pattern.n()];
    go(host, pattern, &seq, &mut map, 0, 0).then_some(map)
}

pub const BRUTEFORCE_MAX_HOST: usize = 8;

/// Minor test by exhaustive exploration of the deletion/contraction closure of `g`,
/// memoised on canonical forms. Hosts are limited to 8 vertices.
pub fn has_minor_bruteforce(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() > BRUTEFORCE_MAX_HOST {
        return Err(Error::HostTooLarge {
            n: g.n(),
            max: BRUTEFORCE_MAX_HOST,
        });
    }
    if h.n() > g.n() {
        return Ok(false);
    }
    let start = canonical_graph(g);
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(x) = queue.pop_front() {
        if x.m() < h.m() {
            continue;
        }
        if x.n() == h.n() {
            if subgraph_embedding(&x, h).is_some() {
                return Ok(true);
            }
            continue;
        }
        let mut children: Vec<Graph> = (0..x.n())
            .map(|v| x.delete_vertex(v).expect("vertex in range"))
            .collect();
        for e in x.edges() {
            children.push(x.contract_edge(e).expect("edge in graph"));
        }
        for c in children {
            let c = canonical_graph(&c);
            if seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    Ok(false)
}

/// Contracts a sequence of edges given in the labels of the current graph at each step.
pub fn contract_all(g: &Graph, edges: &[Edge]) -> Result<Graph> {
    edges.iter().try_fold(g.clone(), |acc, &e| acc.contract_edge(e))
}
