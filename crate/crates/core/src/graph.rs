//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex's neighbourhood is one `u64` bitmask. Every edit returns a new
//! graph with vertices relabelled onto the contiguous range `0..n`.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in ascending order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// An undirected edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalises endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = low_mask(n) & !bit(v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.insert_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating symmetry and range.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        for (v, &row) in rows.iter().enumerate() {
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            if row & !low_mask(n) != 0 {
                return Err(Error::VertexOutOfRange {
                    v: 63 - row.leading_zeros() as usize,
                    n,
                });
            }
            for w in bits(row) {
                if rows[w] & bit(v) == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency not symmetric at ({v}, {w})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Rows are trusted; used on hot paths where they come from another graph.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        let g = Graph {
            n: rows.len(),
            adj: rows,
        };
        g.debug_check();
        g
    }

    pub(crate) fn insert_edge(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] & bit(b) != 0
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Vertex pairs that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let missing = !self.adj[u] & self.vertex_mask() & !low_mask(u + 1);
            for v in bits(missing) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_of(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the vertices of `set` induce a connected subgraph. The empty set is not connected.
    pub fn is_connected_set(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        self.component_of(set.trailing_zeros() as usize, set) == set
    }

    /// The null graph and K1 count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.is_connected_set(self.vertex_mask())
    }

    /// Vertices whose removal keeps the graph connected (assumes `self` connected).
    pub fn non_cut_vertices(&self) -> u64 {
        let all = self.vertex_mask();
        let mut out = 0;
        for v in 0..self.n {
            let rest = all & !bit(v);
            if rest == 0 || self.is_connected_set(rest) {
                out |= bit(v);
            }
        }
        out
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in bits(self.adj[v]) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    fn check_edge(&self, e: Edge) -> Result<()> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        if !self.has_edge(e.u, e.v) {
            return Err(Error::MissingEdge(e.u, e.v));
        }
        Ok(())
    }

    #[inline]
    fn debug_check(&self) {
        if cfg!(debug_assertions) {
            for v in 0..self.n {
                debug_assert_eq!(self.adj[v] & bit(v), 0, "self-loop at {v}");
                debug_assert_eq!(self.adj[v] & !low_mask(self.n), 0);
                for w in bits(self.adj[v]) {
                    debug_assert!(self.adj[w] & bit(v) != 0, "asymmetric at ({v},{w})");
                }
            }
        }
    }

    /// Graph with vertex `v` renamed to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            let mut row = 0;
            for w in bits(self.adj[v]) {
                row |= bit(perm[w]);
            }
            rows[perm[v]] = row;
        }
        Graph::from_rows_unchecked(rows)
    }

    /// Subgraph induced by `keep`, relabelled in increasing vertex order.
    pub fn induced(&self, keep: u64) -> Graph {
        let keep = keep & self.vertex_mask();
        let kept: Vec<usize> = bits(keep).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let rows = kept
            .iter()
            .map(|&v| bits(self.adj[v] & keep).fold(0u64, |acc, w| acc | bit(index[w])))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    pub fn with_edge(&self, a: usize, b: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(a, b)?;
        Ok(g)
    }

    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        self.check_edge(e)?;
        let mut g = self.clone();
        g.adj[e.u] &= !bit(e.v);
        g.adj[e.v] &= !bit(e.u);
        Ok(g)
    }

    /// Removes `v`; later labels shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertex_mask() & !bit(v)))
    }

    /// Merges the endpoints of `e` into the slot of the smaller endpoint;
    /// the larger endpoint is removed and later labels shift down.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph> {
        self.check_edge(e)?;
        let mut g = self.clone();
        let merged = (g.adj[e.u] | g.adj[e.v]) & !bit(e.u) & !bit(e.v);
        for w in bits(g.adj[e.v]) {
            g.adj[w] &= !bit(e.v);
        }
        for w in bits(merged) {
            g.adj[w] |= bit(e.u);
        }
        g.adj[e.u] = merged;
        g.adj[e.v] = 0;
        Ok(g.induced(g.vertex_mask() & !bit(e.v)))
    }

    /// Replaces `v` by two non-adjacent vertices: `v` keeps its slot with
    /// neighbourhood `part1`, a new vertex `n` receives `part2`.
    pub fn split_vertex(&self, v: usize, part1: &[usize], part2: &[usize]) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        let to_mask = |part: &[usize]| -> Result<u64> {
            let mut m = 0u64;
            for &w in part {
                self.check_vertex(w)?;
                if m & bit(w) != 0 {
                    return Err(Error::InvalidSplit(format!("vertex {w} listed twice")));
                }
                m |= bit(w);
            }
            Ok(m)
        };
        let (m1, m2) = (to_mask(part1)?, to_mask(part2)?);
        if m1 == 0 || m2 == 0 {
            return Err(Error::InvalidSplit("both parts must be nonempty".into()));
        }
        if m1 & m2 != 0 {
            return Err(Error::InvalidSplit("parts overlap".into()));
        }
        if m1 | m2 != self.adj[v] {
            return Err(Error::InvalidSplit(format!(
                "parts do not partition the neighbourhood of {v}"
            )));
        }
        Ok(self.split_with_cover(v, m1, m2, false))
    }

    /// Vertex split with arbitrary neighbour masks, optionally joining the two halves.
    /// Used by uncontraction, where the halves may share neighbours.
    pub(crate) fn split_with_cover(&self, v: usize, m1: u64, m2: u64, join: bool) -> Graph {
        let new = self.n;
        let mut rows = self.adj.clone();
        rows.push(0);
        for w in bits(self.adj[v]) {
            rows[w] &= !bit(v);
        }
        rows[v] = m1;
        rows[new] = m2;
        for w in bits(m1) {
            rows[w] |= bit(v);
        }
        for w in bits(m2) {
            rows[w] |= bit(new);
        }
        if join {
            rows[v] |= bit(new);
            rows[new] |= bit(v);
        }
        Graph::from_rows_unchecked(rows)
    }

    /// Replaces `e = uv` by the path `u - w - v` through a new vertex `w = n`.
    pub fn subdivide_edge(&self, e: Edge) -> Result<Graph> {
        self.check_edge(e)?;
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        let mut g = self.delete_edge(e)?;
        let w = g.n;
        g.n += 1;
        g.adj.push(0);
        g.insert_edge(e.u, w)?;
        g.insert_edge(e.v, w)?;
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut rows = self.adj.clone();
        rows.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Graphviz rendering: vertex ids `0..n`, one line per edge.
    pub fn to_dot(&self) -> String {
        self.to_dot_labelled(|_| None)
    }

    pub fn to_dot_labelled(&self, label: impl Fn(usize) -> Option<String>) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            match label(v) {
                Some(l) => s.push_str(&format!("  {v} [label=\"{l}\"];\n")),
                None => s.push_str(&format!("  {v};\n")),
            }
        }
        for e in self.edges() {
            s.push_str(&format!("  {} -- {};\n", e.u, e.v));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}
