//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualise each vertex of the first non-singleton cell,
//! recurse. Every discrete leaf yields a relabelled adjacency matrix and the
//! lexicographically greatest one is the certificate. Leaves that reproduce an
//! earlier certificate give automorphisms, and children lying in one orbit of
//! the automorphisms found so far (restricted to those fixing the current
//! prefix pointwise) are explored only once.

use crate::graph::{bit, bits, Graph};

/// Isomorphism-invariant certificate of a (vertex-coloured) graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    rows: Vec<u64>,
    colors: Vec<u32>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// The canonically relabelled graph.
    pub fn graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.rows.clone())
    }

    /// Upper-triangle bits, row by row; a compact printable key.
    pub fn edge_bits(&self) -> String {
        let n = self.rows.len();
        let mut s = String::with_capacity(n * n / 2);
        for i in 0..n {
            for j in i + 1..n {
                s.push(if self.rows[i] & bit(j) != 0 { '1' } else { '0' });
            }
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct Labeling {
    pub form: CanonicalForm,
    /// `label[v]` is the canonical position of vertex `v`.
    pub label: Vec<usize>,
    /// Non-identity automorphisms discovered during the search.
    pub automorphisms: Vec<Vec<usize>>,
}

struct Leaf {
    rows: Vec<u64>,
    label: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let n = g.n();
    let mut buckets = [0u64; 65];
    'pass: loop {
        if cells.len() == n {
            return;
        }
        for si in 0..cells.len() {
            let splitter = cells[si];
            let mut split = false;
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell & (cell - 1) == 0 {
                    i += 1;
                    continue;
                }
                let (mut lo, mut hi) = (usize::MAX, 0);
                for v in bits(cell) {
                    let c = (g.neighbors(v) & splitter).count_ones() as usize;
                    buckets[c] |= bit(v);
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    buckets[lo] = 0;
                    i += 1;
                    continue;
                }
                let parts: Vec<u64> = (lo..=hi)
                    .filter_map(|c| {
                        let m = std::mem::take(&mut buckets[c]);
                        (m != 0).then_some(m)
                    })
                    .collect();
                let k = parts.len();
                cells.splice(i..=i, parts);
                i += k;
                split = true;
            }
            if split {
                continue 'pass;
            }
        }
        return;
    }
}

impl Search<'_> {
    fn visit(&mut self, mut cells: Vec<u64>, fixed: u64) {
        refine(self.g, &mut cells);
        let n = self.g.n();
        if cells.len() == n {
            self.leaf(&cells);
            return;
        }
        let t = cells
            .iter()
            .position(|c| c & (c - 1) != 0)
            .expect("non-discrete partition has a non-singleton cell");
        let target = cells[t];
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(target) {
            if !explored.is_empty() && self.same_orbit_as_any(v, &explored, fixed) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(bit(v));
            child.push(target & !bit(v));
            child.extend_from_slice(&cells[t + 1..]);
            self.visit(child, fixed | bit(v));
            explored.push(v);
        }
    }

    fn same_orbit_as_any(&self, v: usize, explored: &[usize], fixed: u64) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if bits(fixed).any(|f| gamma[f] != f) {
                continue;
            }
            any = true;
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == root)
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.g.n();
        let mut label = vec![0usize; n];
        for (i, &c) in cells.iter().enumerate() {
            label[c.trailing_zeros() as usize] = i;
        }
        let mut rows = vec![0u64; n];
        for v in 0..n {
            rows[label[v]] = bits(self.g.neighbors(v)).fold(0, |acc, w| acc | bit(label[w]));
        }
        let leaf = Leaf { rows, label };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                rows: leaf.rows.clone(),
                label: leaf.label.clone(),
            });
            self.best = Some(leaf);
            return;
        };
        if leaf.rows == first.rows {
            let auto = automorphism(&first.label, &leaf.label);
            self.push_auto(auto);
            return;
        }
        let best = self.best.as_ref().expect("best set with first");
        match leaf.rows.cmp(&best.rows) {
            std::cmp::Ordering::Equal => {
                let auto = automorphism(&best.label, &leaf.label);
                self.push_auto(auto);
            }
            std::cmp::Ordering::Greater => self.best = Some(leaf),
            std::cmp::Ordering::Less => {}
        }
    }

    fn push_auto(&mut self, auto: Vec<usize>) {
        if auto.iter().enumerate().any(|(i, &x)| i != x) {
            self.autos.push(auto);
        }
    }
}

/// The automorphism sending `x` to the vertex that `reference` puts where `other` puts `x`.
fn automorphism(reference: &[usize], other: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; reference.len()];
    for (v, &l) in reference.iter().enumerate() {
        inv[l] = v;
    }
    other.iter().map(|&l| inv[l]).collect()
}

/// Canonical labelling of a vertex-coloured graph; colours are respected
/// (only colour-preserving relabellings are considered) and ordered ascending.
pub fn canonical_labeling_colored(g: &Graph, colors: &[u32]) -> Labeling {
    assert_eq!(colors.len(), g.n(), "one colour per vertex");
    let n = g.n();
    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cells: Vec<u64> = palette
        .iter()
        .map(|&c| (0..n).filter(|&v| colors[v] == c).fold(0, |m, v| m | bit(v)))
        .collect();
    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    if n == 0 {
        return Labeling {
            form: CanonicalForm {
                rows: Vec::new(),
                colors: Vec::new(),
            },
            label: Vec::new(),
            automorphisms: Vec::new(),
        };
    }
    search.visit(cells, 0);
    let best = search.best.expect("search visits at least one leaf");
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    Labeling {
        form: CanonicalForm {
            rows: best.rows,
            colors: sorted,
        },
        label: best.label,
        automorphisms: search.autos,
    }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_colored(g, &vec![0; g.n()])
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

/// `g` relabelled into canonical order.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).graph()
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.m() == h.m() && canonical_form(g) == canonical_form(h)
}
