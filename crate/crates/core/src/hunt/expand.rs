//! Inverse edge contraction.

use std::collections::HashSet;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{bits, Edge, Graph};

pub const MAX_EXPAND_N: usize = 14;

/// A graph `H` with a marked edge whose contraction gives the source graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub graph: Graph,
    pub split: Edge,
}

/// Every graph (up to isomorphism) with one more vertex that contracts to `g`
/// along some edge. Vertex `v` becomes the adjacent pair `v`, `n`; each old
/// neighbour of `v` is assigned to one half or to both.
pub fn expand_by_uncontraction(g: &Graph) -> Result<Vec<Expansion>> {
    let n = g.n();
    if n > MAX_EXPAND_N {
        return Err(Error::HostTooLarge { n, max: MAX_EXPAND_N });
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for v in 0..n {
        let nbrs: Vec<usize> = bits(g.neighbors(v)).collect();
        let total = 3usize.pow(nbrs.len() as u32);
        for code in 0..total {
            let (mut m1, mut m2, mut c) = (0u64, 0u64, code);
            for &w in &nbrs {
                match c % 3 {
                    0 => m1 |= 1 << w,
                    1 => m2 |= 1 << w,
                    _ => {
                        m1 |= 1 << w;
                        m2 |= 1 << w;
                    }
                }
                c /= 3;
            }
            let h = g.split_with_cover(v, m1, m2, true);
            if seen.insert(canonical_form(&h)) {
                out.push(Expansion {
                    graph: h,
                    split: Edge::new(v, n),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::oracle::all_labeled_graphs;

    #[test]
    fn contraction_recovers_source() {
        let g = crate::families::wheel(4).unwrap();
        for e in expand_by_uncontraction(&g).unwrap() {
            assert_eq!(e.graph.n(), g.n() + 1);
            assert!(is_isomorphic(&e.graph.contract_edge(e.split).unwrap(), &g));
        }
    }

    #[test]
    fn k3_preimages_match_brute_force() {
        let k3 = canonical_form(&Graph::complete(3).unwrap());
        let mut brute = HashSet::new();
        for h in all_labeled_graphs(4) {
            if h.edges()
                .iter()
                .any(|&e| canonical_form(&h.contract_edge(e).unwrap()) == k3)
            {
                brute.insert(canonical_form(&h));
            }
        }
        let ours: HashSet<_> = expand_by_uncontraction(&Graph::complete(3).unwrap())
            .unwrap()
            .iter()
            .map(|e| canonical_form(&e.graph))
            .collect();
        assert_eq!(ours, brute);
        // C4, paw, diamond, K4
        assert_eq!(ours.len(), 4);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(ours.contains(&canonical_form(&c4)));
    }

    #[test]
    fn preimages_match_brute_force_on_five_vertices() {
        for g in all_labeled_graphs(4).filter(|g| g.is_connected()) {
            let target = canonical_form(&g);
            let mut brute = HashSet::new();
            for h in all_labeled_graphs(5) {
                if h.edges()
                    .iter()
                    .any(|&e| canonical_form(&h.contract_edge(e).unwrap()) == target)
                {
                    brute.insert(canonical_form(&h));
                }
            }
            let ours: HashSet<_> = expand_by_uncontraction(&g)
                .unwrap()
                .iter()
                .map(|e| canonical_form(&e.graph))
                .collect();
            assert_eq!(ours, brute, "{g:?}");
        }
    }

    #[test]
    fn size_limit() {
        assert!(expand_by_uncontraction(&Graph::empty(15).unwrap()).is_err());
    }
}
