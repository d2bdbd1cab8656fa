//! Slow reference implementations used to cross-check the search engines.
//!
//! Nothing here shares code paths with the engines it checks: colourings are
//! found by trying every assignment, and isomorphism classes are counted by
//! filtering every labelled graph.

use std::collections::HashSet;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// χ(G) by exhaustive assignment, trying `k = 0..=k_max`; `None` if χ > k_max.
/// Refuses hosts where `k_max^n` would exceed about 2^24 assignments.
pub fn chromatic_bruteforce(g: &Graph, k_max: usize) -> Result<Option<usize>> {
    let n = g.n();
    if (k_max.max(2) as f64).powi(n as i32) > (1u64 << 24) as f64 {
        return Err(Error::HostTooLarge { n, max: 12 });
    }
    let edges = g.edges();
    for k in 0..=k_max {
        if n == 0 {
            return Ok(Some(0));
        }
        if k == 0 {
            continue;
        }
        let mut assign = vec![0usize; n];
        loop {
            if edges.iter().all(|e| assign[e.u] != assign[e.v]) {
                return Ok(Some(k));
            }
            // odometer increment
            let mut i = 0;
            while i < n {
                assign[i] += 1;
                if assign[i] < k {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    Ok(None)
}

/// Number of isomorphism classes of connected graphs on `n` vertices, by
/// canonicalising every connected labelled graph.
pub fn count_connected_labeled(n: usize) -> Result<usize> {
    if n > 7 {
        return Err(Error::HostTooLarge { n, max: 7 });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut seen = HashSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut rows = vec![0u64; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask & bit(k) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
        let g = Graph::from_rows(rows)?;
        if n == 0 || g.is_connected() {
            seen.insert(canonical_form(&g));
        }
    }
    Ok(seen.len())
}

/// All graphs on `n` vertices (labelled), for exhaustive tests.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 7, "2^21 labelled graphs is the practical limit");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..(1u64 << pairs.len())).map(move |mask| {
        let mut rows = vec![0u64; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask & bit(k) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
        Graph::from_rows_unchecked(rows)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_chromatic() {
        assert_eq!(chromatic_bruteforce(&Graph::complete(4).unwrap(), 4).unwrap(), Some(4));
        assert_eq!(chromatic_bruteforce(&Graph::complete(5).unwrap(), 4).unwrap(), None);
        assert_eq!(chromatic_bruteforce(&Graph::empty(3).unwrap(), 4).unwrap(), Some(1));
    }

    #[test]
    fn labeled_counts_small() {
        assert_eq!(count_connected_labeled(1).unwrap(), 1);
        assert_eq!(count_connected_labeled(3).unwrap(), 2);
        assert_eq!(count_connected_labeled(4).unwrap(), 6);
        assert_eq!(count_connected_labeled(5).unwrap(), 21);
    }
}
