//! Exhaustive scans over small connected graphs, corner truncations and
//! higher-wheel expansions.

use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_graph};
use crate::classify::{is_free_hadwiger, is_free_planar};
use crate::color::{is_critical_fast, is_k_critical};
use crate::error::{Error, Result};
use crate::families::{hypercube, truncate_corners, verify_higher_wheel, CandidateStore, CheckStatus};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::hunt::enumerate::{scan_connected, with_pool, MAX_ENUM_N};
use crate::hunt::expand::expand_by_uncontraction;
use crate::hunt::report::{tag_graph, ScanReport};

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn check_n_max(n_max: usize) -> Result<()> {
    if !(1..=MAX_ENUM_N).contains(&n_max) {
        return Err(Error::InvalidParameter(format!(
            "n_max {n_max} outside 1..={MAX_ENUM_N}"
        )));
    }
    Ok(())
}

/// All `k`-critical connected graphs on at most `n_max` vertices, with the
/// number of connected graphs examined at each order.
fn critical_graphs(n_max: usize, k: usize, jobs: usize) -> Result<(Vec<Graph>, Vec<u64>)> {
    let examined: Vec<AtomicU64> = (0..=n_max).map(|_| AtomicU64::new(0)).collect();
    let found = scan_connected(n_max, jobs, |g| {
        examined[g.n()].fetch_add(1, Ordering::Relaxed);
        (g.min_degree() + 1 >= k && is_critical_fast(g, k)).then(|| g.clone())
    })?;
    Ok((found, examined.into_iter().map(AtomicU64::into_inner).collect()))
}

pub fn find_k_critical(n_max: usize, k: usize, jobs: usize) -> Result<ScanReport> {
    check_n_max(n_max)?;
    if !(3..=5).contains(&k) {
        return Err(Error::InvalidParameter(format!("k = {k} outside 3..=5")));
    }
    let start = Instant::now();
    let (found, examined) = critical_graphs(n_max, k, jobs)?;
    let mut r = ScanReport::new("find_k_critical");
    r.param("n_max", n_max);
    r.param("k", k);
    r.set_class("critical", &found);
    for (n, &c) in examined.iter().enumerate().skip(1) {
        r.stats.insert(format!("connected_n{n:02}"), c);
    }
    let mut per_n: BTreeMap<usize, usize> = BTreeMap::new();
    for g in &found {
        *per_n.entry(g.n()).or_default() += 1;
    }
    for (n, c) in per_n {
        r.stats.insert(format!("critical_n{n:02}"), c as u64);
    }
    r.findings.push(format!(
        "{} {k}-critical graphs with at most {n_max} vertices",
        found.len()
    ));
    r.wall_ms = elapsed_ms(start);
    Ok(r)
}

/// Where a 4-critical graph falls with respect to the free classes.
#[derive(Clone, Debug)]
struct Classified {
    graph: Graph,
    class: &'static str,
    notes: Vec<(&'static str, String)>,
}

fn classify_critical(g: &Graph) -> Classified {
    let fh = is_free_hadwiger(g, 4).expect("order 4 is valid");
    let fp = is_free_planar(g);
    let mut notes = Vec::new();
    let class = match (&fh.violation, &fp.violation) {
        (None, None) => "class_i",
        (None, Some(v)) => {
            notes.push(("planar_violation", v.pattern.to_string()));
            notes.push((
                "planar_witness",
                serde_json::to_string(&v.model.branch_sets).expect("plain data"),
            ));
            "class_ii"
        }
        (Some(v), _) => {
            notes.push(("violating_pattern", v.pattern.to_string()));
            notes.push((
                "witness",
                serde_json::to_string(&v.model.branch_sets).expect("plain data"),
            ));
            "class_iii"
        }
    };
    if class != "class_iii" {
        notes.push(("tag", tag_graph(g)));
    }
    Classified {
        graph: g.clone(),
        class,
        notes,
    }
}

/// Partitions the 4-critical graphs on at most `n_max` vertices into
/// (i) free-Hadwiger(4) and free-planar, (ii) free-Hadwiger(4) only and
/// (iii) not free-Hadwiger(4).
pub fn question1_scan(n_max: usize, jobs: usize) -> Result<ScanReport> {
    check_n_max(n_max)?;
    let start = Instant::now();
    let (critical, examined) = critical_graphs(n_max, 4, jobs)?;
    let classified: Vec<Classified> = with_pool(jobs, || critical.par_iter().map(classify_critical).collect());

    let mut r = ScanReport::new("question1");
    r.param("n_max", n_max);
    r.param("k", 4);
    for (n, &c) in examined.iter().enumerate().skip(1) {
        r.stats.insert(format!("connected_n{n:02}"), c);
    }
    r.stats.insert("four_critical".into(), critical.len() as u64);
    for class in ["class_i", "class_ii", "class_iii"] {
        let graphs: Vec<Graph> = classified
            .iter()
            .filter(|c| c.class == class)
            .map(|c| c.graph.clone())
            .collect();
        r.set_class(class, &graphs);
    }
    for c in &classified {
        for (k, v) in &c.notes {
            r.annotate(&c.graph, k, v.clone());
        }
    }
    let ii = r.counts["class_ii"];
    r.findings.push(if ii == 0 {
        format!("class (ii) is empty for n <= {n_max}: no free-Hadwiger(4) 4-critical graph fails free-planarity")
    } else {
        format!("class (ii) is non-empty for n <= {n_max}: {ii} free-Hadwiger(4) 4-critical graphs fail free-planarity")
    });
    let others = classified
        .iter()
        .filter(|c| c.class != "class_iii" && c.notes.iter().any(|(k, v)| *k == "tag" && v == "other"))
        .count();
    r.findings.push(if others == 0 {
        format!("every free-Hadwiger(4) 4-critical graph with n <= {n_max} is an odd wheel or a split-spoke wheel")
    } else {
        format!("{others} free-Hadwiger(4) 4-critical graphs with n <= {n_max} are neither odd wheels nor split-spoke wheels")
    });
    r.wall_ms = elapsed_ms(start);
    Ok(r)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Truncates every set of 1..=`max_cut` corners of `Q_d`, keeps one graph per
/// isomorphism class and records χ and 5-criticality.
pub fn corner_cut_scan(d: usize, max_cut: usize, jobs: usize) -> Result<ScanReport> {
    if !(1..=4).contains(&d) {
        return Err(Error::InvalidParameter(format!("dimension {d} outside 1..=4")));
    }
    if !(1..=3).contains(&max_cut) || max_cut >= 1 << d {
        return Err(Error::InvalidParameter(format!(
            "cut size {max_cut} outside 1..=3 or not below 2^d"
        )));
    }
    let start = Instant::now();
    let q = hypercube(d)?;
    let mut unique: Vec<(Vec<usize>, Graph)> = Vec::new();
    let mut seen = HashSet::new();
    let mut subsets = 0u64;
    for size in 1..=max_cut {
        for s in combinations(1 << d, size) {
            subsets += 1;
            let t = truncate_corners(&q, &s)?;
            if seen.insert(canonical_form(&t)) {
                unique.push((s, t));
            }
        }
    }
    let verdicts: Vec<(usize, String)> = with_pool(jobs, || {
        unique
            .par_iter()
            .map(|(_, t)| {
                let rep = is_k_critical(t, 5).expect("k = 5 is valid");
                (rep.chi, rep.verdict.to_string())
            })
            .collect()
    });

    let mut r = ScanReport::new("corner_cut");
    r.param("d", d);
    r.param("max_cut", max_cut);
    r.stats.insert("subsets".into(), subsets);
    let all: Vec<Graph> = unique.iter().map(|(_, t)| t.clone()).collect();
    r.set_class("truncations", &all);
    let mut by_chi: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    let mut critical = Vec::new();
    let mut max_chi: BTreeMap<usize, usize> = BTreeMap::new();
    for ((s, t), (chi, verdict)) in unique.iter().zip(&verdicts) {
        by_chi.entry(*chi).or_default().push(t.clone());
        let slot = max_chi.entry(s.len()).or_default();
        *slot = (*slot).max(*chi);
        if verdict == "critical" {
            critical.push(t.clone());
        }
        let corners: Vec<String> = s.iter().map(ToString::to_string).collect();
        r.annotate(t, "corners", corners.join(","));
        r.annotate(t, "chi", chi.to_string());
        r.annotate(t, "five_critical", verdict.clone());
    }
    for (chi, graphs) in &by_chi {
        r.set_class(&format!("chi_{chi}"), graphs);
    }
    r.set_class("five_critical", &critical);
    r.findings
        .push(format!("any 5-critical found: {}", !critical.is_empty()));
    for (size, chi) in &max_chi {
        r.findings
            .push(format!("max chi over {size}-corner truncations: {chi}"));
    }
    r.findings.push(format!(
        "verified range: Q_{d} with 1..={max_cut} corners cut; other dimensions and cut sizes are unchecked"
    ));
    r.wall_ms = elapsed_ms(start);
    Ok(r)
}

/// Expands every stored `(i-2)`-candidate by two uncontractions and keeps the
/// graphs passing the full higher-wheel checklist, in canonical labelling.
pub fn identify_higher_wheels(i: usize, store: &CandidateStore, jobs: usize) -> Result<(Vec<Graph>, ScanReport)> {
    if ![5, 7, 9].contains(&i) {
        return Err(Error::InvalidParameter(format!(
            "identification runs for i in {{5, 7, 9}}, got {i}"
        )));
    }
    let lower = store.get(i - 2).ok_or(Error::CandidateUnavailable(i - 2))?;
    let start = Instant::now();

    let expand_all = |graphs: &[Graph]| -> Result<Vec<Graph>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in graphs {
            for e in expand_by_uncontraction(g)? {
                let c = canonical_graph(&e.graph);
                if seen.insert(c.clone()) {
                    out.push(c);
                }
            }
        }
        Ok(out)
    };
    let round1 = expand_all(lower)?;
    let round2 = expand_all(&round1)?;

    let checked: Vec<Option<(Graph, Vec<String>)>> = with_pool(jobs, || {
        round2
            .par_iter()
            .map(|h| {
                if h.min_degree() < 3 || !h.is_connected() || !is_critical_fast(h, 4) {
                    return Ok(None);
                }
                let rep = verify_higher_wheel(h, i, store)?;
                let all_pass = rep.items.iter().all(|c| c.status == CheckStatus::Pass);
                Ok(all_pass.then(|| {
                    let notes = rep.items.iter().map(|c| format!("{}: {}", c.key, c.detail)).collect();
                    (h.clone(), notes)
                }))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let critical = round2
        .iter()
        .filter(|h| h.min_degree() >= 3 && h.is_connected() && is_critical_fast(h, 4))
        .count();
    let mut found: Vec<(Graph, Vec<String>)> = checked.into_iter().flatten().collect();
    found.sort_by_key(|(g, _)| to_graph6(g));

    let mut r = ScanReport::new("identify_higher_wheels");
    r.param("i", i);
    r.param("predecessors", lower.iter().map(to_graph6).collect::<Vec<_>>());
    r.stats.insert("round1".into(), round1.len() as u64);
    r.stats.insert("round2".into(), round2.len() as u64);
    r.stats.insert("four_critical".into(), critical as u64);
    let graphs: Vec<Graph> = found.iter().map(|(g, _)| g.clone()).collect();
    r.set_class("candidates", &graphs);
    for (g, notes) in &found {
        r.annotate(g, "checklist", notes.join("; "));
    }
    r.findings.push(if graphs.is_empty() {
        format!(
            "no two-step expansion of the i = {} candidates passes the checklist for i = {i}",
            i - 2
        )
    } else {
        format!("{} candidates pass the checklist for i = {i}", graphs.len())
    });
    r.wall_ms = elapsed_ms(start);
    Ok((graphs, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::families::{truncated_cube_g3, wheel};
    use crate::graph6::parse_graph6;

    fn class(r: &ScanReport, name: &str) -> Vec<Graph> {
        r.classes[name].iter().map(|s| parse_graph6(s).unwrap()).collect()
    }

    #[test]
    fn three_critical_are_odd_cycles() {
        let r = find_k_critical(9, 3, 2).unwrap();
        let got = class(&r, "critical");
        assert_eq!(got.len(), 4);
        for g in got {
            assert!(g.n() % 2 == 1 && g.m() == g.n() && g.max_degree() == 2);
        }
    }

    #[test]
    fn four_critical_small() {
        let r = find_k_critical(4, 4, 1).unwrap();
        assert_eq!(
            class(&r, "critical"),
            vec![canonical_graph(&Graph::complete(4).unwrap())]
        );
        let r = find_k_critical(6, 4, 1).unwrap();
        let got = class(&r, "critical");
        assert!(got.iter().any(|g| is_isomorphic(g, &wheel(5).unwrap())));
    }

    #[test]
    fn question1_small_orders() {
        let r = question1_scan(4, 1).unwrap();
        assert_eq!(r.classes["class_i"], vec!["C~".to_string()]);
        assert_eq!(r.annotations["C~"]["tag"], "odd wheel W3");
        let r = question1_scan(7, 2).unwrap();
        assert!(r.counts_consistent());
        let g3 = to_graph6(&canonical_graph(&truncated_cube_g3()));
        assert!(r.classes["class_iii"].contains(&g3));
        assert_eq!(r.annotations[&g3]["violating_pattern"], "K5-");
        let w5 = to_graph6(&canonical_graph(&wheel(5).unwrap()));
        assert!(r.classes["class_i"].contains(&w5));
    }

    #[test]
    fn scans_are_deterministic() {
        let a = question1_scan(7, 1).unwrap();
        let b = question1_scan(7, 3).unwrap();
        assert_eq!(a.to_json_without_time(), b.to_json_without_time());
    }

    #[test]
    fn corner_cut_cube() {
        let r = corner_cut_scan(3, 1, 1).unwrap();
        let t = class(&r, "truncations");
        assert_eq!(t.len(), 1);
        assert!(is_isomorphic(&t[0], &truncated_cube_g3()));
        assert_eq!(r.counts["chi_4"], 1);
        assert!(corner_cut_scan(5, 1, 1).is_err());
        assert!(corner_cut_scan(3, 4, 1).is_err());
    }

    #[test]
    fn identification_needs_predecessor() {
        let store = CandidateStore::new();
        assert_eq!(
            identify_higher_wheels(7, &store, 1).unwrap_err(),
            Error::CandidateUnavailable(5)
        );
        assert!(identify_higher_wheels(4, &store, 1).is_err());
    }
}
