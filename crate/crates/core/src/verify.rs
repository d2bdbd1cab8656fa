//! Reproduction suite: ten numbered checks over wheels, the truncated cube,
//! the free-class characterisations, engine cross-checks and the scans.
//! Every input is built from the family constructors.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::canon::{canonical_form, canonical_graph};
use crate::classify::{
    bipartite_chain, check_hadwiger, clique_chain, is_free_hadwiger, is_free_hadwiger_by_augmentation, is_free_planar,
    is_free_planar_by_augmentation, minor_bracket,
};
use crate::color::{chromatic_number, is_k_critical};
use crate::error::Result;
use crate::families::{hypercube, truncate_corners, verify_higher_wheel, wheel, CandidateStore, CheckStatus};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::hunt::{corner_cut_scan, enumerate_connected, identify_higher_wheels, question1_scan, ScanReport};
use crate::minor::{has_minor, has_minor_bruteforce, MinorModel};
use crate::oracle::{chromatic_bruteforce, count_connected_labeled};
use crate::pattern::{library, Pattern, PatternName};

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u64,
    pub limit_ms: u64,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {} ({} ms, limit {} ms): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.limit_ms,
            self.detail
        )
    }
}

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub limit: Duration,
    run: fn(&mut Suite) -> Result<(bool, String)>,
}

/// State shared across checks: scan parallelism and every graph that
/// appeared in an earlier check, for the Hadwiger spot check.
pub struct Suite {
    pub jobs: usize,
    pub store: CandidateStore,
    seen: BTreeMap<String, Graph>,
    reports: Vec<ScanReport>,
}

impl Suite {
    pub fn new(jobs: usize) -> Suite {
        Suite {
            jobs,
            store: CandidateStore::new(),
            seen: BTreeMap::new(),
            reports: Vec::new(),
        }
    }

    fn note(&mut self, g: &Graph) {
        self.seen
            .entry(to_graph6(&canonical_graph(g)))
            .or_insert_with(|| g.clone());
    }

    fn note_report(&mut self, r: ScanReport) {
        for s in r.all_graph6() {
            let g = parse_graph6(s).expect("reports hold valid graph6");
            self.note(&g);
        }
        self.reports.push(r);
    }

    pub fn reports(&self) -> &[ScanReport] {
        &self.reports
    }

    pub fn run(&mut self, c: &Criterion) -> Outcome {
        let start = Instant::now();
        let result = (c.run)(self);
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
        if elapsed > c.limit {
            passed = false;
            detail.push_str("; time limit exceeded");
        }
        Outcome {
            id: c.id,
            name: c.name,
            passed,
            detail,
            elapsed_ms: elapsed.as_millis() as u64,
            limit_ms: c.limit.as_millis() as u64,
        }
    }

    pub fn run_all(&mut self) -> Vec<Outcome> {
        criteria().iter().map(|c| self.run(c)).collect()
    }
}

pub fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            name: "wheel criticality table",
            limit: secs(1),
            run: wheel_table,
        },
        Criterion {
            id: 2,
            name: "wheel brackets",
            limit: secs(5),
            run: wheel_brackets,
        },
        Criterion {
            id: 3,
            name: "truncated cube G3",
            limit: secs(5),
            run: truncated_cube,
        },
        Criterion {
            id: 4,
            name: "free-class characterisations n <= 7",
            limit: secs(600),
            run: free_class_cross_check,
        },
        Criterion {
            id: 5,
            name: "split-pattern subsumption",
            limit: secs(1),
            run: subsumption,
        },
        Criterion {
            id: 6,
            name: "corner-cut scan Q4, up to 3 corners",
            limit: secs(600),
            run: corner_cut,
        },
        Criterion {
            id: 7,
            name: "engine/oracle equivalence",
            limit: secs(600),
            run: engine_oracle,
        },
        Criterion {
            id: 8,
            name: "4-critical classification n <= 9",
            limit: secs(1800),
            run: question1,
        },
        Criterion {
            id: 9,
            name: "Hadwiger spot check",
            limit: secs(60),
            run: hadwiger_spot,
        },
        Criterion {
            id: 10,
            name: "higher-wheel identification i = 5",
            limit: secs(1800),
            run: identification,
        },
    ]
}

fn wheel_table(s: &mut Suite) -> Result<(bool, String)> {
    let mut wrong = Vec::new();
    for i in 3..=9 {
        let w = wheel(i)?;
        let r = is_k_critical(&w, 4)?;
        let expect = i % 2 == 1;
        if r.is_critical() != expect || (!expect && r.chi != 3) {
            wrong.push(format!("W{i}: {} chi={}", r.verdict, r.chi));
        }
        s.note(&w);
    }
    Ok(if wrong.is_empty() {
        (true, "W3,W5,W7,W9 4-critical; W4,W6,W8 have chi 3".into())
    } else {
        (false, wrong.join("; "))
    })
}

fn wheel_brackets(_: &mut Suite) -> Result<(bool, String)> {
    let mut wrong = Vec::new();
    for i in [5, 7, 9] {
        let w = wheel(i)?;
        let c = minor_bracket(&w, &clique_chain())?;
        let b = minor_bracket(&w, &bipartite_chain())?;
        if !c.is(&PatternName::W(4), &PatternName::KMinus(5)) || !b.is(&PatternName::C6Plus, &PatternName::K33Minus) {
            wrong.push(format!("W{i}: <{}> <{}>", c.label(), b.label()));
        }
    }
    Ok(if wrong.is_empty() {
        (true, "W5,W7,W9: <W4,K5-> and <C6+,K33->".into())
    } else {
        (false, wrong.join("; "))
    })
}

fn minor_of(g: &Graph, name: PatternName) -> Result<bool> {
    Ok(has_minor(g, &Pattern::new(name)?.graph)?.is_some())
}

fn truncated_cube(s: &mut Suite) -> Result<(bool, String)> {
    let g3 = truncate_corners(&hypercube(3)?, &[0])?;
    s.note(&g3);
    let checks = [
        ("4-critical", is_k_critical(&g3, 4)?.is_critical()),
        ("has K5-", minor_of(&g3, PatternName::KMinus(5))?),
        ("lacks K5", !minor_of(&g3, PatternName::K(5))?),
        ("has K33-", minor_of(&g3, PatternName::K33Minus)?),
        ("lacks K33", !minor_of(&g3, PatternName::K33)?),
        ("not free-planar", !is_free_planar(&g3).verdict),
        ("not free-Hadwiger(4)", !is_free_hadwiger(&g3, 4)?.verdict),
    ];
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    Ok(if failed.is_empty() {
        (true, format!("{} sub-checks hold", checks.len()))
    } else {
        (false, format!("reconstruction falsified by: {}", failed.join(", ")))
    })
}

fn free_class_cross_check(_: &mut Suite) -> Result<(bool, String)> {
    let mut total = 0;
    let mut disagree = Vec::new();
    for n in 1..=7 {
        for g in enumerate_connected(n)? {
            total += 1;
            let fh = is_free_hadwiger(&g, 4)?.verdict;
            let fp = is_free_planar(&g).verdict;
            if fh != is_free_hadwiger_by_augmentation(&g, 4)? || fp != is_free_planar_by_augmentation(&g) {
                disagree.push(to_graph6(&g));
            }
        }
    }
    Ok(if disagree.is_empty() {
        (true, format!("{total} connected graphs agree on both classes"))
    } else {
        (
            false,
            format!("{} disagreements, first {}", disagree.len(), disagree[0]),
        )
    })
}

fn subsumption(_: &mut Suite) -> Result<(bool, String)> {
    let a = has_minor(
        &Pattern::new(PatternName::KSplit(5, 1, 3))?.graph,
        &Pattern::new(PatternName::KMinus(5))?.graph,
    )?;
    let b = has_minor(
        &Pattern::new(PatternName::KSplit(5, 2, 2))?.graph,
        &Pattern::new(PatternName::K33Minus)?.graph,
    )?;
    Ok((
        a.is_some() && b.is_some(),
        format!("K5- in K5o(1,3): {}; K33- in K5o(2,2): {}", a.is_some(), b.is_some()),
    ))
}

fn corner_cut(s: &mut Suite) -> Result<(bool, String)> {
    let r = corner_cut_scan(4, 3, s.jobs)?;
    let critical = r.counts["five_critical"];
    let mut two_corner_max = 0;
    for (g6, notes) in &r.annotations {
        if notes["corners"].split(',').count() == 2 {
            let chi: usize = notes["chi"].parse().expect("chi annotation");
            two_corner_max = two_corner_max.max(chi);
            // re-check with a fresh colouring
            let (fresh, _) = chromatic_number(&parse_graph6(g6)?);
            if fresh != chi {
                return Ok((false, format!("{g6}: stored chi {chi}, recomputed {fresh}")));
            }
        }
    }
    let n = r.counts["truncations"];
    let ok = critical == 0 && two_corner_max <= 4 && r.counts_consistent();
    s.note_report(r);
    Ok((
        ok,
        format!("{n} classes, {critical} 5-critical, max chi of 2-corner cuts {two_corner_max}"),
    ))
}

fn engine_oracle(_: &mut Suite) -> Result<(bool, String)> {
    let patterns = library(6);
    let mut minor_pairs = 0;
    for n in 1..=6 {
        for g in enumerate_connected(n)? {
            for p in &patterns {
                minor_pairs += 1;
                if has_minor(&g, &p.graph)?.is_some() != has_minor_bruteforce(&g, &p.graph)? {
                    return Ok((false, format!("minor disagreement: {p} in {}", to_graph6(&g))));
                }
            }
        }
    }
    let mut colour_checks = 0;
    for n in 1..=7 {
        for g in enumerate_connected(n)? {
            colour_checks += 1;
            let (chi, _) = chromatic_number(&g);
            let brute = chromatic_bruteforce(&g, 4)?;
            if brute != (chi <= 4).then_some(chi) {
                return Ok((false, format!("chi disagreement on {}", to_graph6(&g))));
            }
        }
    }
    let mut counts = Vec::new();
    for n in 4..=7 {
        let ours = enumerate_connected(n)?.len();
        let oracle = count_connected_labeled(n)?;
        if ours != oracle {
            return Ok((false, format!("n={n}: enumerated {ours}, oracle {oracle}")));
        }
        counts.push(ours.to_string());
    }
    Ok((
        true,
        format!(
            "{minor_pairs} minor pairs, {colour_checks} colourings, counts {} at n=4..7",
            counts.join(",")
        ),
    ))
}

fn witness_validates(g6: &str, notes: &BTreeMap<String, String>) -> bool {
    let (Some(p), Some(w)) = (notes.get("violating_pattern"), notes.get("witness")) else {
        return false;
    };
    let Ok(branch_sets) = serde_json::from_str::<Vec<Vec<usize>>>(w) else {
        return false;
    };
    let (Ok(host), Ok(pattern)) = (parse_graph6(g6), Pattern::parse(p)) else {
        return false;
    };
    MinorModel { branch_sets }.validate(&host, &pattern.graph).is_ok()
}

fn question1(s: &mut Suite) -> Result<(bool, String)> {
    let r = question1_scan(9, s.jobs)?;
    let mut problems = Vec::new();
    for i in [3, 5, 7] {
        let w = to_graph6(&canonical_graph(&wheel(i)?));
        let tagged = r
            .annotations
            .get(&w)
            .and_then(|a| a.get("tag"))
            .cloned()
            .unwrap_or_default();
        if !r.classes["class_i"].contains(&w) || tagged != format!("odd wheel W{i}") {
            problems.push(format!("W{i} not in class (i) as a wheel"));
        }
    }
    for g6 in &r.classes["class_iii"] {
        if !witness_validates(g6, &r.annotations[g6]) {
            problems.push(format!("{g6}: witness missing or invalid"));
        }
    }
    for (class, graphs) in &r.classes {
        for g6 in graphs {
            let g = parse_graph6(g6)?;
            let fh = is_free_hadwiger(&g, 4)?.verdict;
            let fp = is_free_planar(&g).verdict;
            let expected = match (fh, fp) {
                (true, true) => "class_i",
                (true, false) => "class_ii",
                (false, _) => "class_iii",
            };
            if !is_k_critical(&g, 4)?.is_critical() || expected != class {
                problems.push(format!("{g6} misfiled in {class}"));
            }
        }
    }
    let stated = r.findings.iter().any(|f| f.starts_with("class (ii) is"));
    if !stated || !r.counts_consistent() {
        problems.push("class (ii) status not stated or counts inconsistent".into());
    }
    let detail = format!(
        "classes (i)/(ii)/(iii) = {}/{}/{}; {}",
        r.counts["class_i"],
        r.counts["class_ii"],
        r.counts["class_iii"],
        r.findings.join("; ")
    );
    s.note_report(r);
    Ok(if problems.is_empty() {
        (true, detail)
    } else {
        (false, problems.join("; "))
    })
}

fn hadwiger_spot(s: &mut Suite) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    for (g6, g) in &s.seen {
        let h = check_hadwiger(g);
        if !h.holds {
            failures.push(format!("{g6}: chi {} > h {}", h.chi, h.hadwiger_number));
        }
    }
    Ok(if failures.is_empty() {
        (true, format!("chi <= h for all {} graphs seen so far", s.seen.len()))
    } else {
        (false, failures.join("; "))
    })
}

fn identification(s: &mut Suite) -> Result<(bool, String)> {
    let (found, r) = identify_higher_wheels(5, &s.store, s.jobs)?;
    let g3 = &s.store.get(3).expect("built in")[0];
    let k5 = Graph::complete(5)?;
    for g in &found {
        let rep = verify_higher_wheel(g, 5, &s.store)?;
        if rep.items.iter().any(|c| c.status != CheckStatus::Pass) {
            return Ok((false, format!("{} fails checks {}", to_graph6(g), rep.failed_keys())));
        }
        if g.n() != g3.n() + 2 || has_minor(g, &k5)?.is_some() {
            return Ok((false, format!("{} has wrong order or a K5 minor", to_graph6(g))));
        }
    }
    let distinct = found
        .iter()
        .map(canonical_form)
        .collect::<std::collections::HashSet<_>>()
        .len();
    let says_none = r.findings.iter().any(|f| f.starts_with("no two-step expansion"));
    let ok = distinct == found.len() && (!found.is_empty() || says_none);
    let detail = format!("{} candidates; {}", found.len(), r.findings.join("; "));
    if !found.is_empty() {
        s.store.insert(5, found);
    }
    s.note_report(r);
    Ok((ok, detail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_criteria_pass() {
        let mut suite = Suite::new(1);
        for c in criteria().iter().filter(|c| [1, 2, 3, 5].contains(&c.id)) {
            let o = suite.run(c);
            assert!(o.passed, "{o}");
        }
        assert!(suite.seen.len() >= 8);
    }
}
