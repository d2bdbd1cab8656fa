//! Wheels, hypercubes, corner truncations, split-spoke wheels and first-order
//! higher-wheel candidates.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::canon::{canonical_form, CanonicalForm};
use crate::classify::{bipartite_chain, clique_chain, is_free_hadwiger, is_free_planar, minor_bracket};
use crate::color::is_k_critical;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Edge, Graph};
use crate::graph6::{parse_graph6, to_graph6};
use crate::minor::has_minor;
use crate::pattern::PatternName;

/// Rim `C_i` on `0..i`, hub `i`.
pub fn wheel(i: usize) -> Result<Graph> {
    if i < 3 {
        return Err(Error::InvalidParameter(format!(
            "wheel rim length {i} must be at least 3"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (0..i).map(|r| (r, (r + 1) % i)).collect();
    edges.extend((0..i).map(|r| (r, i)));
    Graph::from_edges(i + 1, &edges)
}

/// `Q_d` with vertices labelled by their coordinate bit strings.
pub fn hypercube(d: usize) -> Result<Graph> {
    if !(1..=6).contains(&d) {
        return Err(Error::InvalidParameter(format!(
            "hypercube dimension {d} outside 1..=6"
        )));
    }
    let n = 1usize << d;
    let rows = (0..n)
        .map(|v| (0..d).fold(0u64, |acc, b| acc | bit(v ^ (1 << b))))
        .collect();
    Ok(Graph::from_rows_unchecked(rows))
}

/// Deletes every corner in `corners` and turns the surviving neighbourhood of
/// each deleted corner into a clique. Survivors keep their relative order.
pub fn truncate_corners(g: &Graph, corners: &[usize]) -> Result<Graph> {
    if corners.is_empty() {
        return Err(Error::InvalidParameter("no corners to truncate".into()));
    }
    let mut cut = 0u64;
    for &c in corners {
        if c >= g.n() {
            return Err(Error::VertexOutOfRange { v: c, n: g.n() });
        }
        cut |= bit(c);
    }
    let mut rows = g.rows().to_vec();
    for c in bits(cut) {
        let survivors = g.neighbors(c) & !cut;
        for v in bits(survivors) {
            rows[v] |= survivors & !bit(v);
        }
    }
    let widened = Graph::from_rows_unchecked(rows);
    Ok(widened.induced(g.vertex_mask() & !cut))
}

/// Readings of "splitting a spoke" of a wheel. All act on the spoke from the
/// hub to rim vertex 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitInterpretation {
    /// Subdivide the spoke with a new vertex.
    SubdivideSpoke,
    /// Split the hub; the new half carries only the spoke.
    SplitHubEnd,
    /// Split rim vertex 0; the new half carries only the spoke.
    SplitRimEnd,
    /// Hajós join with `K4` along the spoke: the spoke is replaced by two
    /// triangles sharing an edge, hanging off the rim end, joined to the hub.
    HajosSpoke,
}

impl SplitInterpretation {
    pub const ALL: [SplitInterpretation; 4] = [
        SplitInterpretation::SubdivideSpoke,
        SplitInterpretation::SplitHubEnd,
        SplitInterpretation::SplitRimEnd,
        SplitInterpretation::HajosSpoke,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SplitInterpretation::SubdivideSpoke => "subdivide_spoke",
            SplitInterpretation::SplitHubEnd => "split_hub_end",
            SplitInterpretation::SplitRimEnd => "split_rim_end",
            SplitInterpretation::HajosSpoke => "hajos_spoke",
        }
    }

    /// Vertices added to the wheel.
    pub fn extra_vertices(self) -> usize {
        match self {
            SplitInterpretation::HajosSpoke => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for SplitInterpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SplitInterpretation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SplitInterpretation::ALL
            .into_iter()
            .find(|i| i.as_str() == s.replace('-', "_"))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown split interpretation {s:?}")))
    }
}

pub fn split_spoke_wheel(i: usize, interpretation: SplitInterpretation) -> Result<Graph> {
    if i < 3 || i % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "split-spoke wheels need an odd rim, got {i}"
        )));
    }
    let w = wheel(i)?;
    let hub = i;
    let spoke = Edge::new(0, hub);
    match interpretation {
        SplitInterpretation::SubdivideSpoke => w.subdivide_edge(spoke),
        SplitInterpretation::SplitHubEnd => {
            let rest: Vec<usize> = (1..i).collect();
            w.split_vertex(hub, &rest, &[0])
        }
        SplitInterpretation::SplitRimEnd => w.split_vertex(0, &[1, i - 1], &[hub]),
        SplitInterpretation::HajosSpoke => {
            // K4 on {0, b, c, d} minus edge 0-b, plus b-hub
            let (b, c, d) = (i + 1, i + 2, i + 3);
            let mut g = w.delete_edge(spoke)?.disjoint_union(&Graph::empty(3)?)?;
            for (x, y) in [(0, c), (0, d), (c, d), (b, c), (b, d), (b, hub)] {
                g.insert_edge(x, y)?;
            }
            Ok(g)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Calibration {
    pub interpretation: SplitInterpretation,
    pub n: usize,
    pub m: usize,
    pub chi: usize,
    pub four_critical: bool,
    pub verdict: String,
}

/// Runs the 4-criticality test on every split interpretation of `W_i`.
pub fn calibrate_split_interpretation(i: usize) -> Result<Vec<Calibration>> {
    SplitInterpretation::ALL
        .into_iter()
        .map(|interp| {
            let g = split_spoke_wheel(i, interp)?;
            let r = is_k_critical(&g, 4)?;
            Ok(Calibration {
                interpretation: interp,
                n: g.n(),
                m: g.m(),
                chi: r.chi,
                four_critical: r.is_critical(),
                verdict: r.verdict.to_string(),
            })
        })
        .collect()
}

/// The smallest first-order higher wheel: `Q3` with one corner cut off.
pub fn truncated_cube_g3() -> Graph {
    truncate_corners(&hypercube(3).expect("d = 3 in range"), &[0]).expect("corner 0 exists")
}

/// Every named family, for the CLI and reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Wheel(usize),
    SplitSpokeWheel(usize, SplitInterpretation),
    Hypercube(usize),
    TruncatedCube {
        d: usize,
        corners: Vec<usize>,
    },
    /// Order `i`, with an optional graph replacing the stored candidate.
    HigherWheelCandidate(usize, Option<Graph>),
}

impl FamilySpec {
    pub fn build(&self, store: &CandidateStore) -> Result<Graph> {
        match self {
            FamilySpec::Wheel(i) => wheel(*i),
            FamilySpec::SplitSpokeWheel(i, interp) => split_spoke_wheel(*i, *interp),
            FamilySpec::Hypercube(d) => hypercube(*d),
            FamilySpec::TruncatedCube { d, corners } => truncate_corners(&hypercube(*d)?, corners),
            FamilySpec::HigherWheelCandidate(i, g) => higher_wheel_candidate(*i, store, g.as_ref()),
        }
    }
}

/// Items checked by [`verify_higher_wheel`]; hashed into candidate store headers.
pub const CHECKLIST: &str = "a:4-critical;b:W_i minor;c:clique bracket K5-,K5;\
d:bipartite bracket K33-,K33;e:not free-planar;f:not free-Hadwiger(4);\
g:two contractions reach the i-2 candidate (i=3: K4 minor)";

pub fn checklist_hash() -> String {
    hex::encode(&Sha256::digest(CHECKLIST.as_bytes())[..8])
}

/// Verified higher-wheel candidates indexed by wheel order `i`. `G3` is built in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateStore {
    candidates: BTreeMap<usize, Vec<Graph>>,
}

impl Default for CandidateStore {
    fn default() -> Self {
        let mut candidates = BTreeMap::new();
        candidates.insert(3, vec![truncated_cube_g3()]);
        CandidateStore { candidates }
    }
}

impl CandidateStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: usize) -> Option<&[Graph]> {
        self.candidates.get(&i).map(Vec::as_slice).filter(|c| !c.is_empty())
    }

    pub fn insert(&mut self, i: usize, graphs: Vec<Graph>) {
        self.candidates.insert(i, graphs);
    }

    pub fn orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.candidates.keys().copied()
    }

    /// Newline-delimited graph6 with a `# i=<i> checklist=<hash>` header per order.
    pub fn to_text(&self) -> String {
        let mut s = String::from("# higher-wheel candidate store\n");
        let hash = checklist_hash();
        for (i, graphs) in &self.candidates {
            s.push_str(&format!("# i={i} checklist={hash}\n"));
            for g in graphs {
                s.push_str(&to_graph6(g));
                s.push('\n');
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<CandidateStore> {
        let mut store = CandidateStore::default();
        let mut current: Option<usize> = None;
        let expected = checklist_hash();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                let fields: BTreeMap<&str, &str> =
                    comment.split_whitespace().filter_map(|f| f.split_once('=')).collect();
                if let Some(i) = fields.get("i") {
                    let i: usize = i
                        .parse()
                        .map_err(|_| Error::Store(format!("line {}: bad order {i:?}", lineno + 1)))?;
                    if fields.get("checklist") != Some(&expected.as_str()) {
                        return Err(Error::Store(format!(
                            "line {}: checklist hash differs from {expected}; re-run the identification scan",
                            lineno + 1
                        )));
                    }
                    store.candidates.insert(i, Vec::new());
                    current = Some(i);
                }
                continue;
            }
            let i = current.ok_or_else(|| Error::Store(format!("line {}: graph before any header", lineno + 1)))?;
            let g = parse_graph6(line)?;
            store.candidates.get_mut(&i).expect("header inserted the order").push(g);
        }
        if store.get(3).is_none() {
            store.candidates.insert(3, vec![truncated_cube_g3()]);
        }
        Ok(store)
    }
}

/// The higher-wheel candidate of order `i`.
///
/// `i = 3` is always the truncated cube. Larger orders come from `override_graph`
/// or the store; either way the graph must pass [`verify_higher_wheel`].
pub fn higher_wheel_candidate(i: usize, store: &CandidateStore, override_graph: Option<&Graph>) -> Result<Graph> {
    if i < 3 || i % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "higher wheels have odd order >= 3, got {i}"
        )));
    }
    let g = match override_graph {
        Some(g) => g.clone(),
        None if i == 3 => return Ok(truncated_cube_g3()),
        None => store.get(i).ok_or(Error::CandidateUnavailable(i))?[0].clone(),
    };
    let report = verify_higher_wheel(&g, i, store)?;
    if !report.passed() {
        return Err(Error::InvalidParameter(format!(
            "candidate for i = {i} fails checks {}",
            report.failed_keys()
        )));
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub key: char,
    pub description: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct HigherWheelReport {
    pub i: usize,
    pub items: Vec<CheckItem>,
}

impl HigherWheelReport {
    pub fn item(&self, key: char) -> &CheckItem {
        self.items.iter().find(|c| c.key == key).expect("checklist keys a..g")
    }

    /// All evaluated items pass.
    pub fn passed(&self) -> bool {
        self.items.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failed_keys(&self) -> String {
        self.items
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.key)
            .collect()
    }
}

fn item(key: char, description: &'static str, ok: bool, detail: String) -> CheckItem {
    CheckItem {
        key,
        description,
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        detail,
    }
}

/// Whether some two successive edge contractions of `g` give a graph whose canonical form is in `targets`.
pub fn double_contraction_hits(g: &Graph, targets: &HashSet<CanonicalForm>) -> Option<(Edge, Edge)> {
    let mut seen = HashSet::new();
    for e1 in g.edges() {
        let g1 = g.contract_edge(e1).expect("edge of g");
        if !seen.insert(canonical_form(&g1)) {
            continue;
        }
        for e2 in g1.edges() {
            let g2 = g1.contract_edge(e2).expect("edge of g1");
            if targets.contains(&canonical_form(&g2)) {
                return Some((e1, e2));
            }
        }
    }
    None
}

fn bracket_item(
    g: &Graph,
    key: char,
    description: &'static str,
    chain: &[crate::pattern::Pattern],
    lower: PatternName,
    upper: PatternName,
) -> Result<CheckItem> {
    Ok(match minor_bracket(g, chain) {
        Ok(b) => item(key, description, b.is(&lower, &upper), b.label()),
        Err(e @ (Error::BelowChain(_) | Error::AboveChain(_))) => item(key, description, false, e.to_string()),
        Err(e) => return Err(e),
    })
}

/// Evaluates checklist items (a) through (g) for a higher-wheel candidate of order `i`.
pub fn verify_higher_wheel(g: &Graph, i: usize, store: &CandidateStore) -> Result<HigherWheelReport> {
    let mut items = Vec::with_capacity(7);
    let crit = is_k_critical(g, 4)?;
    items.push(item('a', "4-critical", crit.is_critical(), crit.verdict.to_string()));

    let w = wheel(i)?;
    let wm = w.n() <= g.n() && has_minor(g, &w)?.is_some();
    items.push(item('b', "wheel W_i is a minor", wm, format!("W{i}")));

    items.push(bracket_item(
        g,
        'c',
        "clique bracket is K5-,K5",
        &clique_chain(),
        PatternName::KMinus(5),
        PatternName::K(5),
    )?);
    items.push(bracket_item(
        g,
        'd',
        "bipartite bracket is K33-,K33",
        &bipartite_chain(),
        PatternName::K33Minus,
        PatternName::K33,
    )?);

    let fp = is_free_planar(g);
    items.push(item(
        'e',
        "not free-planar",
        !fp.verdict,
        fp.violation
            .map_or("free-planar".into(), |v| format!("contains {}", v.pattern)),
    ));
    let fh = is_free_hadwiger(g, 4)?;
    items.push(item(
        'f',
        "not free-Hadwiger(4)",
        !fh.verdict,
        fh.violation
            .map_or("free-Hadwiger".into(), |v| format!("contains {}", v.pattern)),
    ));

    let description = "two contractions reach the i-2 candidate";
    if i == 3 {
        let k4 = has_minor(g, &Graph::complete(4)?)?.is_some();
        items.push(item(
            'g',
            "K4 reachable by contractions",
            k4,
            "K4 minor (reachability only)".into(),
        ));
    } else if let Some(lower) = store.get(i - 2) {
        let targets: HashSet<CanonicalForm> = lower.iter().map(canonical_form).collect();
        let hit = (g.n() == lower[0].n() + 2)
            .then(|| double_contraction_hits(g, &targets))
            .flatten();
        items.push(item(
            'g',
            description,
            hit.is_some(),
            hit.map_or("no edge pair found".into(), |(a, b)| format!("contract {a} then {b}")),
        ));
    } else {
        items.push(CheckItem {
            key: 'g',
            description,
            status: CheckStatus::Skipped,
            detail: format!("no stored candidate for i = {}", i - 2),
        });
    }
    Ok(HigherWheelReport { i, items })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::classify::is_free_hadwiger;
    use crate::color::chromatic_number;

    #[test]
    fn wheel_arithmetic() {
        assert_eq!(wheel(3).unwrap(), Graph::complete(4).unwrap());
        for i in 3..12 {
            let w = wheel(i).unwrap();
            assert_eq!((w.n(), w.m()), (i + 1, 2 * i));
            let chi = chromatic_number(&w).0;
            assert_eq!(chi, if i % 2 == 1 { 4 } else { 3 }, "W{i}");
        }
        assert!(wheel(2).is_err());
    }

    #[test]
    fn hypercube_arithmetic() {
        for d in 1..=6 {
            let q = hypercube(d).unwrap();
            assert_eq!((q.n(), q.m()), (1 << d, d << (d - 1)));
            assert!(q.is_bipartite());
            assert_eq!(chromatic_number(&q).0, 2);
        }
        assert!(hypercube(0).is_err());
        assert!(hypercube(7).is_err());
    }

    #[test]
    fn truncation_examples() {
        let g3 = truncated_cube_g3();
        assert_eq!((g3.n(), g3.m()), (7, 12));
        assert_eq!(chromatic_number(&g3).0, 4);
        let t = truncate_corners(&hypercube(4).unwrap(), &[5]).unwrap();
        assert_eq!((t.n(), t.m()), (15, 34));
        let anti = truncate_corners(&hypercube(3).unwrap(), &[0, 7]).unwrap();
        assert_eq!(anti.n(), 6);
        // 12 - 6 cube edges + 2 disjoint triangles
        assert_eq!(anti.m(), 12);
        assert_eq!(chromatic_number(&anti).0, 3);
        assert!(truncate_corners(&hypercube(3).unwrap(), &[]).is_err());
        assert!(truncate_corners(&hypercube(3).unwrap(), &[8]).is_err());
    }

    #[test]
    fn adjacent_corners_skip_cut_neighbours() {
        // corners 0 and 1 are adjacent in Q3: each clique uses only survivors
        let t = truncate_corners(&hypercube(3).unwrap(), &[0, 1]).unwrap();
        assert_eq!(t.n(), 6);
        // survivors of 0: {2,4}; of 1: {3,5}; cube edges among 2..7: 12 - 5 = 7
        assert_eq!(t.m(), 7 + 1 + 1 - 0);
    }

    #[test]
    fn single_corner_truncations_are_isomorphic() {
        for d in 2..=4 {
            let q = hypercube(d).unwrap();
            let first = canonical_form(&truncate_corners(&q, &[0]).unwrap());
            for v in 1..(1 << d) {
                assert_eq!(
                    canonical_form(&truncate_corners(&q, &[v]).unwrap()),
                    first,
                    "d={d} v={v}"
                );
            }
        }
    }

    #[test]
    fn split_spoke_arithmetic() {
        let g = split_spoke_wheel(5, SplitInterpretation::SubdivideSpoke).unwrap();
        assert_eq!((g.n(), g.m()), (7, 11));
        let g = split_spoke_wheel(5, SplitInterpretation::SplitHubEnd).unwrap();
        assert_eq!((g.n(), g.m()), (7, 10));
        assert_eq!(g.neighbors(6), bit(0));
        let g = split_spoke_wheel(5, SplitInterpretation::SplitRimEnd).unwrap();
        assert_eq!((g.n(), g.m()), (7, 10));
        let g = split_spoke_wheel(5, SplitInterpretation::HajosSpoke).unwrap();
        assert_eq!((g.n(), g.m()), (9, 15));
        assert!(split_spoke_wheel(4, SplitInterpretation::SubdivideSpoke).is_err());
    }

    #[test]
    fn hajos_on_w3_is_the_moser_spindle() {
        // two rhombi (pairs of triangles) sharing apex 0, tips joined
        let moser = Graph::from_edges(
            7,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4),
                (0, 5),
                (4, 5),
                (4, 6),
                (5, 6),
                (3, 6),
            ],
        )
        .unwrap();
        let h = split_spoke_wheel(3, SplitInterpretation::HajosSpoke).unwrap();
        assert!(is_isomorphic(&h, &moser));
    }

    #[test]
    fn calibration_outcome() {
        let cal = calibrate_split_interpretation(5).unwrap();
        let passing: Vec<_> = cal
            .iter()
            .filter(|c| c.four_critical)
            .map(|c| c.interpretation)
            .collect();
        // the three single-vertex readings create a vertex of degree <= 2
        assert_eq!(passing, vec![SplitInterpretation::HajosSpoke]);
    }

    #[test]
    fn odd_wheels_are_free() {
        for i in [5, 7, 9] {
            let w = wheel(i).unwrap();
            assert!(is_k_critical(&w, 4).unwrap().is_critical());
            assert!(is_free_planar(&w).verdict);
            assert!(is_free_hadwiger(&w, 4).unwrap().verdict);
        }
    }

    #[test]
    fn g3_checklist() {
        let store = CandidateStore::new();
        let r = verify_higher_wheel(&truncated_cube_g3(), 3, &store).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.items.iter().all(|c| c.status == CheckStatus::Pass));
        assert!(is_isomorphic(
            &higher_wheel_candidate(3, &store, None).unwrap(),
            &truncated_cube_g3()
        ));
    }

    #[test]
    fn wheel_fails_clique_bracket() {
        let store = CandidateStore::new();
        let r = verify_higher_wheel(&wheel(5).unwrap(), 5, &store).unwrap();
        assert_eq!(r.item('c').status, CheckStatus::Fail);
        assert_eq!(r.item('c').detail, "W4,K5-");
        let r = verify_higher_wheel(&Graph::complete(4).unwrap(), 3, &store).unwrap();
        assert_eq!(r.item('c').status, CheckStatus::Fail);
    }

    #[test]
    fn missing_candidate() {
        let store = CandidateStore::new();
        assert_eq!(
            higher_wheel_candidate(5, &store, None),
            Err(Error::CandidateUnavailable(5))
        );
        assert!(higher_wheel_candidate(4, &store, None).is_err());
        assert!(higher_wheel_candidate(5, &store, Some(&wheel(5).unwrap())).is_err());
    }

    #[test]
    fn store_text_round_trip() {
        let mut store = CandidateStore::new();
        store.insert(5, vec![wheel(8).unwrap()]);
        let text = store.to_text();
        assert!(text.contains(&format!("# i=5 checklist={}", checklist_hash())));
        assert_eq!(CandidateStore::parse(&text).unwrap(), store);
        assert!(CandidateStore::parse("# i=5 checklist=deadbeef\n").is_err());
        assert!(CandidateStore::parse("C~\n").is_err());
    }

    #[test]
    fn family_specs_build() {
        let store = CandidateStore::new();
        let g = FamilySpec::TruncatedCube { d: 3, corners: vec![0] }
            .build(&store)
            .unwrap();
        assert!(is_isomorphic(&g, &truncated_cube_g3()));
        assert_eq!(FamilySpec::Hypercube(2).build(&store).unwrap().m(), 4);
        assert!(FamilySpec::HigherWheelCandidate(7, None).build(&store).is_err());
        let g3 = FamilySpec::HigherWheelCandidate(3, Some(truncated_cube_g3()))
            .build(&store)
            .unwrap();
        assert_eq!(g3, truncated_cube_g3());
        assert!(FamilySpec::HigherWheelCandidate(3, Some(wheel(3).unwrap()))
            .build(&store)
            .is_err());
    }
}
