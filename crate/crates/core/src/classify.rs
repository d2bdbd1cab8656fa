//! Hadwiger classes, free-Hadwiger and free-planar membership, minor brackets.

use serde::Serialize;

use crate::color::chromatic_number;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minor::{has_minor, MinorModel};
use crate::pattern::{Pattern, PatternName};

/// Largest `k` with `K_k ≼ G`.
///
/// Probes upwards from the trivially present clique; `K_k ≼ G` implies
/// `K_{k-1} ≼ G`, so the first absent clique ends the probe.
pub fn hadwiger_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut k = if g.m() > 0 { 2 } else { 1 };
    while k < g.n() && (k + 1) * k / 2 <= g.m() {
        let clique = Graph::complete(k + 1).expect("k < n <= 64");
        if has_minor(g, &clique)
            .expect("complete patterns are connected")
            .is_none()
        {
            break;
        }
        k += 1;
    }
    k
}

/// Membership in the class of graphs without a `K_k` minor.
pub fn in_hadwiger_class(g: &Graph, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "Hadwiger class order {k} must be at least 2"
        )));
    }
    Ok(has_minor(g, &Graph::complete(k)?)?.is_none())
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub pattern: Pattern,
    pub model: MinorModel,
}

#[derive(Clone, Debug, Serialize)]
pub struct FreeVerdict {
    pub verdict: bool,
    pub violation: Option<Violation>,
}

fn first_violation(g: &Graph, patterns: &[Pattern]) -> Result<FreeVerdict> {
    for p in patterns {
        if let Some(model) = has_minor(g, &p.graph)? {
            return Ok(FreeVerdict {
                verdict: false,
                violation: Some(Violation {
                    pattern: p.clone(),
                    model,
                }),
            });
        }
    }
    Ok(FreeVerdict {
        verdict: true,
        violation: None,
    })
}

/// Forbidden minors of the free-Hadwiger class of order `k`, in reporting order:
/// `K_{k+1}^-` first, then every split `K_{k+1}^o(p,q)` with `p <= q`.
pub fn free_hadwiger_patterns(k: usize) -> Result<Vec<Pattern>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "free-Hadwiger order {k} must be at least 2"
        )));
    }
    let mut out = vec![Pattern::new(PatternName::KMinus(k + 1))?];
    for p in 1..=k / 2 {
        out.push(Pattern::new(PatternName::KSplit(k + 1, p, k - p))?);
    }
    Ok(out)
}

pub fn is_free_hadwiger(g: &Graph, k: usize) -> Result<FreeVerdict> {
    first_violation(g, &free_hadwiger_patterns(k)?)
}

/// True iff neither `G` nor any `G + uv` (uv a non-edge) has a `K_{k+1}` minor.
pub fn is_free_hadwiger_by_augmentation(g: &Graph, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "free-Hadwiger order {k} must be at least 2"
        )));
    }
    let clique = Graph::complete(k + 1)?;
    if has_minor(g, &clique)?.is_some() {
        return Ok(false);
    }
    for e in g.non_edges() {
        if has_minor(&g.with_edge(e.u, e.v)?, &clique)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn free_planar_patterns() -> Vec<Pattern> {
    vec![
        Pattern::named(PatternName::KMinus(5)),
        Pattern::named(PatternName::K33Minus),
    ]
}

pub fn is_free_planar(g: &Graph) -> FreeVerdict {
    first_violation(g, &free_planar_patterns()).expect("library patterns are connected")
}

fn has_kuratowski_minor(g: &Graph) -> bool {
    [PatternName::K(5), PatternName::K33]
        .into_iter()
        .any(|n| has_minor(g, &Pattern::named(n).graph).expect("connected").is_some())
}

/// True iff `G` and every `G + uv` have neither a `K5` nor a `K3,3` minor.
pub fn is_free_planar_by_augmentation(g: &Graph) -> bool {
    if has_kuratowski_minor(g) {
        return false;
    }
    g.non_edges()
        .iter()
        .all(|e| !has_kuratowski_minor(&g.with_edge(e.u, e.v).expect("non-edge endpoints in range")))
}

#[derive(Clone, Debug, Serialize)]
pub struct Bracket {
    pub lower: Pattern,
    pub upper: Pattern,
    /// Witness for `lower ≼ G`.
    pub lower_model: MinorModel,
}

impl Bracket {
    pub fn label(&self) -> String {
        format!("{},{}", self.lower, self.upper)
    }

    pub fn is(&self, lower: &PatternName, upper: &PatternName) -> bool {
        &self.lower.name == lower && &self.upper.name == upper
    }
}

/// `[W4, K5-, K5]`
pub fn clique_chain() -> Vec<Pattern> {
    [PatternName::W(4), PatternName::KMinus(5), PatternName::K(5)]
        .into_iter()
        .map(Pattern::named)
        .collect()
}

/// `[C6+, K33-, K33]`
pub fn bipartite_chain() -> Vec<Pattern> {
    [PatternName::C6Plus, PatternName::K33Minus, PatternName::K33]
        .into_iter()
        .map(Pattern::named)
        .collect()
}

/// Checks that each chain element is a minor of the next.
pub fn validate_chain(chain: &[Pattern]) -> Result<()> {
    if chain.is_empty() {
        return Err(Error::InvalidParameter("empty minor chain".into()));
    }
    for w in chain.windows(2) {
        if has_minor(&w[1].graph, &w[0].graph)?.is_none() {
            return Err(Error::ChainNotAscending {
                lower: w[0].to_string(),
                upper: w[1].to_string(),
            });
        }
    }
    Ok(())
}

/// The adjacent chain pair `(a, b)` with `a ≼ G` and `b ⋠ G`.
pub fn minor_bracket(g: &Graph, chain: &[Pattern]) -> Result<Bracket> {
    validate_chain(chain)?;
    let Some(mut lower_model) = has_minor(g, &chain[0].graph)? else {
        return Err(Error::BelowChain(chain[0].to_string()));
    };
    for i in 1..chain.len() {
        match has_minor(g, &chain[i].graph)? {
            Some(m) => lower_model = m,
            None => {
                return Ok(Bracket {
                    lower: chain[i - 1].clone(),
                    upper: chain[i].clone(),
                    lower_model,
                })
            }
        }
    }
    Err(Error::AboveChain(chain[chain.len() - 1].to_string()))
}

/// Bracket label, or `<bottom` / `>top` when the graph falls outside the chain.
pub fn bracket_label(g: &Graph, chain: &[Pattern]) -> Result<String> {
    match minor_bracket(g, chain) {
        Ok(b) => Ok(b.label()),
        Err(Error::BelowChain(p)) => Ok(format!("<{p}")),
        Err(Error::AboveChain(p)) => Ok(format!(">{p}")),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HadwigerCheck {
    pub holds: bool,
    pub chi: usize,
    pub hadwiger_number: usize,
}

/// One instance of Hadwiger's conjecture: χ(G) ≤ h(G).
pub fn check_hadwiger(g: &Graph) -> HadwigerCheck {
    let (chi, _) = chromatic_number(g);
    let h = hadwiger_number(g);
    HadwigerCheck {
        holds: chi <= h,
        chi,
        hadwiger_number: h,
    }
}

/// One chord length for the `C6+` pattern and whether it supports the wheel brackets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordCalibration {
    /// Cycle distance between the chord's endpoints (2 or 3).
    pub chord_length: usize,
    pub chain_ascending: bool,
    /// Odd wheels `W5`, `W7`, `W9` sit between the chord graph and `K33-`.
    pub wheels_bracketed: bool,
}

/// Tries each chord length of `C6` plus one chord as the bottom of the bipartite chain.
pub fn calibrate_c6_chord() -> Vec<ChordCalibration> {
    [2, 3]
        .into_iter()
        .map(|len| {
            let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
            edges.push((0, len));
            let c6 = Pattern::custom(&Graph::from_edges(6, &edges).expect("six vertices"));
            let chain = vec![
                c6,
                Pattern::named(PatternName::K33Minus),
                Pattern::named(PatternName::K33),
            ];
            let chain_ascending = validate_chain(&chain).is_ok();
            let wheels_bracketed = chain_ascending
                && [5, 7, 9].into_iter().all(|i| {
                    let w = crate::families::wheel(i).expect("i >= 3");
                    minor_bracket(&w, &chain).is_ok_and(|b| b.upper.name == PatternName::K33Minus)
                });
            ChordCalibration {
                chord_length: len,
                chain_ascending,
                wheels_bracketed,
            }
        })
        .collect()
}
