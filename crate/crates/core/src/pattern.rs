//! Named minor patterns: complete graphs, near-complete graphs, split-vertex
//! cliques, K3,3 and relatives, wheels and C6+.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::wheel;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PatternName {
    /// Complete graph `K_k`.
    K(usize),
    /// `K_k` minus one edge.
    KMinus(usize),
    /// `K_k` with one vertex split into two non-adjacent vertices with `p` and `q` neighbours.
    KSplit(usize, usize, usize),
    K33,
    K33Minus,
    /// Wheel with an `i`-cycle rim.
    W(usize),
    /// C6 plus one antipodal chord.
    C6Plus,
    Custom(String),
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternName::K(k) => write!(f, "K{k}"),
            PatternName::KMinus(k) => write!(f, "K{k}-"),
            PatternName::KSplit(k, p, q) => write!(f, "K{k}o({p},{q})"),
            PatternName::K33 => write!(f, "K33"),
            PatternName::K33Minus => write!(f, "K33-"),
            PatternName::W(i) => write!(f, "W{i}"),
            PatternName::C6Plus => write!(f, "C6+"),
            PatternName::Custom(g6) => write!(f, "{g6}"),
        }
    }
}

impl FromStr for PatternName {
    type Err = Error;

    /// Accepts `K5`, `K5-`, `K5o(1,3)` (also `K5o1,3`), `K33`, `K33-`, `W4`,
    /// `C6+`; anything else is read as graph6.
    fn from_str(s: &str) -> Result<PatternName> {
        let bad = || Error::UnsupportedPattern(s.to_string());
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        match s {
            "K33" | "K3,3" => return Ok(PatternName::K33),
            "K33-" | "K3,3-" => return Ok(PatternName::K33Minus),
            "C6+" => return Ok(PatternName::C6Plus),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix('W') {
            if let Ok(i) = rest.parse() {
                return Ok(PatternName::W(i));
            }
        }
        if let Some(rest) = s.strip_prefix('K') {
            if let Some(k) = rest.strip_suffix('-') {
                if let Ok(k) = k.parse() {
                    return Ok(PatternName::KMinus(k));
                }
            } else if let Some((k, split)) = rest.split_once('o') {
                let split = split.trim_start_matches('(').trim_end_matches(')');
                let (p, q) = split.split_once(',').ok_or_else(bad)?;
                return Ok(PatternName::KSplit(num(k)?, num(p)?, num(q)?));
            } else if let Ok(k) = rest.parse() {
                return Ok(PatternName::K(k));
            }
        }
        parse_graph6(s)?;
        Ok(PatternName::Custom(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub name: PatternName,
    pub graph: Graph,
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name.to_string())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.name.fmt(f)
    }
}

fn k33_edges() -> Vec<(usize, usize)> {
    (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect()
}

impl Pattern {
    pub fn new(name: PatternName) -> Result<Pattern> {
        let invalid = |why: &str| Error::InvalidParameter(format!("{name}: {why}"));
        let graph = match &name {
            PatternName::K(k) => {
                if *k == 0 {
                    return Err(invalid("k must be positive"));
                }
                Graph::complete(*k)?
            }
            PatternName::KMinus(k) => {
                if *k < 2 {
                    return Err(invalid("k must be at least 2"));
                }
                Graph::complete(*k)?.delete_edge(crate::graph::Edge::new(0, 1))?
            }
            PatternName::KSplit(k, p, q) => {
                if *p < 1 || *q < 1 || p + q + 1 != *k {
                    return Err(invalid("need p, q >= 1 and p + q = k - 1"));
                }
                let part1: Vec<usize> = (0..*p).collect();
                let part2: Vec<usize> = (*p..k - 1).collect();
                Graph::complete(*k)?.split_vertex(k - 1, &part1, &part2)?
            }
            PatternName::K33 => Graph::from_edges(6, &k33_edges())?,
            PatternName::K33Minus => {
                let edges: Vec<_> = k33_edges().into_iter().filter(|&e| e != (0, 3)).collect();
                Graph::from_edges(6, &edges)?
            }
            PatternName::W(i) => wheel(*i)?,
            PatternName::C6Plus => {
                let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
                edges.push((0, 3));
                Graph::from_edges(6, &edges)?
            }
            PatternName::Custom(g6) => parse_graph6(g6)?,
        };
        Ok(Pattern { name, graph })
    }

    pub fn custom(g: &Graph) -> Pattern {
        Pattern {
            name: PatternName::Custom(to_graph6(g)),
            graph: g.clone(),
        }
    }

    pub fn parse(s: &str) -> Result<Pattern> {
        Pattern::new(s.parse()?)
    }

    /// Shorthand for the fixed library names; panics on invalid parameters.
    pub fn named(name: PatternName) -> Pattern {
        Pattern::new(name).expect("library pattern parameters are valid")
    }
}

/// Every named pattern with at most `max_n` vertices.
pub fn library(max_n: usize) -> Vec<Pattern> {
    let mut names = Vec::new();
    for k in 2..=max_n {
        names.push(PatternName::K(k));
    }
    for k in 3..=max_n {
        names.push(PatternName::KMinus(k));
    }
    for k in 3..max_n {
        for p in 1..=(k - 1) / 2 {
            names.push(PatternName::KSplit(k, p, k - 1 - p));
        }
    }
    if max_n >= 6 {
        names.extend([PatternName::K33, PatternName::K33Minus, PatternName::C6Plus]);
    }
    for i in 3..max_n {
        names.push(PatternName::W(i));
    }
    names.into_iter().map(Pattern::named).collect()
}
