//! Small-graph toolkit for colour-critical graphs and clique-like minors:
//! bitset graphs, graph6, canonical labelling, exact colouring, minor search,
//! graph families and exhaustive scans.

pub mod canon;
pub mod classify;
pub mod color;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod hunt;
pub mod minor;
pub mod oracle;
pub mod pattern;
pub mod verify;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, is_isomorphic, CanonicalForm};
pub use classify::{
    bipartite_chain, bracket_label, check_hadwiger, clique_chain, hadwiger_number, in_hadwiger_class, is_free_hadwiger,
    is_free_hadwiger_by_augmentation, is_free_planar, is_free_planar_by_augmentation, minor_bracket, Bracket,
    FreeVerdict, HadwigerCheck,
};
pub use color::{
    chromatic_number, is_critical_fast, is_k_colorable, is_k_critical, Coloring, CriticalityReport, Verdict,
};
pub use error::{Error, Result};
pub use families::{
    higher_wheel_candidate, hypercube, split_spoke_wheel, truncate_corners, verify_higher_wheel, wheel, CandidateStore,
    FamilySpec, SplitInterpretation,
};
pub use graph::{Edge, Graph, MAX_VERTICES};
pub use graph6::{parse_corpus, parse_graph6, to_graph6, write_corpus};
pub use minor::{has_minor, is_minor, MinorModel};
pub use pattern::{Pattern, PatternName};
