//! Isomorph-free enumeration and the exhaustive scans built on it.

pub mod enumerate;
pub mod expand;
pub mod report;
pub mod scan;

pub use enumerate::{enumerate_connected, enumerate_connected_jobs, scan_connected, MAX_ENUM_N};
pub use expand::{expand_by_uncontraction, Expansion, MAX_EXPAND_N};
pub use report::{classify_row, tag_graph, GraphRow, ScanReport, ENGINE_VERSION};
pub use scan::{corner_cut_scan, find_k_critical, identify_higher_wheels, question1_scan};
