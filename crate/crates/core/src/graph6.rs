//! graph6 encoding (McKay's format) and newline-delimited corpus files.
//!
//! Header: one byte `n + 63` for `n <= 62`, otherwise `~` followed by three
//! bytes carrying 18 bits of `n`. Payload: upper-triangle adjacency bits in
//! column order `(0,1), (0,2), (1,2), (0,3), ...`, big-endian in 6-bit groups
//! each offset by 63, zero padded.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        msg: msg.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(err(
                skip + i,
                format!("byte {b:#04x} outside the printable range 63..=126"),
            ));
        }
    }
    let (n, header_len) = match body.first() {
        None => return Err(err(skip, "empty input")),
        Some(&126) => {
            if body.len() < 4 {
                return Err(err(skip + body.len(), "truncated size header"));
            }
            if body[1] == 126 {
                return Err(err(skip + 1, "8-byte size headers are not supported"));
            }
            let n = body[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
            if n < 63 {
                return Err(err(skip, format!("long header used for n = {n}")));
            }
            (n, 4)
        }
        Some(&b) => ((b - BIAS) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let payload = &body[header_len..];
    if payload.len() < nbytes {
        return Err(err(
            skip + body.len(),
            format!("truncated payload: expected {nbytes} bytes, found {}", payload.len()),
        ));
    }
    if payload.len() > nbytes {
        return Err(err(skip + header_len + nbytes, "trailing bytes after payload"));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - BIAS;
            if byte & (0x20 >> (k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = payload[nbytes - 1] - BIAS;
        let pad = 6 - nbits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(err(skip + header_len + nbytes - 1, "nonzero padding bits"));
        }
    }
    Graph::from_rows(rows)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            k += 1;
            if k % 6 == 0 {
                out.push(acc + BIAS);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses a newline-delimited corpus, skipping blank lines and `#` comments.
pub fn parse_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_graph6)
        .collect()
}

pub fn write_corpus<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    let mut s = String::new();
    for g in graphs {
        s.push_str(&to_graph6(g));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::wheel;
    use proptest::prelude::*;

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(parse_graph6("Dhc").unwrap(), c5());
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(to_graph6(&c5()), "Dhc");
    }

    #[test]
    fn hand_encoded_c5_bits() {
        // upper-triangle bits of C5 in column order: 1010011001, padded to 12
        let bits = "101001100100";
        let bytes: Vec<u8> = bits
            .as_bytes()
            .chunks(6)
            .map(|c| c.iter().fold(0u8, |a, &b| (a << 1) | (b - b'0')) + 63)
            .collect();
        assert_eq!(String::from_utf8(bytes).unwrap(), "hc");
    }

    #[test]
    fn wheel5_string() {
        // C5 bits, then hub column (0..4,5) all ones: 101001 100111 111000
        assert_eq!(to_graph6(&wheel(5).unwrap()), "Ehfw");
    }

    #[test]
    fn trivial_sizes() {
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn long_header() {
        let g = Graph::complete(63).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(
            parse_graph6("C~~"),
            Err(Error::Graph6 {
                offset: 2,
                msg: "trailing bytes after payload".into()
            })
        );
        match parse_graph6("D") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph6("C ~") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        // Bw with a padding bit set
        match parse_graph6("Bx") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("").is_err());
    }

    #[test]
    fn corpus_round_trip() {
        let gs = vec![Graph::complete(4).unwrap(), c5()];
        let text = format!("# comment\n{}\n", write_corpus(&gs));
        assert_eq!(parse_corpus(&text).unwrap(), gs);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=8).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bs| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bs[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
