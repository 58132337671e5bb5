//! graph6 codec (short form, n ≤ 62) and the plain edge-list text format.
//!
//! A record is one ASCII line: a header byte 63+n followed by the upper
//! triangle of the adjacency matrix in column-major order, packed six bits
//! per byte (most significant first), each byte offset by 63. Padding bits
//! must be zero.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty record")]
    EmptyRecord,
    #[error("long-form records (n > 62) are not supported")]
    LongForm,
    #[error("byte {byte} at position {pos} is outside the graph6 range 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("record encodes an empty graph (n = 0)")]
    EmptyGraph,
    #[error("record truncated: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("record has {found} data bytes but only {expected} are allowed")]
    TrailingData { expected: usize, found: usize },
    #[error("padding bits are not zero")]
    DirtyPadding,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

fn data_bytes(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 record.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::EmptyRecord);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { pos, byte: b });
        }
    }
    if bytes[0] == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::EmptyGraph);
    }
    let expected = data_bytes(n);
    let found = bytes.len() - 1;
    if found < expected {
        return Err(Graph6Error::Truncated { expected, found });
    }
    if found > expected {
        return Err(Graph6Error::TrailingData { expected, found });
    }

    let nbits = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for col in 1..n {
        for row in 0..col {
            let byte = bytes[1 + bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((row, col));
            }
            bit += 1;
            if bit >= nbits {
                break 'outer;
            }
        }
    }
    // trailing pad bits in the last byte must be zero
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::DirtyPadding);
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are valid by construction"))
}

/// Encodes a graph as one graph6 record. Infallible: every `Graph` fits the
/// short form by construction.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= MAX_VERTICES);
    let mut out = Vec::with_capacity(1 + data_bytes(n));
    out.push(63 + n as u8);
    let mut acc: u8 = 0;
    let mut used = 0;
    for col in 1..n {
        for row in 0..col {
            acc <<= 1;
            if g.has_edge(row, col) {
                acc |= 1;
            }
            used += 1;
            if used == 6 {
                out.push(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(63 + (acc << (6 - used)));
    }
    String::from_utf8(out).expect("graph6 bytes are ascii")
}

/// Parses the edge-list text format: first line `n m`, then m lines `u v`
/// with 0-based endpoints.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate();
    let (line0, header) = lines.next().ok_or(EdgeListError::Parse {
        line: 1,
        message: "missing `n m` header line".into(),
    })?;
    let parse_pair = |line: usize, s: &str, what: &str| -> Result<(usize, usize), EdgeListError> {
        let mut it = s.split_whitespace();
        let err = || EdgeListError::Parse {
            line: line + 1,
            message: format!("expected two integers ({what})"),
        };
        let a = it.next().ok_or_else(err)?.parse().map_err(|_| err())?;
        let b = it.next().ok_or_else(err)?.parse().map_err(|_| err())?;
        if it.next().is_some() {
            return Err(err());
        }
        Ok((a, b))
    };
    let (n, m) = parse_pair(line0, header, "n m")?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = line0;
    for _ in 0..m {
        let (line, s) = lines.next().ok_or(EdgeListError::Parse {
            line: last_line + 2,
            message: format!("expected {m} edge lines"),
        })?;
        last_line = line;
        edges.push(parse_pair(line, s, "u v")?);
    }
    if let Some((line, s)) = lines.find(|(_, s)| !s.trim().is_empty()) {
        return Err(EdgeListError::Parse {
            line: line + 1,
            message: format!("unexpected extra line {s:?}"),
        });
    }
    Graph::from_edges(n, &edges).map_err(|source| EdgeListError::Graph {
        line: last_line + 1,
        source,
    })
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_records() {
        // hand-encoded per the format: K2 has the single bit 1 -> 100000
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        assert!(k2.has_edge(0, 1));
        assert_eq!(to_graph6(&k2), "A_");

        // K3: bits x01 x02 x12 = 111, padded to 111000 = 56 -> 'w'
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!((k3.n(), k3.m()), (3, 3));
        assert_eq!(to_graph6(&Graph::complete(3).unwrap()), "Bw");

        // K1: header only
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        assert_eq!(to_graph6(&k1), "@");
    }

    #[test]
    fn newline_tolerated() {
        assert_eq!(parse_graph6("A_\n").unwrap().n(), 2);
    }

    #[test]
    fn malformed_records() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::EmptyRecord));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::EmptyGraph));
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::LongForm));
        assert_eq!(
            parse_graph6("A"),
            Err(Graph6Error::Truncated {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(
            parse_graph6("A__"),
            Err(Graph6Error::TrailingData {
                expected: 1,
                found: 2
            })
        );
        assert_eq!(
            parse_graph6("A!"),
            Err(Graph6Error::InvalidByte { pos: 1, byte: b'!' })
        );
        // K2 with a dirty padding bit: 100001 = 33 -> byte 96 '`'
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::DirtyPadding));
    }

    #[test]
    fn roundtrip_structured_graphs() {
        for g in [
            Graph::complete(8).unwrap(),
            Graph::path(10).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::star(13).unwrap(),
            Graph::from_edges(1, &[]).unwrap(),
            Graph::complete(62).unwrap(),
        ] {
            assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(text, "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        match parse_edge_list("2 2\n0 1\n") {
            Err(EdgeListError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("3 1\n0 x\n") {
            Err(EdgeListError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("3 1\n0 0\n") {
            Err(EdgeListError::Graph { line: 2, source }) => {
                assert_eq!(source, GraphError::SelfLoop(0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
