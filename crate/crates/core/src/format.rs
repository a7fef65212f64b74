//! graph6 and plain edge-list text formats.
//!
//! graph6: a size header (one byte `n + 63` for `n ≤ 62`, otherwise `~` followed
//! by three 6-bit bytes), then the upper triangle of the adjacency matrix in
//! column order `x(0,1), x(0,2), x(1,2), x(0,3), …`, packed big-endian into 6-bit
//! groups, each offset by 63. Unused low bits of the last byte must be zero.

use std::str::FromStr;

use thiserror::Error;

use crate::graph::{bit, Graph, GraphError, MAX_ORDER};

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty graph6 record")]
    EmptyRecord,
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(&'static str),
    #[error("graph6 record declares {0} vertices, more than the supported {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("truncated graph6 record: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage after graph6 record at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits in the last graph6 byte")]
    NonzeroPadding,
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Input encodings accepted by [`read_graphs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
    Auto,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edge-list" => Ok(Format::EdgeList),
            "auto" => Ok(Format::Auto),
            other => Err(format!("unknown format `{other}` (expected graph6, edgelist or auto)")),
        }
    }
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes `g` in graph6 for its current labeling (no canonicalization).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + data_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63].map(|b| b + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | ((col >> i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn from_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(ParseError::EmptyRecord);
    };
    if first == b':' || first == b';' || first == b'&' {
        return Err(ParseError::MalformedHeader("sparse6/digraph6 records are not graph6"));
    }
    let sixbits = |offset: usize| -> Result<u8, ParseError> {
        let byte = bytes[offset];
        if (63..=126).contains(&byte) {
            Ok(byte - 63)
        } else {
            Err(ParseError::InvalidByte { byte, offset })
        }
    };
    let (n, body_start) = if first != 126 {
        if !(63..126).contains(&first) {
            return Err(ParseError::MalformedHeader("size byte outside 63..=125"));
        }
        ((first - 63) as usize, 1)
    } else {
        if bytes.get(1) == Some(&126) {
            return Err(ParseError::MalformedHeader("8-byte size form implies more than 64 vertices"));
        }
        if bytes.len() < 4 {
            return Err(ParseError::MalformedHeader("incomplete 4-byte size form"));
        }
        let mut n = 0usize;
        for offset in 1..4 {
            n = (n << 6) | sixbits(offset)? as usize;
        }
        if n <= 62 {
            return Err(ParseError::MalformedHeader("non-minimal size encoding"));
        }
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(ParseError::OrderTooLarge(n));
    }
    let expected = data_len(n);
    let found = bytes.len() - body_start;
    if found < expected {
        return Err(ParseError::Truncated { expected, found });
    }
    if found > expected {
        return Err(ParseError::TrailingGarbage { offset: body_start + expected });
    }
    let mut adj = vec![0u64; n];
    let total_bits = n * n.saturating_sub(1) / 2;
    let (mut i, mut j) = (0usize, 1usize);
    for k in 0..expected {
        let chunk = sixbits(body_start + k)?;
        for b in 0..6 {
            let index = k * 6 + b;
            let set = (chunk >> (5 - b)) & 1 == 1;
            if index >= total_bits {
                if set {
                    return Err(ParseError::NonzeroPadding);
                }
                continue;
            }
            if set {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(Graph::from_adjacency(adj)?)
}

/// Parses a `u v` edge list (0-indexed, `#` comments). The order is one more
/// than the largest vertex mentioned.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for (index, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |reason: String| ParseError::EdgeList { line: index + 1, reason };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!("expected `u v`, found {} fields", fields.len())));
        }
        let parse = |f: &str| f.parse::<usize>().map_err(|e| err(format!("bad vertex `{f}`: {e}")));
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    if n == 0 {
        return Err(ParseError::EdgeList { line: 0, reason: "no edges".into() });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .all(|l| {
            let mut it = l.split_whitespace();
            matches!((it.next(), it.next(), it.next()), (Some(a), Some(b), None)
                if a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok())
        })
}

/// Reads graphs from text. graph6 input yields one graph per non-blank line;
/// edge-list input yields exactly one graph. `Auto` picks edge-list when every
/// non-comment line is an integer pair (graph6 bytes never include digits).
pub fn read_graphs(text: &str, format: Format) -> Result<Vec<Graph>, ParseError> {
    let format = match format {
        Format::Auto if looks_like_edge_list(text) && text.lines().any(|l| !l.trim().is_empty()) => {
            Format::EdgeList
        }
        Format::Auto => Format::Graph6,
        f => f,
    };
    match format {
        Format::EdgeList => Ok(vec![parse_edge_list(text)?]),
        _ => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && *l != GRAPH6_HEADER)
            .map(from_graph6)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_encoded_records() {
        assert_eq!(to_graph6(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(to_graph6(&Graph::complete(1).unwrap()), "@");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        // x(0,1)=1 x(0,2)=0 x(1,2)=1 -> 101000 = 40 -> 'g'
        assert_eq!(to_graph6(&Graph::path(3).unwrap()), "Bg");
    }

    #[test]
    fn decodes_star() {
        // 000000 1111(00): the four bits x(i,4)
        let g = from_graph6("D?{").unwrap();
        assert_eq!(g, Graph::star(5).unwrap().relabel(&[1, 2, 3, 4, 0]));
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn padding_rules() {
        // '_' = 100000: only x(0,1) set, padding clear
        assert_eq!(from_graph6("B_").unwrap(), Graph::from_edges(3, &[(0, 1)]).unwrap());
        // 'x' = 111001: the last padding bit is set
        assert_eq!(from_graph6("Bx"), Err(ParseError::NonzeroPadding));
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(from_graph6(""), Err(ParseError::EmptyRecord));
        assert!(matches!(from_graph6(" w"), Err(ParseError::MalformedHeader(_))));
        assert_eq!(from_graph6("D?"), Err(ParseError::Truncated { expected: 2, found: 1 }));
        assert_eq!(from_graph6("Bww"), Err(ParseError::TrailingGarbage { offset: 2 }));
        assert_eq!(from_graph6("B\x7f"), Err(ParseError::InvalidByte { byte: 0x7f, offset: 1 }));
        assert!(matches!(from_graph6(":Fa@x^"), Err(ParseError::MalformedHeader(_))));
        assert_eq!(from_graph6("~??@"), Err(ParseError::MalformedHeader("non-minimal size encoding")));
        assert_eq!(from_graph6("~?@@"), Err(ParseError::OrderTooLarge(65)));
    }

    #[test]
    fn large_header_form() {
        let g = Graph::cycle(64).unwrap();
        let text = to_graph6(&g);
        assert!(text.starts_with("~?@?"));
        assert_eq!(from_graph6(&text).unwrap(), g);
        let g63 = Graph::path(63).unwrap();
        assert_eq!(from_graph6(&to_graph6(&g63)).unwrap(), g63);
    }

    #[test]
    fn accepts_header_and_newline() {
        assert_eq!(from_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("# triangle\n0 1\n1 2 # closing\n2 0\n").unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        assert!(matches!(parse_edge_list("0 1 2"), Err(ParseError::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 x"), Err(ParseError::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 3"), Err(ParseError::EdgeList { .. })));
    }

    #[test]
    fn auto_detection() {
        let gs = read_graphs("Bw\n@\n\nD?{\n", Format::Auto).unwrap();
        assert_eq!(gs.len(), 3);
        let gs = read_graphs("0 1\n1 2\n", Format::Auto).unwrap();
        assert_eq!(gs, vec![Graph::path(3).unwrap()]);
    }
}
