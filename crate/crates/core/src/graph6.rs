//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column-major order, six bits per printable byte.

use crate::error::Graph6Error;
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn data_byte(byte: u8, offset: usize) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Graph6Error::InvalidByte { byte, offset })
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let (n, body_start) = if bytes[0] == 126 {
        // Four-byte form. The eight-byte form (n > 258047) is never in range.
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Graph6Error::MalformedHeader);
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = n << 6 | data_byte(b, i + 1).map_err(|_| Graph6Error::MalformedHeader)? as usize;
        }
        if n < 63 {
            return Err(Graph6Error::MalformedHeader);
        }
        (n, 4)
    } else {
        (data_byte(bytes[0], 0).map_err(|_| Graph6Error::MalformedHeader)? as usize, 1)
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::VertexCountOutOfRange(n));
    }

    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            found: body.len() - expected,
        });
    }

    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    let mut values = Vec::with_capacity(expected);
    for (i, &b) in body.iter().enumerate() {
        values.push(data_byte(b, body_start + i)?);
    }
    for j in 1..n {
        for i in 0..j {
            if values[k / 6] >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    let g = Graph::from_adjacency(adj).expect("graph6 decoding yields a simple graph");
    g.assert_invariants();
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses a graph6 list, one graph per non-blank line. Returns the 1-based
/// line number alongside any error.
pub fn parse_graph6_list(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| (i + 1, e)))
        .collect()
}

/// Parses an edge list such as `0-1 1-2 2-0` or `0 1,1 2,2 0`. The vertex
/// count is one more than the largest index unless `n` is given.
pub fn parse_edge_list(text: &str, n: Option<usize>) -> crate::Result<Graph> {
    let nums: Vec<usize> = text
        .split(|c: char| !c.is_ascii_digit())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| crate::Error::InvalidParameters(format!("bad vertex `{t}`"))))
        .collect::<crate::Result<_>>()?;
    if !nums.len().is_multiple_of(2) {
        return Err(crate::Error::InvalidParameters(
            "edge list has an odd number of endpoints".into(),
        ));
    }
    let n = n.unwrap_or_else(|| nums.iter().max().map_or(0, |m| m + 1));
    let edges: Vec<(usize, usize)> = nums.chunks(2).map(|p| (p[0], p[1])).collect();
    Graph::from_edges(n, &edges)
}

/// Parses either graph6 or, failing that, an edge list.
pub fn parse_graph_text(text: &str) -> crate::Result<Graph> {
    let t = text.trim();
    // Digits never occur in graph6 data bytes.
    if t.chars().any(|c| c.is_ascii_digit()) {
        return parse_edge_list(t, None);
    }
    Ok(parse_graph6(t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn known_encodings() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4, named::complete(4));
        assert_eq!(to_graph6(&k4), "C~");
        let one = parse_graph6("@").unwrap();
        assert_eq!((one.n(), one.m()), (1, 0));
        assert_eq!(to_graph6(&one), "@");
        // Cross-checked against networkx.to_graph6_bytes.
        assert_eq!(to_graph6(&named::cycle(5)), "Dhc");
        assert_eq!(to_graph6(&named::petersen()), "IheA@GUAo");
    }

    #[test]
    fn header_is_stripped() {
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), named::complete(4));
    }

    #[test]
    fn large_header_form() {
        let g = named::cycle(64);
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g63 = named::path(63);
        assert_eq!(parse_graph6(&to_graph6(&g63)).unwrap(), g63);
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6(" "), Err(Graph6Error::MalformedHeader));
        assert_eq!(parse_graph6("C"), Err(Graph6Error::Truncated { expected: 1, found: 0 }));
        assert_eq!(parse_graph6("C~~"), Err(Graph6Error::TrailingBytes { found: 1 }));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::VertexCountOutOfRange(0)));
        assert_eq!(parse_graph6("~?@@"), Err(Graph6Error::VertexCountOutOfRange(65)));
        assert_eq!(parse_graph6("~~"), Err(Graph6Error::MalformedHeader));
        assert!(matches!(parse_graph6("C!"), Err(Graph6Error::InvalidByte { offset: 1, .. })));
    }

    #[test]
    fn edge_lists() {
        let g = parse_graph_text("0-1 1-2 2-0").unwrap();
        assert_eq!(g, named::cycle(3));
        assert_eq!(parse_graph_text("C~").unwrap(), named::complete(4));
        assert!(parse_edge_list("0-1 1", None).is_err());
        assert!(parse_edge_list("0-1 1-0", None).is_err());
    }

    #[test]
    fn list_reports_line_numbers() {
        let gs = parse_graph6_list(">>graph6<<C~\n\nBw\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(parse_graph6_list("C~\nC").unwrap_err().0, 2);
    }
}
