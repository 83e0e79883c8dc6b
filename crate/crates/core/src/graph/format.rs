//! Text encodings: graph6 and a plain edge list (`n` on the first line, then
//! one `u v` pair per line, 0-based).

use thiserror::Error;

use super::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("malformed graph6 size prefix")]
    MalformedLength,
    #[error("non-printable byte 0x{byte:02x} at offset {offset}")]
    NonPrintable { byte: u8, offset: usize },
    #[error("graph6 adjacency data truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage after graph6 data ({0} extra bytes)")]
    TrailingGarbage(usize),
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const MAX_GRAPH6_ORDER: usize = 258_047;

fn push_order(out: &mut String, n: usize) {
    assert!(n <= MAX_GRAPH6_ORDER, "graph6 order {n} unsupported");
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
}

/// Graph6 string for `n` vertices and the given pairs (either orientation).
pub(crate) fn graph6_from_pairs(n: usize, pairs: impl Iterator<Item = (Vertex, Vertex)>) -> String {
    let bits = n * n.saturating_sub(1) / 2;
    let mut packed = vec![0u8; bits.div_ceil(6)];
    for (u, v) in pairs {
        let (i, j) = (u.min(v), u.max(v));
        let index = j * (j - 1) / 2 + i;
        packed[index / 6] |= 1 << (5 - index % 6);
    }
    let mut out = String::with_capacity(packed.len() + 4);
    push_order(&mut out, n);
    out.extend(packed.into_iter().map(|b| (b + 63) as char));
    out
}

pub fn graph6_encode(g: &Graph) -> String {
    graph6_from_pairs(g.vertex_count(), g.edges().iter().copied())
}

/// Decodes one graph6 line. A single trailing newline is tolerated.
pub fn graph6_decode(text: &str) -> Result<Graph, FormatError> {
    let line = text
        .strip_suffix('\n')
        .map(|s| s.strip_suffix('\r').unwrap_or(s))
        .unwrap_or(text);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(FormatError::NonPrintable { byte, offset });
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(FormatError::MalformedLength);
        }
        (n, &bytes[4..])
    } else {
        return Err(FormatError::MalformedLength);
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(FormatError::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(FormatError::TrailingGarbage(body.len() - expected));
    }
    let mut edges = Vec::new();
    let mut index = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[index / 6] - 63) & (1 << (5 - index % 6)) != 0 {
                edges.push((i, j));
            }
            index += 1;
        }
    }
    if bits % 6 != 0 {
        let tail = (body[expected - 1] - 63) & ((1 << (6 - bits % 6)) - 1);
        if tail != 0 {
            return Err(FormatError::NonZeroPadding);
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges))
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn decode_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, first) = lines.next().ok_or(FormatError::Empty)?;
    let n: usize = first.parse().map_err(|_| FormatError::EdgeList {
        line,
        message: format!("expected vertex count, found {first:?}"),
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let parsed: Option<Vec<Vertex>> = parts.iter().map(|p| p.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[u, v]) => edges.push((u, v)),
            _ => {
                return Err(FormatError::EdgeList {
                    line,
                    message: format!("expected two vertex numbers, found {l:?}"),
                })
            }
        }
    }
    Ok(Graph::new(n, &edges)?)
}

/// Parses one graph, detecting the format from its first byte: graph6 when it
/// is at least `?`, edge list otherwise.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let trimmed = text.trim_start();
    match trimmed.as_bytes().first() {
        None => Err(FormatError::Empty),
        Some(&b) if b >= b'?' => graph6_decode(trimmed.trim_end()),
        Some(_) => decode_edge_list(trimmed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_bw() {
        assert_eq!(graph6_encode(&Graph::complete(3)), "Bw");
        assert_eq!(graph6_decode("Bw").unwrap(), Graph::complete(3));
    }

    #[test]
    fn single_vertex() {
        assert_eq!(graph6_encode(&Graph::empty(1)), "@");
        assert_eq!(graph6_decode("@\n").unwrap(), Graph::empty(1));
    }

    #[test]
    fn known_string() {
        // 5 vertices, edges 0-2 0-4 1-3 3-4.
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(graph6_encode(&g), "DQc");
    }

    #[test]
    fn long_order_prefix() {
        let g = Graph::path(70);
        let s = graph6_encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(graph6_decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(graph6_decode(""), Err(FormatError::Empty));
        assert_eq!(graph6_decode("Bww"), Err(FormatError::TrailingGarbage(1)));
        assert_eq!(
            graph6_decode("D"),
            Err(FormatError::Truncated {
                expected: 2,
                found: 0
            })
        );
        assert!(matches!(
            graph6_decode("B\u{7}"),
            Err(FormatError::NonPrintable { byte: 7, .. })
        ));
        assert_eq!(graph6_decode("~~"), Err(FormatError::MalformedLength));
        assert_eq!(graph6_decode("~??@"), Err(FormatError::MalformedLength));
        // 'x' sets a padding bit of the 3-vertex graph.
        assert_eq!(graph6_decode("Bx"), Err(FormatError::NonZeroPadding));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(5);
        let text = encode_edge_list(&g);
        assert_eq!(text, "5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(decode_edge_list(&text).unwrap(), g);
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(parse_graph("Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            decode_edge_list("3\n0 1 2\n"),
            Err(FormatError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            decode_edge_list("3\n0 0\n"),
            Err(FormatError::Graph(GraphError::SelfLoop(0)))
        ));
        assert!(matches!(
            decode_edge_list("x\n"),
            Err(FormatError::EdgeList { line: 1, .. })
        ));
    }
}
