//! Text formats: graph6 (short form), edge lists.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest order representable by the one-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 header byte {0:#04x}")]
    MalformedHeader(u8),
    #[error("graph6 byte {byte:#04x} at position {position} is outside 63..=126")]
    ByteOutOfRange { position: usize, byte: u8 },
    #[error("graph6 body too short: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after graph6 body: {extra} extra bytes")]
    TrailingGarbage { extra: usize },
    #[error("non-zero padding bits in final graph6 byte")]
    NonZeroPadding,
    #[error("graph order exceeds the graph6 short form limit of {GRAPH6_MAX_ORDER}")]
    OrderExceedsCap,
    #[error("graph of order 0 is not supported")]
    ZeroOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("edge list is empty")]
    Empty,
    #[error("line {line}: non-numeric token {token:?}")]
    NonNumeric { line: usize, token: String },
    #[error("line {line}: expected two vertex ids, found {found} tokens")]
    WrongArity { line: usize, found: usize },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { line: usize, vertex: usize, order: usize },
    #[error("invalid order: {0}")]
    Order(GraphError),
}

fn bits_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Decodes a short-form graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` prefix are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if head == 126 {
        return Err(Graph6Error::OrderExceedsCap);
    }
    if !(63..126).contains(&head) {
        return Err(Graph6Error::MalformedHeader(head));
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange {
                position: i + 1,
                byte: b,
            });
        }
    }
    let nbits = bits_len(n);
    let expected = nbits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            extra: body.len() - expected,
        });
    }
    let bit = |k: usize| -> bool { ((body[k / 6] - 63) >> (5 - k % 6)) & 1 == 1 };
    for k in nbits..expected * 6 {
        if bit(k) {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    let mut g = Graph::empty(n).expect("1 <= n <= 62");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` in short-form graph6 (no header, no newline).
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::OrderExceedsCap);
    }
    let nbits = bits_len(n);
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// Parses `n` on the first line followed by one `u v` edge per line.
/// Blank lines and `#` comments are skipped; duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, first) = lines.next().ok_or(EdgeListError::Empty)?;
    let n = parse_usize(first, line_no)?;
    let mut g = Graph::empty(n).map_err(EdgeListError::Order)?;

    for (line, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(EdgeListError::WrongArity {
                line,
                found: tokens.len(),
            });
        }
        let u = parse_usize(tokens[0], line)?;
        let v = parse_usize(tokens[1], line)?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(EdgeListError::VertexOutOfRange {
                    line,
                    vertex,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(EdgeListError::Loop { line, vertex: u });
        }
        g.add_edge(u, v).expect("validated above");
    }
    Ok(g)
}

fn parse_usize(token: &str, line: usize) -> Result<usize, EdgeListError> {
    token.parse().map_err(|_| EdgeListError::NonNumeric {
        line,
        token: token.to_string(),
    })
}

/// Writes `g` in the edge-list format read by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
