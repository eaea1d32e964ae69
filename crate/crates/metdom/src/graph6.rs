//! The graph6 byte format for simple undirected graphs.
//!
//! Exactly the published encoding: a size field, then the upper triangle of
//! the adjacency matrix in column order, six bits per printable byte. This is
//! what standard small-graph enumeration tools emit, so exhaustive corpora
//! can be ingested line by line.

use crate::graph::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

fn bad(message: impl Into<String>) -> GraphError {
    GraphError::Graph6(message.into())
}

/// Decodes one graph6 line (an optional `>>graph6<<` prefix is accepted).
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty line"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b} outside printable range 63..=126")));
    }
    let (n, used) = decode_size(bytes)?;
    if n == 0 {
        return Err(bad("zero vertices"));
    }
    let bits = n * (n - 1) / 2;
    let expect = used + bits.div_ceil(6);
    if bytes.len() < expect {
        return Err(bad(format!(
            "truncated: need {expect} bytes, got {}",
            bytes.len()
        )));
    }
    if bytes.len() > expect {
        return Err(bad(format!(
            "trailing bytes: need {expect}, got {}",
            bytes.len()
        )));
    }
    let mut pairs = Vec::new();
    let mut bit = 0usize;
    'cols: for v in 1..n {
        for u in 0..v {
            let byte = bytes[used + bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                pairs.push((u, v));
            }
            bit += 1;
            if bit == bits {
                break 'cols;
            }
        }
    }
    // Padding bits past the triangle must be zero.
    if bits % 6 != 0 {
        let last = bytes[expect - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Graph::from_edge_list(n, &pairs)
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let bits = n * (n - 1) / 2;
    let mut packed = vec![0u8; bits.div_ceil(6)];
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                packed[bit / 6] |= 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    out.extend(packed.iter().map(|b| b + 63));
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(bad("graphs beyond 258047 vertices are not supported"));
    }
    if bytes.len() < 4 {
        return Err(bad("truncated long size field"));
    }
    let mut n = 0usize;
    for &b in &bytes[1..4] {
        n = (n << 6) | (b - 63) as usize;
    }
    if n < 63 {
        return Err(bad("long size field used for a small graph"));
    }
    Ok((n, 4))
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(
            n <= 258047,
            "graph too large for the supported graph6 range"
        );
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
}
