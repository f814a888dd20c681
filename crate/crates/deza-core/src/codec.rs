//! Text formats: graph6 (short form, up to 62 vertices) and a plain
//! "n m" edge-list format.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (for v = 1..n-1, the bits (0,v), (1,v), ..., (v-1,v)) into 6-bit groups,
//! each printed as ASCII code group+63, after a single leading byte n+63.

use crate::error::Error;
use crate::graph::Graph;

pub fn to_graph6(g: &Graph) -> Result<String, Error> {
    let n = g.n();
    if n > 62 {
        return Err(Error::Graph6TooLarge(n));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push((group + 63) as char);
    }
    Ok(out)
}

pub fn from_graph6(text: &str) -> Result<Graph, Error> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::BadGraph6("empty input".into()));
    }
    if bytes[0] == b'~' {
        return Err(Error::BadGraph6(
            "long-form graph6 (more than 62 vertices) is not supported".into(),
        ));
    }
    if !(63..=126).contains(&bytes[0]) {
        return Err(Error::BadGraph6(format!("bad size byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    let bit_count = n * (n - 1) / 2;
    let expected = 1 + bit_count.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::BadGraph6(format!(
            "expected {expected} bytes for n = {n}, got {}",
            bytes.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut idx = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + idx / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::BadGraph6(format!("bad data byte {byte}")));
            }
            let bit = (byte - 63) >> (5 - idx % 6) & 1;
            if bit == 1 {
                g.add_edge(u, v)?;
            }
            idx += 1;
            if idx == bit_count {
                break 'outer;
            }
        }
    }
    // padding bits beyond the triangle must be zero
    if !bit_count.is_multiple_of(6) {
        let last = bytes[bytes.len() - 1] - 63;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::BadGraph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Serialize as an edge list: first line "n m", then one "u v" line per edge
/// with u < v, in lexicographic order.
pub fn to_edge_list_text(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list_text(text: &str) -> Result<Graph, Error> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::BadEdgeList("missing 'n m' header line".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::BadEdgeList(format!("bad header {header:?}")))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::BadEdgeList(format!("bad header {header:?}")))?;
    if parts.next().is_some() {
        return Err(Error::BadEdgeList(format!("extra tokens in header {header:?}")));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::BadEdgeList(format!("bad edge line {line:?}")))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::BadEdgeList(format!("bad edge line {line:?}")))?;
        if parts.next().is_some() {
            return Err(Error::BadEdgeList(format!("extra tokens in edge line {line:?}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::BadEdgeList(format!(
            "header promises {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges)
}
