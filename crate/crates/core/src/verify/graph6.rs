//! The graph6 format: order then upper-triangle bits, column by column,
//! packed six to a printable byte.

use crate::error::{Error, Result};
use crate::graph::UnderlyingGraph;

const MAX_ORDER: usize = 258_047;

pub fn encode(g: &UnderlyingGraph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 supports at most {MAX_ORDER} vertices");
    let mut out: Vec<u8> = if n <= 62 {
        vec![n as u8 + 63]
    } else {
        vec![126, (n >> 12) as u8 + 63, (n >> 6 & 63) as u8 + 63, (n & 63) as u8 + 63]
    };
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for k in 0..6 {
            byte = byte << 1 | u8::from(chunk.get(k).copied().unwrap_or(false));
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn decode(line: &str) -> Result<UnderlyingGraph> {
    let bad = |m: &str| Error::Graph6(format!("{m} in {line:?}"));
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line).trim_end();
    let bytes = line.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let (n, body) = match bytes {
        [] => return Err(bad("empty line")),
        [126, 126, ..] => return Err(bad("orders above 258047 are not supported")),
        [126, a, b, c, rest @ ..] => {
            ((*a as usize - 63) << 12 | (*b as usize - 63) << 6 | (*c as usize - 63), rest)
        }
        [126, ..] => return Err(bad("truncated order")),
        [a, rest @ ..] => (*a as usize - 63, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(bad(&format!("expected {} data bytes for {n} vertices, found {}", pairs.div_ceil(6), body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (pairs..body.len() * 6).any(bit) {
        return Err(bad("nonzero padding"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    UnderlyingGraph::new(n, edges)
}

/// One graph per non-empty line.
pub fn decode_all(text: &str) -> Result<Vec<UnderlyingGraph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| decode(l.trim())).collect()
}
