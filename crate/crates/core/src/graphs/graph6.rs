//! The graph6 ASCII format: a size header followed by the upper-triangle
//! adjacency bits taken column by column (`(0,1), (0,2), (1,2), (0,3), …`),
//! packed six to a byte and offset by 63.

use super::{check_limit, SmallGraph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &SmallGraph) -> String {
    let n = g.order();
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    let mut out = String::with_capacity(1 + bits.len().div_ceil(6));
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for k in 0..6 {
            byte = byte << 1 | chunk.get(k).copied().unwrap_or(false) as u8;
        }
        out.push((byte + 63) as char);
    }
    out
}

pub fn decode_graph6(input: &str) -> Result<SmallGraph> {
    let malformed = |reason: &str| Error::Graph6 {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let text = input.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    if let Some(b) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(malformed(&format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let (n, body) = match bytes[0] {
        126 if bytes.len() >= 4 && bytes[1] != 126 => {
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &bytes[4..])
        }
        126 => return Err(malformed("unsupported size header")),
        b => ((b - 63) as usize, &bytes[1..]),
    };
    check_limit(n, MAX_VERTICES)?;
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(malformed(&format!(
            "expected {} data bytes for {n} vertices, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..body.len() * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }
    let mut g = SmallGraph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
