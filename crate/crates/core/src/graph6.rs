//! graph6 text encoding, single-byte order form only (`n <= 62`).
//!
//! The encoding is one order byte `n + 63` followed by the upper triangle of
//! the adjacency matrix in column-major order (`(0,1), (0,2), (1,2), (0,3),
//! ...`), packed six bits per byte, most significant bit first, zero padded,
//! each byte offset by 63.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order representable with a single order byte.
pub const MAX_GRAPH6_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte} at offset {offset} is outside the printable range 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("graph6 order {0} needs the multi-byte form, which is not supported (max 62)")]
    OrderTooLarge(usize),
    #[error("graph6 payload for n = {order} needs {expected} bytes, found {found}")]
    Length {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in the last graph6 byte")]
    Padding,
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes one graph6 line. A trailing newline (or `\r\n`) is ignored, as is
/// the optional `>>graph6<<` header.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, payload) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { byte, offset });
        }
    }
    let n = (first - 63) as usize;
    if n > MAX_GRAPH6_ORDER {
        // 126 introduces the multi-byte order form.
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let expected = payload_len(n);
    if payload.len() != expected {
        return Err(Graph6Error::Length {
            order: n,
            expected,
            found: payload.len(),
        });
    }
    let total = n * n.saturating_sub(1) / 2;
    let bit = |k: usize| (payload[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (total..expected * 6).any(bit) {
        return Err(Graph6Error::Padding);
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}
