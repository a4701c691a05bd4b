//! graph6 codec.
//!
//! Header `N(n)`: one byte `n + 63` for `n <= 62`, otherwise `126` followed by
//! three (or `126 126` followed by six) 6-bit big-endian groups. The body packs
//! the upper triangle column by column (`x(0,1) x(0,2) x(1,2) x(0,3) …`), six bits
//! per byte, offset 63, zero padded.

use super::Graph;
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const MAX_BYTE: u8 = 126;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn read_groups(bytes: &[u8], start: usize, count: usize) -> Result<u64> {
    let mut value = 0u64;
    for i in 0..count {
        let pos = start + i;
        let b = *bytes
            .get(pos)
            .ok_or_else(|| err(pos, "truncated order header"))?;
        if !(OFFSET..=MAX_BYTE).contains(&b) {
            return Err(err(pos, format!("byte {b} outside [63,126]")));
        }
        value = (value << 6) | u64::from(b - OFFSET);
    }
    Ok(value)
}

/// Decodes one graph6 string. A trailing `\n` or `\r\n` is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    let (n, body_start) = if bytes[0] != MAX_BYTE {
        (read_groups(bytes, 0, 1)? as usize, 1)
    } else if bytes.get(1) != Some(&MAX_BYTE) {
        (read_groups(bytes, 1, 3)? as usize, 4)
    } else {
        (read_groups(bytes, 2, 6)? as usize, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < body_len {
        return Err(err(
            body_start + body.len(),
            format!("expected {body_len} body bytes for order {n}, found {}", body.len()),
        ));
    }
    if body.len() > body_len {
        return Err(err(body_start + body_len, "trailing bytes after graph body"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(OFFSET..=MAX_BYTE).contains(&b) {
            return Err(err(body_start + i, format!("byte {b} outside [63,126]")));
        }
    }

    let bit = |k: usize| -> bool {
        let byte = body[k / 6] - OFFSET;
        (byte >> (5 - k % 6)) & 1 == 1
    };
    for k in bits..body_len * 6 {
        if bit(k) {
            return Err(err(body_start + k / 6, "nonzero padding bits"));
        }
    }

    let mut g = Graph::empty(n);
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

/// Encodes `g` as a graph6 string (no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    let push_groups = |out: &mut Vec<u8>, value: u64, count: usize| {
        for i in (0..count).rev() {
            out.push(((value >> (6 * i)) & 0x3f) as u8 + OFFSET);
        }
    };
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(MAX_BYTE);
        push_groups(&mut out, n as u64, 3);
    } else {
        out.push(MAX_BYTE);
        out.push(MAX_BYTE);
        push_groups(&mut out, n as u64, 6);
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Strips a `>>graph6<<` header if present. Returns `None` for lines that carry
/// no graph (blank lines and bare `>>` headers).
pub fn strip_header(line: &str) -> Option<&str> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    if line.is_empty() || line.starts_with(">>") {
        None
    } else {
        Some(line)
    }
}
