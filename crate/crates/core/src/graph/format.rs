//! graph6 encoding and decoding, plus a sparse6 decoder.
//!
//! Only the header-less forms are produced. On input an optional
//! `>>graph6<<` / `>>sparse6<<` header is skipped.

use thiserror::Error;

use super::{bit, Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at byte {offset}")]
pub struct FormatError {
    /// Byte offset of the offending input position.
    pub offset: usize,
    pub kind: FormatErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatErrorKind {
    #[error("empty input")]
    Empty,
    #[error("malformed size header")]
    BadHeader,
    #[error("byte {0:#04x} outside the printable range 63..=126")]
    BadByte(u8),
    #[error("graphs on {0} vertices are not supported (maximum 64)")]
    TooLarge(usize),
    #[error("truncated bit vector: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing bytes after the encoded graph")]
    Trailing,
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("incremental sparse6 is not supported")]
    Incremental,
}

fn err(offset: usize, kind: FormatErrorKind) -> FormatError {
    FormatError { offset, kind }
}

/// Reads the size field `N(n)` starting at `pos`; returns `(n, next_pos)`.
fn read_size(bytes: &[u8], pos: usize) -> Result<(usize, usize), FormatError> {
    let data = |i: usize| -> Result<u64, FormatError> {
        match bytes.get(i) {
            None => Err(err(i, FormatErrorKind::BadHeader)),
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
            Some(&b) => Err(err(i, FormatErrorKind::BadByte(b))),
        }
    };
    match bytes.get(pos) {
        None => Err(err(pos, FormatErrorKind::Empty)),
        Some(&126) => {
            if bytes.get(pos + 1) == Some(&126) {
                // 36-bit form; anything this large is out of range anyway.
                let mut n = 0u64;
                for i in 0..6 {
                    n = (n << 6) | data(pos + 2 + i)?;
                }
                return Err(err(pos, FormatErrorKind::TooLarge(n as usize)));
            }
            let mut n = 0u64;
            for i in 0..3 {
                n = (n << 6) | data(pos + 1 + i)?;
            }
            if n < 63 {
                return Err(err(pos, FormatErrorKind::BadHeader));
            }
            Ok((n as usize, pos + 4))
        }
        Some(_) => Ok((data(pos)? as usize, pos + 1)),
    }
}

fn write_size(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

fn strip(text: &str, header: &str) -> (usize, usize) {
    let bytes = text.as_bytes();
    let mut start = 0;
    if text.starts_with(header) {
        start = header.len();
    }
    let mut end = bytes.len();
    while end > start && matches!(bytes[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    (start, end)
}

/// Decodes a graph6 string. A trailing newline is tolerated.
pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let (start, end) = strip(text, ">>graph6<<");
    let bytes = &text.as_bytes()[..end];
    if start >= end {
        return Err(err(start, FormatErrorKind::Empty));
    }
    let (n, pos) = read_size(bytes, start)?;
    if n > MAX_VERTICES {
        return Err(err(start, FormatErrorKind::TooLarge(n)));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let found = end - pos;
    if found < expected {
        return Err(err(end, FormatErrorKind::Truncated { expected, found }));
    }
    if found > expected {
        return Err(err(pos + expected, FormatErrorKind::Trailing));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            if k >= nbits {
                break 'outer;
            }
            let byte = bytes[pos + k / 6];
            if !(63..=126).contains(&byte) {
                return Err(err(pos + k / 6, FormatErrorKind::BadByte(byte)));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    // Padding bits of the last byte must be zero and every byte printable.
    for (off, &byte) in bytes[pos..end].iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(err(pos + off, FormatErrorKind::BadByte(byte)));
        }
    }
    if expected > 0 {
        let pad = expected * 6 - nbits;
        let last = bytes[end - 1] - 63;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(err(end - 1, FormatErrorKind::Trailing));
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

/// Encodes `g` as header-less graph6.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(4 + (n * n) / 12 + 1);
    write_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes a (non-incremental) sparse6 string. Multi-edges collapse;
/// loops are rejected.
pub fn from_sparse6(text: &str) -> Result<Graph, FormatError> {
    let (start, end) = strip(text, ">>sparse6<<");
    let bytes = &text.as_bytes()[..end];
    match bytes.get(start) {
        Some(b':') => {}
        Some(b';') => return Err(err(start, FormatErrorKind::Incremental)),
        Some(_) => return Err(err(start, FormatErrorKind::BadHeader)),
        None => return Err(err(start, FormatErrorKind::Empty)),
    }
    let (n, pos) = read_size(bytes, start + 1)?;
    if n > MAX_VERTICES {
        return Err(err(start + 1, FormatErrorKind::TooLarge(n)));
    }
    let mut width = 0;
    while width < 64 && (1usize << width) < n {
        width += 1;
    }
    let mut bits = Vec::with_capacity((end - pos) * 6);
    for (off, &byte) in bytes[pos..end].iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(err(pos + off, FormatErrorKind::BadByte(byte)));
        }
        let d = byte - 63;
        for s in (0..6).rev() {
            bits.push((d >> s) & 1 == 1);
        }
    }
    let mut adj = vec![0u64; n];
    let mut v = 0usize;
    let mut i = 0usize;
    while i + 1 + width <= bits.len() {
        let b = bits[i];
        let mut x = 0usize;
        for k in 0..width {
            x = (x << 1) | bits[i + 1 + k] as usize;
        }
        let block_byte = pos + i / 6;
        i += 1 + width;
        if b {
            v += 1;
        }
        if v >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(err(block_byte, FormatErrorKind::Loop(x)));
        } else {
            adj[x] |= bit(v);
            adj[v] |= bit(x);
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

/// Accepts either graph6 or sparse6 (leading `:`).
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let t = text.trim_end_matches(['\n', '\r']);
    if t.starts_with(':') || t.starts_with(">>sparse6<<") || t.starts_with(';') {
        from_sparse6(t)
    } else {
        from_graph6(t)
    }
}
