//! graph6 encoding: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) …`), packed
//! six bits per byte, zero-padded, each byte offset by 63.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].iter().map(|&b| b as u8 + 63));
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

fn sextet(bytes: &[u8], i: usize) -> Result<u8> {
    match bytes.get(i) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(err(i, format!("byte 0x{b:02x} is outside the printable range 63..=126"))),
        None => Err(err(i, "unexpected end of input")),
    }
}

/// Parses one graph6 string. No trailing newline or other bytes are accepted.
pub fn graph6_decode(s: impl AsRef<[u8]>) -> Result<Graph> {
    let bytes = s.as_ref();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0)? as usize, 1)
    } else if bytes.get(1) == Some(&126) {
        let mut n = 0usize;
        for i in 2..8 {
            n = n << 6 | sextet(bytes, i)? as usize;
        }
        (n, 8)
    } else {
        let mut n = 0usize;
        for i in 1..4 {
            n = n << 6 | sextet(bytes, i)? as usize;
        }
        if n < 63 {
            return Err(err(1, format!("long header used for small order {n}")));
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let body = bits.div_ceil(6);
    let mut g = Graph::empty(n)?;
    let (mut i, mut j) = (0usize, 1usize);
    for k in 0..body {
        let x = sextet(bytes, pos)?;
        for shift in (0..6).rev() {
            let bit = x >> shift & 1;
            if k * 6 + (5 - shift) >= bits {
                if bit != 0 {
                    return Err(err(pos, "nonzero padding bits"));
                }
                continue;
            }
            if bit == 1 {
                g.insert_edge(i, j).expect("upper-triangle positions are distinct");
            }
            i += 1;
            if i == j {
                j += 1;
                i = 0;
            }
        }
        pos += 1;
    }
    if pos != bytes.len() {
        return Err(err(pos, "trailing bytes after graph"));
    }
    Ok(g)
}
