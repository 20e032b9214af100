//! graph6 encoding.
//!
//! Each byte carries six bits plus 63. The header is `N(n)`; the body is the
//! upper triangle of the adjacency matrix in column order
//! `(0,1),(0,2),(1,2),(0,3),…`, big-endian within each six-bit group and
//! zero padded.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ORDER: u64 = 68_719_476_735;

pub fn encode_graph6(g: &Graph) -> String {
    let bytes = encode_bytes(g.n(), |i, j| g.has_edge(i, j));
    String::from_utf8(bytes).expect("graph6 is ASCII")
}

/// Encodes the graph on `n` vertices whose edge set is given by `adjacent(i, j)` for `i < j`.
pub(crate) fn encode_bytes(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Vec<u8> {
    assert!((n as u64) <= MAX_ORDER, "graph6 order limit");
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = header(n);
    out.reserve(bits.div_ceil(6));
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | adjacent(i, j) as u8;
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
    out
}

fn header(n: usize) -> Vec<u8> {
    let n = n as u64;
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        vec![126, (n >> 12 & 63) as u8 + 63, (n >> 6 & 63) as u8 + 63, (n & 63) as u8 + 63]
    } else {
        let mut out = vec![126, 126];
        for shift in (0..6).rev() {
            out.push((n >> (6 * shift) & 63) as u8 + 63);
        }
        out
    }
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!(
            "byte {} at offset {pos} is outside the printable range 63..126",
            bytes[pos]
        )));
    }
    let (n, body) = parse_header(bytes)?;
    if n == 0 {
        return Err(Error::Graph6("graph on zero vertices".into()));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    match body.len().cmp(&expected) {
        std::cmp::Ordering::Less => {
            return Err(Error::Graph6(format!(
                "truncated body: {} bytes, expected {expected}",
                body.len()
            )))
        }
        std::cmp::Ordering::Greater => {
            return Err(Error::Graph6(format!(
                "trailing garbage: {} extra bytes",
                body.len() - expected
            )))
        }
        std::cmp::Ordering::Equal => {}
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in bits..expected * 6 {
        if bit(k) {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    let mut adjacency = vec![Vec::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
            k += 1;
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_adjacency(adjacency))
}

fn parse_header(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let six = |b: &[u8]| b.iter().fold(0u64, |acc, &x| acc << 6 | (x - 63) as u64);
    match bytes {
        [] => Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("malformed header: truncated 8-byte order".into()));
            }
            let n = six(&rest[..6]);
            if n <= 258_047 {
                return Err(Error::Graph6(format!("malformed header: non-minimal order {n}")));
            }
            Ok((n as usize, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("malformed header: truncated 4-byte order".into()));
            }
            let n = six(&rest[..3]);
            if n <= 62 {
                return Err(Error::Graph6(format!("malformed header: non-minimal order {n}")));
            }
            Ok((n as usize, &rest[3..]))
        }
        [first, rest @ ..] => Ok(((first - 63) as usize, rest)),
    }
}
