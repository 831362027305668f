//! graph6 encoding of simple graphs.
//!
//! Layout: a size prefix (one byte `n + 63` for `n <= 62`, `~` plus three
//! bytes up to 258047, `~~` plus six bytes beyond), followed by the upper
//! triangle of the adjacency matrix in column-major order
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte, each byte
//! offset by 63 and zero-padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(bad(format!("illegal character {:?}", b as char)))
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let read = |digits: &[u8]| -> Result<usize> {
        digits
            .iter()
            .try_fold(0usize, |n, &b| Ok((n << 6) | sextet(b)? as usize))
    };
    match bytes {
        [] => Err(bad("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated size prefix"));
            }
            let n = read(&rest[..6])?;
            if n <= 258047 {
                return Err(bad("non-canonical 8-byte size prefix"));
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated size prefix"));
            }
            let n = read(&rest[..3])?;
            if n <= 62 {
                return Err(bad("non-canonical 4-byte size prefix"));
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] => Ok((sextet(*b)? as usize, rest)),
    }
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Decodes one graph6 string; surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let (n, body) = decode_size(text.as_bytes())?;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() != nbytes {
        return Err(bad(format!(
            "expected {nbytes} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let (mut u, mut v) = (0usize, 1usize);
    for (i, &b) in body.iter().enumerate() {
        let x = sextet(b)?;
        for bit in (0..6).rev() {
            let k = i * 6 + (5 - bit);
            let set = (x >> bit) & 1 == 1;
            if k >= nbits {
                if set {
                    return Err(bad("nonzero padding bits"));
                }
                continue;
            }
            if set {
                edges.push((u, v));
            }
            u += 1;
            if u == v {
                u = 0;
                v += 1;
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}
