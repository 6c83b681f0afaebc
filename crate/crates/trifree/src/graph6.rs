//! graph6 text encoding of labeled graphs (short form, up to 62 vertices).
//!
//! One graph per line, no header. The encoding is a bijection on labeled
//! graphs, so decode(encode(g)) reproduces g bit-exactly.

use thiserror::Error;

use crate::graph::Graph;

const OFFSET: u8 = 63;
const MAX_N: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("graph6 short form supports at most {MAX_N} vertices, got {0}")]
    TooLarge(usize),
    #[error("empty graph6 line")]
    Empty,
    #[error("unsupported or malformed header byte {0:#04x}")]
    BadHeader(u8),
    #[error("invalid payload byte {byte:#04x} at position {pos}")]
    BadByte { byte: u8, pos: usize },
    #[error("payload has {got} bytes, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("nonzero padding bits")]
    BadPadding,
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2 + 5) / 6
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > MAX_N {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(OFFSET + n as u8);
    // upper triangle column-wise: x(0,1), x(0,2), x(1,2), x(0,3), ...
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(OFFSET + (acc << (6 - nbits)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end().as_bytes();
    let (&header, payload) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if !(OFFSET..=OFFSET + MAX_N as u8).contains(&header) {
        return Err(Graph6Error::BadHeader(header));
    }
    let n = (header - OFFSET) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = payload_len(n);
    if payload.len() != expected {
        return Err(Graph6Error::BadLength {
            expected,
            got: payload.len(),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = payload[bit / 6];
            if !(OFFSET..=OFFSET + 63).contains(&byte) {
                return Err(Graph6Error::BadByte {
                    byte,
                    pos: bit / 6 + 1,
                });
            }
            if (byte - OFFSET) >> (5 - bit % 6) & 1 != 0 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    if nbits > 0 {
        let last = payload[expected - 1];
        if !(OFFSET..=OFFSET + 63).contains(&last) {
            return Err(Graph6Error::BadByte {
                byte: last,
                pos: expected,
            });
        }
        let pad = expected * 6 - nbits;
        if (last - OFFSET) & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::BadPadding);
        }
    }
    Ok(Graph::from_edge_list(n, &edges).expect("decoded edges are in range"))
}
