//! The graph6 line format: one printable ASCII string per graph, upper
//! triangle of the adjacency matrix packed six bits per byte.
//!
//! Orders 0..=62 use a single header byte `63 + n`; orders 63..=258047 use
//! `126` followed by an 18-bit big-endian value in three bytes. The body
//! lists the bits `x(0,1), x(0,2), x(1,2), x(0,3), ...` column by column,
//! most significant bit of each six-bit group first, zero-padded at the end.
//! The parser is strict: every byte must be printable graph6 data, padding
//! bits must be zero, and nothing may follow the final group. Errors carry
//! the byte offset at which the line went wrong.

use crate::graph::{Graph, MAX_ORDER};

/// Errors from [`parse_graph6`], each locating the offending byte.
#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("malformed length header at byte {offset}")]
    MalformedHeader { offset: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("line ends at byte {offset} before the expected bit count")]
    Truncated { offset: usize },
    #[error("trailing garbage after the expected bit count at byte {offset}")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits in the final group at byte {offset}")]
    NonzeroPadding { offset: usize },
    #[error("order {order} is outside the supported range 1..={MAX_ORDER}")]
    OrderOutOfRange { order: usize },
}

fn data_byte(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        None => Err(Graph6Error::Truncated { offset }),
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(Graph6Error::NonPrintable { offset, byte: b }),
    }
}

/// Decodes one graph6 line. A trailing `\n` or `\r\n` is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line
        .as_bytes()
        .strip_suffix(b"\n")
        .map(|b| b.strip_suffix(b"\r").unwrap_or(b))
        .unwrap_or(line.as_bytes());
    if bytes.is_empty() {
        return Err(Graph6Error::MalformedHeader { offset: 0 });
    }
    let (n, header_len) = match bytes[0] {
        126 => {
            if bytes.get(1) == Some(&126) {
                // The 36-bit form only encodes orders beyond 258047.
                let mut order: usize = 0;
                for i in 0..6 {
                    order = order << 6 | data_byte(bytes, 2 + i)? as usize;
                }
                return Err(Graph6Error::OrderOutOfRange { order });
            }
            let mut n: usize = 0;
            for i in 0..3 {
                n = n << 6 | data_byte(bytes, 1 + i)? as usize;
            }
            if n < 63 {
                // Orders below 63 must use the one-byte header.
                return Err(Graph6Error::MalformedHeader { offset: 1 });
            }
            (n, 4)
        }
        b @ 63..=125 => ((b - 63) as usize, 1),
        b => return Err(Graph6Error::NonPrintable { offset: 0, byte: b }),
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::OrderOutOfRange { order: n });
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let mut g = Graph::empty(n);
    let mut group = 0u64;
    let mut t = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            if t % 6 == 0 {
                group = data_byte(bytes, header_len + t / 6)?;
            }
            if group >> (5 - t % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            t += 1;
            if t == nbits {
                break 'outer;
            }
        }
    }
    if nbits > 0 && nbits % 6 != 0 && group & ((1 << (6 - nbits % 6)) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding {
            offset: header_len + nbytes - 1,
        });
    }
    if bytes.len() > header_len + nbytes {
        return Err(Graph6Error::TrailingGarbage {
            offset: header_len + nbytes,
        });
    }
    Ok(g)
}

/// Encodes a graph as a graph6 line without a trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + (n >> 12 & 63) as u8);
        out.push(63 + (n >> 6 & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
