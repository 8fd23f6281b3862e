//! graph6 encoding: order header, then the upper triangle read column by
//! column, packed six bits per printable byte.

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {0:#04x} at offset {1} is outside the graph6 range")]
    BadByte(u8, usize),
    #[error("expected {expected} data bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("order {0} exceeds the supported range")]
    TooLarge(u64),
    #[error("padding bits are not zero")]
    Padding,
}

const MAX_ORDER: u64 = 68_719_476_735;

fn encode_order(n: usize, out: &mut Vec<u8>) {
    let n = n as u64;
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend(*b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let sextet = |i: usize| -> Result<u64, Graph6Error> {
        let b = *bytes.get(i).ok_or(Graph6Error::Length { expected: i + 1, found: bytes.len() })?;
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte(b, i));
        }
        Ok((b - 63) as u64)
    };
    let (n, start) = if bytes[0] != b'~' {
        (sextet(0)?, 1)
    } else if bytes.get(1) != Some(&b'~') {
        ((1..4).try_fold(0u64, |acc, i| Ok::<_, Graph6Error>(acc << 6 | sextet(i)?))?, 4)
    } else {
        ((2..8).try_fold(0u64, |acc, i| Ok::<_, Graph6Error>(acc << 6 | sextet(i)?))?, 8)
    };
    if n > MAX_ORDER || n > (usize::MAX >> 8) as u64 {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let data = &bytes[start.min(bytes.len())..];
    if data.len() != expected {
        return Err(Graph6Error::Length { expected, found: data.len() });
    }
    let mut b = GraphBuilder::new(n);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(start + idx / 6)?;
            if byte >> (5 - idx % 6) & 1 == 1 {
                b.add_edge(i, j);
            }
            idx += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = sextet(start + expected - 1)?;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding);
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        let k2 = Graph::complete(2);
        assert_eq!(encode(&k2), "A_");
        assert_eq!(decode("A_").unwrap(), k2);
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::cycle(5)), "Dhc");
        assert!(encode(&Graph::empty(63)).starts_with("~??~"));
    }

    #[test]
    fn round_trip_large_order() {
        let g = Graph::cycle(100);
        assert_eq!(decode(&encode(&g)).unwrap(), g);
    }

    #[test]
    fn malformed() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("A"), Err(Graph6Error::Length { expected: 1, found: 0 }));
        assert_eq!(decode("A\x20"), Err(Graph6Error::BadByte(0x20, 1)));
        assert_eq!(decode("A`"), Err(Graph6Error::Padding));
    }
}
