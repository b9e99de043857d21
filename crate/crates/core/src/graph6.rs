//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column-major order, six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::{Graph, VERTEX_CAP};

const BIAS: u8 = 63;

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn g6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(BIAS + n as u8);
    } else {
        out.push(126);
        out.push(BIAS + ((n >> 12) & 63) as u8);
        out.push(BIAS + ((n >> 6) & 63) as u8);
        out.push(BIAS + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(BIAS + acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(BIAS + (acc << (6 - k)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn g6_decode(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let (&first, rest) = bytes.split_first().ok_or_else(|| bad("empty input"))?;
    let check = |b: u8| -> Result<u8> {
        if (BIAS..=BIAS + 63).contains(&b) {
            Ok(b - BIAS)
        } else {
            Err(bad(format!("byte {b:#04x} outside the graph6 range")))
        }
    };
    let (n, payload) = if first == 126 {
        if rest.first() == Some(&126) {
            return Err(bad("header for n >= 258048 is not supported"));
        }
        if rest.len() < 3 {
            return Err(bad("truncated size header"));
        }
        let n = ((check(rest[0])? as usize) << 12)
            | ((check(rest[1])? as usize) << 6)
            | check(rest[2])? as usize;
        (n, &rest[3..])
    } else {
        (check(first)? as usize, rest)
    };
    if n > VERTEX_CAP {
        return Err(Error::CapExceeded { n, cap: VERTEX_CAP });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if payload.len() < need {
        return Err(bad(format!("payload has {} bytes, need {need}", payload.len())));
    }
    if payload.len() > need {
        return Err(bad(format!("{} trailing bytes", payload.len() - need)));
    }
    let mut g = Graph::empty(n)?;
    let mut idx = 0;
    let get = |idx: usize| -> Result<bool> {
        let byte = check(payload[idx / 6])?;
        Ok(byte >> (5 - idx % 6) & 1 == 1)
    };
    for j in 1..n {
        for i in 0..j {
            if get(idx)? {
                g.add_edge(i, j)?;
            }
            idx += 1;
        }
    }
    while idx < need * 6 {
        if get(idx)? {
            return Err(bad("nonzero padding bits"));
        }
        idx += 1;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_bw() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(g6_encode(&k3), "Bw");
    }

    #[test]
    fn single_vertex_and_empty() {
        assert_eq!(g6_encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(g6_encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(g6_decode("@").unwrap(), Graph::empty(1).unwrap());
    }

    #[test]
    fn reference_string_from_petgraph() {
        // Edges a-c, a-e, b-d, d-e on five vertices encode to "DQc".
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g6_encode(&g), "DQc");
        assert_eq!(g6_decode("DQc").unwrap(), g);
    }

    #[test]
    fn long_header_for_63_and_64() {
        for n in [63, 64] {
            let mut g = Graph::empty(n).unwrap();
            g.add_edge(0, n - 1).unwrap();
            g.add_edge(5, 17).unwrap();
            let s = g6_encode(&g);
            assert!(s.starts_with('~'));
            assert_eq!(g6_decode(&s).unwrap(), g);
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(g6_decode("").is_err());
        assert!(g6_decode("B").is_err(), "missing payload");
        assert!(g6_decode("Bww").is_err(), "trailing garbage");
        assert!(g6_decode("Bx").is_err(), "nonzero padding");
        assert!(g6_decode("B\x01").is_err(), "byte out of range");
        assert!(g6_decode("~??").is_err(), "truncated long header");
        assert!(matches!(g6_decode("~?@@"), Err(Error::CapExceeded { n: 65, .. })));
    }
}
