//! The graph6 text format for graphs on up to 62 vertices: one byte `n+63`,
//! then the upper triangle of the adjacency matrix in column-major order,
//! six bits per byte, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= 62);
    let mut bytes = vec![(n as u8) + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are ascii")
}

pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::InvalidGraph6("empty string".into()));
    }
    if bytes[0] == 126 {
        return Err(Error::InvalidGraph6(
            "multi-byte sizes (n > 62) not supported".into(),
        ));
    }
    if bytes[0] < 63 {
        return Err(Error::InvalidGraph6(format!(
            "invalid size byte {}",
            bytes[0]
        )));
    }
    let n = (bytes[0] - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    if bytes.len() != 1 + needed {
        return Err(Error::InvalidGraph6(format!(
            "expected {} data bytes for n={}, got {}",
            needed,
            n,
            bytes.len() - 1
        )));
    }
    let mut g = Graph::new(n)?;
    let mut idx = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + idx / 6];
            if byte < 63 || byte > 126 {
                return Err(Error::InvalidGraph6(format!("invalid data byte {byte}")));
            }
            let bit = (byte - 63) >> (5 - (idx % 6)) & 1;
            if bit == 1 {
                g.add_edge(u, v)?;
            }
            idx += 1;
            if idx == bit_count {
                break 'outer;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_vector() {
        // Five vertices, edges {0,2},{0,4},{1,3},{3,4} encode as "DQc".
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn tiny_graphs() {
        let empty = Graph::new(0).unwrap();
        assert_eq!(encode(&empty), "?");
        assert_eq!(decode("?").unwrap(), empty);
        let k1 = Graph::new(1).unwrap();
        assert_eq!(encode(&k1), "@");
        assert_eq!(decode("@").unwrap(), k1);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(decode(&encode(&k2)).unwrap(), k2);
    }

    #[test]
    fn rejects_garbage() {
        assert!(decode("").is_err());
        assert!(decode("~~").is_err());
        assert!(decode("D").is_err());
        assert!(decode("DQcQ").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..12, seed in any::<u64>()) {
            let mut g = Graph::new(n).unwrap();
            let mut state = seed | 1;
            for u in 0..n {
                for v in (u + 1)..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 63 == 1 {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let encoded = encode(&g);
            prop_assert!(encoded.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(decode(&encoded).unwrap(), g);
        }
    }
}
