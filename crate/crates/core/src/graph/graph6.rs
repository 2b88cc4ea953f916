//! graph6 text codec.
//!
//! Layout: `N(n)` followed by the upper triangle of the adjacency matrix in
//! column-major order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six
//! bits per byte, most significant bit first, each byte offset by 63. The last
//! byte is zero-padded.

use super::{Graph, GraphError};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn push_n(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + OFFSET) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + OFFSET) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + OFFSET) as char);
        }
    }
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(8 + bits.div_ceil(6));
    push_n(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + OFFSET) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + OFFSET) as char);
    }
    out
}

fn sextet(b: u8) -> Result<u64, GraphError> {
    if (OFFSET..=126).contains(&b) {
        Ok((b - OFFSET) as u64)
    } else {
        Err(GraphError::Graph6(format!("byte {b:#04x} outside the printable range 63..=126")))
    }
}

fn parse_n(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let take = |count: usize, rest: &[u8]| -> Result<usize, GraphError> {
        if rest.len() < count {
            return Err(GraphError::Graph6("truncated size header".into()));
        }
        let mut n = 0u64;
        for &b in &rest[..count] {
            n = n << 6 | sextet(b)?;
        }
        Ok(n as usize)
    };
    match bytes {
        [] => Err(GraphError::Graph6("empty input".into())),
        [b'~', b'~', rest @ ..] => {
            let n = take(6, rest)?;
            if n <= 258_047 {
                return Err(GraphError::Graph6(format!("non-canonical 8-byte size header for n={n}")));
            }
            Ok((n, &rest[6..]))
        }
        [b'~', rest @ ..] => {
            let n = take(3, rest)?;
            if n <= 62 {
                return Err(GraphError::Graph6(format!("non-canonical 4-byte size header for n={n}")));
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] => Ok((sextet(*b)? as usize, rest)),
    }
}

/// Decodes one graph6 record. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn graph6_decode(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let (n, body) = parse_n(text.as_bytes())?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::Graph6(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    let mut pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    for &b in body {
        let v = sextet(b)?;
        for shift in (0..6).rev() {
            let bit = v >> shift & 1 == 1;
            if k < bits {
                let (i, j) = pairs.next().unwrap();
                if bit {
                    g.set(i, j, true);
                }
            } else if bit {
                return Err(GraphError::Graph6("nonzero padding bits".into()));
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // Reference strings produced by networkx.to_graph6_bytes.
    #[test]
    fn known_encodings() {
        assert_eq!(graph6_encode(&complete(3)), "Bw");
        assert_eq!(graph6_encode(&Graph::empty(1)), "@");
        assert_eq!(graph6_encode(&Graph::empty(0)), "?");
        assert_eq!(graph6_encode(&path(4)), "Ch");
        assert_eq!(graph6_encode(&cycle(5)), "Dhc");
        assert_eq!(graph6_encode(&complete_bipartite(2, 3)), "D]o");
        assert!(graph6_encode(&Graph::empty(63)).starts_with("~??~"));
        assert!(graph6_encode(&Graph::empty(64)).starts_with("~?@?"));
    }

    #[test]
    fn decode_known() {
        assert_eq!(graph6_decode("Bw").unwrap(), complete(3));
        assert_eq!(graph6_decode(">>graph6<<Dhc\n").unwrap(), cycle(5));
        assert_eq!(graph6_decode("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn malformed_inputs() {
        assert!(graph6_decode("").is_err());
        // K3 needs exactly one data byte
        assert!(graph6_decode("B").is_err());
        assert!(graph6_decode("Bww").is_err());
        // 'x' = 63+57 = 0b111001: the low three padding bits are not zero
        assert!(graph6_decode("Bx").is_err());
        assert!(graph6_decode("B\u{7f}").is_err());
        assert!(graph6_decode("~?").is_err());
        // n=5 written with a long header
        assert!(graph6_decode("~??D").is_err());
    }

    #[test]
    fn random_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let n = rng.random_range(0..=12);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
        }
    }

    #[test]
    fn large_roundtrip() {
        let g = path(100);
        let text = graph6_encode(&g);
        assert_eq!(graph6_decode(&text).unwrap(), g);
    }
}
