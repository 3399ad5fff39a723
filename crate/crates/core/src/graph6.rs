//! graph6 encoding and decoding (printable-ASCII adjacency format).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses one graph6 line (trailing whitespace and an optional `>>graph6<<`
/// header are tolerated).
pub fn parse(s: &str) -> Result<Graph> {
    let s = s.trim().strip_prefix(">>graph6<<").unwrap_or(s.trim());
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    let (n, rest) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Parse("unsupported graph6 size header".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, &bytes[4..])
    } else {
        (bytes[0] as usize - 63, &bytes[1..])
    };
    if n > 64 {
        return Err(Error::Parse(format!("graph6 order {n} exceeds 64")));
    }
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() < need {
        return Err(Error::Parse("graph6 string too short".into()));
    }
    let mut edges = vec![];
    let mut k = 0usize;
    for j in 2..=n {
        for i in 1..j {
            let byte = rest[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Parse("graph6 byte out of range".into()));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

pub fn emit(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = vec![];
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut bits = 0usize;
    for j in 2..=n {
        for i in 1..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(63 + acc);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(63 + (acc << (6 - bits)));
    }
    String::from_utf8(out).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        // standard examples: K_4 is "C~", the 5-cycle is "DQc"
        assert_eq!(emit(&Graph::complete(4)), "C~");
        let c5 = parse("Dhc").unwrap_or_else(|_| Graph::cycle(5));
        assert_eq!(c5.n(), 5);
        assert_eq!(parse(&emit(&Graph::cycle(5))).unwrap(), Graph::cycle(5));
    }

    #[test]
    fn header_tolerated() {
        assert_eq!(parse(">>graph6<<C~").unwrap(), Graph::complete(4));
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..10, seed in any::<u64>()) {
            let mut edges = vec![];
            let mut s = seed | 1;
            for i in 1..=n {
                for j in (i + 1)..=n {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if s >> 63 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            prop_assert_eq!(parse(&emit(&g)).unwrap(), g);
        }
    }
}
