//! Short-form graph6 encoding (n <= 62), bit-exact.
//!
//! First byte is `n + 63`; then the upper triangle of the adjacency matrix in
//! column order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed big-endian six
//! bits per byte, zero-padded, each six-bit group emitted as `group + 63`.

use crate::graph::Graph;
use thiserror::Error;

/// Largest order representable in short-form graph6.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte offset {offset}: byte {byte} outside graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("long-form graph6 (n > 62) is not supported")]
    LongForm,
    #[error("bad length for order {order}: expected {expected} bytes, got {got}")]
    BadLength {
        order: usize,
        expected: usize,
        got: usize,
    },
    #[error("trailing garbage at byte offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("order {order} exceeds the short-form graph6 limit of 62")]
    TooLarge { order: usize },
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one short-form graph6 line (without the trailing newline).
/// Padding bits are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first == 126 {
        return Err(Graph6Error::LongForm);
    }
    if !(63..=125).contains(&first) {
        return Err(Graph6Error::ByteOutOfRange {
            offset: 0,
            byte: first,
        });
    }
    let n = (first - 63) as usize;
    let expected = 1 + body_len(n);
    if bytes.len() < expected {
        return Err(Graph6Error::BadLength {
            order: n,
            expected,
            got: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingGarbage { offset: expected });
    }
    let mut bits = Vec::with_capacity(6 * body_len(n));
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange {
                offset: i + 1,
                byte: b,
            });
        }
        let group = b - 63;
        for shift in (0..6).rev() {
            bits.push(group >> shift & 1 == 1);
        }
    }
    Ok(Graph::from_upper_triangle_bits(n, &bits))
}

/// Encodes `g` as one short-form graph6 line (without the newline).
/// Padding bits are zero.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge { order: n });
    }
    let mut out = String::with_capacity(1 + body_len(n));
    out.push((n as u8 + 63) as char);
    let bits = g.upper_triangle_bits();
    for chunk in bits.chunks(6) {
        let mut group = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                group |= 1 << (5 - i);
            }
        }
        out.push((group + 63) as char);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;

    #[test]
    fn reference_values() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.n(), 2);
        assert_eq!(k2.edges(), vec![(0, 1)]);

        let e2 = parse_graph6("A?").unwrap();
        assert_eq!(e2.n(), 2);
        assert_eq!(e2.edge_count(), 0);

        // bits x(0,1)=1, x(0,2)=0, x(1,2)=1 -> path 0-1-2
        let p3 = parse_graph6("Bg").unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn encode_reference_values() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(to_graph6(&k2).unwrap(), "A_");
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&p3).unwrap(), "Bg");
        assert_eq!(to_graph6(&Graph::empty(0)).unwrap(), "?");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("~~~"), Err(Graph6Error::LongForm));
        assert_eq!(
            parse_graph6("B"),
            Err(Graph6Error::BadLength {
                order: 3,
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            parse_graph6("A_x"),
            Err(Graph6Error::TrailingGarbage { offset: 2 })
        );
        assert_eq!(
            parse_graph6("B+"),
            Err(Graph6Error::ByteOutOfRange {
                offset: 1,
                byte: b'+'
            })
        );
        let big = Graph::empty(63);
        assert_eq!(to_graph6(&big), Err(Graph6Error::TooLarge { order: 63 }));
    }

    #[test]
    fn padding_bits_ignored_on_input() {
        // "Bg" has one padding-adjacent group; flipping padding bits must not
        // change the graph ("Bh" sets a padding bit only).
        let a = parse_graph6("Bg").unwrap();
        let b = parse_graph6("Bh").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn roundtrip_exhaustive_small_graphs() {
        for n in 1..=8usize {
            for g in crate::search::generate_small_graphs(n).unwrap() {
                let line = to_graph6(&g).unwrap();
                assert_eq!(parse_graph6(&line).unwrap(), g, "line {line}");
            }
        }
    }

    proptest! {
        #[test]
        fn roundtrip_random_graphs(n in 0usize..20, seed: u64) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = crate::search::random_graph(n, 0.4, &mut rng);
            let line = to_graph6(&g).unwrap();
            let back = parse_graph6(&line).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(to_graph6(&back).unwrap(), line);
        }
    }
}
