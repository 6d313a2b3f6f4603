//! graph6 records, as written by nauty's `geng`.
//!
//! A record is `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed
//! six bits per byte, most significant first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

const MIN_BYTE: u8 = 63;
const MAX_BYTE: u8 = 126;

/// Decodes one record. A leading `>>graph6<<` header and trailing line
/// terminator are ignored; byte offsets in errors refer to the record.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let record = line.strip_prefix(HEADER).unwrap_or(line);
    let record = record.trim_end_matches(['\n', '\r']);
    let bytes = record.as_bytes();
    if bytes.is_empty() {
        return Err(Error::format(0, "empty graph6 record"));
    }
    if let Some(pos) = bytes
        .iter()
        .position(|b| !(MIN_BYTE..=MAX_BYTE).contains(b))
    {
        return Err(Error::format(
            pos,
            format!("byte 0x{:02x} outside 63..126", bytes[pos]),
        ));
    }
    let (n, header_len) = decode_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < need {
        return Err(Error::format(
            bytes.len(),
            format!(
                "truncated: {n} vertices need {need} data bytes, found {}",
                body.len()
            ),
        ));
    }
    if body.len() > need {
        return Err(Error::format(
            header_len + need,
            "trailing bytes after adjacency data",
        ));
    }
    let mut g = Graph::empty(n);
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[t / 6] - MIN_BYTE;
            if byte >> (5 - t % 6) & 1 == 1 {
                g.set(i, j, true);
            }
            t += 1;
        }
    }
    Ok(g)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let group = |from: usize, count: usize| -> Result<usize> {
        let chunk = bytes
            .get(from..from + count)
            .ok_or_else(|| Error::format(bytes.len(), "truncated vertex count"))?;
        Ok(chunk
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - MIN_BYTE) as usize))
    };
    match bytes {
        [MAX_BYTE, MAX_BYTE, ..] => Ok((group(2, 6)?, 8)),
        [MAX_BYTE, ..] => Ok((group(1, 3)?, 4)),
        [b, ..] => Ok(((b - MIN_BYTE) as usize, 1)),
        [] => Err(Error::format(0, "empty graph6 record")),
    }
}

/// Encodes a graph as a graph6 record without header or newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + MIN_BYTE);
    } else if n <= 258_047 {
        out.push(MAX_BYTE);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + MIN_BYTE));
    } else {
        out.extend([MAX_BYTE, MAX_BYTE]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + MIN_BYTE));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + MIN_BYTE);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + MIN_BYTE);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::{build_class, ClassSpec};
    use proptest::prelude::*;

    #[test]
    fn small_records() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.edge_count()), (2, 1));
        let k4 = parse_graph6("C~").unwrap();
        assert!(k4.is_complete() && k4.order() == 4);
        let e3 = parse_graph6("B?").unwrap();
        assert_eq!((e3.order(), e3.edge_count()), (3, 0));
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn header_and_line_endings() {
        assert_eq!(
            parse_graph6(">>graph6<<C~\r\n").unwrap(),
            parse_graph6("C~").unwrap()
        );
    }

    #[test]
    fn bit_order_is_column_major() {
        // C4 as 0-1-2-3-0: bits x01 x02 x12 x03 x13 x23 = 1 0 1 1 0 1
        let c4 = build_class(&ClassSpec::Cycle(4)).unwrap();
        assert_eq!(encode_graph6(&c4), "Cl");
        assert_eq!(parse_graph6("Cl").unwrap(), c4);
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_graph6("C~ ") {
            Err(Error::Format { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_graph6("D~"), Err(Error::Format { .. })));
        assert!(matches!(parse_graph6("A__"), Err(Error::Format { .. })));
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("~?").is_err());
    }

    #[test]
    fn long_order_prefix() {
        let p = build_class(&ClassSpec::Path(70)).unwrap();
        let s = encode_graph6(&p);
        assert!(s.starts_with("~?@E"));
        assert_eq!(parse_graph6(&s).unwrap(), p);
    }

    proptest! {
        #[test]
        fn random_graphs_round_trip(n in 0usize..20, seed in any::<u64>()) {
            let mut state = seed;
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 63 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let s = encode_graph6(&g);
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
            prop_assert_eq!(encode_graph6(&parse_graph6(&s).unwrap()), s);
        }
    }
}
