//! graph6 encoding: the line-oriented ASCII interchange format used by
//! nauty, geng, and most graph databases.
//!
//! A line is N(n) followed by the upper adjacency triangle in column-major
//! order, packed six bits per byte with 63 added to keep everything
//! printable. Orders up to 62 use a single length byte; 63 and 64 use the
//! long form `~` + three bytes. Larger orders exist in the format but not
//! in this crate.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG_FORM: u8 = 126;
const HEADER: &str = ">>graph6<<";

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(LONG_FORM);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn read_graph6(line: &str) -> Result<Graph> {
    let trimmed = line.trim_end();
    let (payload, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (trimmed, 0),
    };
    let bytes = payload.as_bytes();
    let fail = |offset: usize, reason: String| Error::Graph6 { offset: base + offset, reason };

    if bytes.is_empty() {
        return Err(fail(0, "empty line".into()));
    }
    for (k, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=LONG_FORM).contains(&b) {
            return Err(fail(k, format!("byte 0x{b:02x} outside the graph6 alphabet")));
        }
    }

    let (n, data_start) = if bytes[0] == LONG_FORM {
        if bytes.len() >= 2 && bytes[1] == LONG_FORM {
            return Err(fail(1, "eight-byte order form exceeds the supported range".into()));
        }
        if bytes.len() < 4 {
            return Err(fail(bytes.len(), "truncated long-form order".into()));
        }
        let n = (usize::from(bytes[1] - OFFSET) << 12)
            | (usize::from(bytes[2] - OFFSET) << 6)
            | usize::from(bytes[3] - OFFSET);
        (n, 4)
    } else {
        (usize::from(bytes[0] - OFFSET), 1)
    };

    if n == 0 {
        return Err(fail(0, "graph of order zero".into()));
    }
    if n > 64 {
        return Err(fail(0, format!("order {n} exceeds the supported maximum of 64")));
    }

    let total_bits = n * (n - 1) / 2;
    let need = total_bits.div_ceil(6);
    let have = bytes.len() - data_start;
    if have < need {
        return Err(fail(
            bytes.len(),
            format!("truncated adjacency data: need {need} bytes, found {have}"),
        ));
    }
    if have > need {
        return Err(fail(data_start + need, "trailing data after adjacency bits".into()));
    }

    let mut g = Graph::empty(n)?;
    let mut idx = 0usize;
    'cols: for j in 1..n {
        for i in 0..j {
            let byte = data_start + idx / 6;
            let bit = (bytes[byte] - OFFSET) >> (5 - idx % 6) & 1;
            if bit == 1 {
                g.add_edge_unchecked(i, j);
            }
            idx += 1;
            if idx == total_bits {
                break 'cols;
            }
        }
    }
    // padding bits must be zero
    for k in total_bits..need * 6 {
        let byte = data_start + k / 6;
        if (bytes[byte] - OFFSET) >> (5 - k % 6) & 1 == 1 {
            return Err(fail(byte, "nonzero padding bit".into()));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn known_strings() {
        let k3 = Graph::family(Family::Complete, 3).unwrap();
        assert_eq!(write_graph6(&k3), "Bw");
        let k4 = Graph::family(Family::Complete, 4).unwrap();
        assert_eq!(write_graph6(&k4), "C~");
        let p4 = Graph::family(Family::Path, 4).unwrap();
        assert_eq!(write_graph6(&p4), "Ch");
    }

    #[test]
    fn roundtrip_families_and_long_form() {
        for n in [1, 2, 5, 13, 40, 62, 63, 64] {
            for fam in [Family::Star, Family::Path, Family::Complete] {
                if n < fam.min_vertices() {
                    continue;
                }
                let g = Graph::family(fam, n).unwrap();
                let s = write_graph6(&g);
                assert_eq!(read_graph6(&s).unwrap(), g, "{fam:?} on {n}");
                if n >= 63 {
                    assert!(s.starts_with('~'));
                }
            }
        }
    }

    #[test]
    fn header_is_tolerated() {
        let g = read_graph6(">>graph6<<Bw").unwrap();
        assert_eq!(g, Graph::family(Family::Complete, 3).unwrap());
        assert_eq!(read_graph6("Bw\n").unwrap().n(), 3);
    }

    #[test]
    fn errors_carry_offsets() {
        match read_graph6("B w") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected alphabet error, got {other:?}"),
        }
        match read_graph6("D") {
            Err(Error::Graph6 { offset, reason }) => {
                assert_eq!(offset, 1);
                assert!(reason.contains("truncated"));
            }
            other => panic!("expected truncation error, got {other:?}"),
        }
        match read_graph6("Bww") {
            Err(Error::Graph6 { offset, reason }) => {
                assert_eq!(offset, 2);
                assert!(reason.contains("trailing"));
            }
            other => panic!("expected trailing-data error, got {other:?}"),
        }
        match read_graph6(">>graph6<<B w") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 11),
            other => panic!("expected alphabet error, got {other:?}"),
        }
        assert!(matches!(read_graph6(""), Err(Error::Graph6 { .. })));
        assert!(matches!(read_graph6("?"), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn padding_bits_must_be_zero() {
        // K_3 is "Bw" = 111 000; flip a padding bit: 111100 = 60 -> '{'
        let bad = format!("B{}", char::from(60 + 63));
        match read_graph6(&bad) {
            Err(Error::Graph6 { offset, reason }) => {
                assert_eq!(offset, 1);
                assert!(reason.contains("padding"));
            }
            other => panic!("expected padding error, got {other:?}"),
        }
    }

    #[test]
    fn roundtrip_every_small_class() {
        use crate::enumerate::{enumerate_connected, GraphFilter};
        for n in 1..=6 {
            for g in enumerate_connected(n, GraphFilter::default()).unwrap() {
                let s = write_graph6(&g);
                assert_eq!(read_graph6(&s).unwrap(), g);
            }
        }
    }
}
