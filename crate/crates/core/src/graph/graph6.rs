//! graph6 codec.
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, otherwise `~` followed by
//! three bytes of 6 bits each. The upper triangle follows column by
//! column, `x(0,1) x(0,2) x(1,2) x(0,3) ...`, six bits per byte (most
//! significant first), each byte offset by 63 and the tail zero-padded.

use super::{check_order, Graph};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(2 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parse one graph6 record. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty record".into()));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte {pos} ({:?}) outside the range '?'..'~'",
            bytes[pos] as char
        )));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(Error::Graph6("8-byte length form is not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated length field".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(Error::Graph6(format!(
                "non-canonical 4-byte length for n={n}"
            )));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    check_order(n).map_err(|e| match e {
        Error::EmptyGraph => Error::Graph6("graph on 0 vertices".into()),
        other => other,
    })?;
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "n={n} needs {expected} edge bytes, found {}",
            body.len()
        )));
    }
    let pad = expected * 6 - nbits;
    if pad > 0 {
        let last = body[expected - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, path};

    /// Independent encoder: build the bit string as text, then chunk it.
    fn oracle_encode(g: &Graph) -> String {
        let n = g.order();
        let mut bitstr = String::new();
        for j in 1..n {
            for i in 0..j {
                bitstr.push(if g.has_edge(i, j) { '1' } else { '0' });
            }
        }
        while bitstr.len() % 6 != 0 {
            bitstr.push('0');
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bitstr.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn small_records() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.edge_count()), (1, 0));
        assert_eq!(parse_graph6("A_").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3).unwrap());
        assert_eq!(write_graph6(&complete(2).unwrap()), "A_");
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(write_graph6(&complete(3).unwrap()), "Bw");
    }

    #[test]
    fn matches_oracle_and_known_strings() {
        for n in 1..=12 {
            let g = path(n).unwrap();
            assert_eq!(write_graph6(&g), oracle_encode(&g));
        }
        // edges a-c, a-e, b-d, d-e
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(
            parse_graph6(">>graph6<<Bw\n").unwrap(),
            complete(3).unwrap()
        );
    }

    #[test]
    fn long_form_length() {
        let g = path(63).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("?"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("B"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("Bww"), Err(Error::Graph6(_))));
        // K_2 with a stray padding bit
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("A "), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("~"), Err(Error::Graph6(_))));
    }
}
