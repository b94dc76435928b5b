//! graph6 and edge-list text formats.
//!
//! graph6 follows the usual encoding: a size header of one, four or eight
//! bytes, then the upper triangle of the adjacency matrix in column order
//! (`x(0,1) x(0,2) x(1,2) x(0,3) …`), six bits per byte, each byte offset by
//! 63. The optional `>>graph6<<` header is accepted on input.

use super::Graph;
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const MAX_N: u64 = (1 << 36) - 1;

fn push_size(out: &mut Vec<u8>, n: u64) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    }
}

/// graph6 encoding of `g`, without a trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_size(&mut out, n as u64);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses one graph6 record. Surrounding whitespace is ignored.
pub fn from_graph6(record: &str) -> Result<Graph> {
    let mut s = record.trim().as_bytes();
    if let Some(rest) = s.strip_prefix(b">>graph6<<") {
        s = rest;
    }
    let bad = |msg: &str| Error::parse(1, msg);
    match s.first() {
        None => return Err(bad("empty graph6 record")),
        Some(b':') => return Err(bad("sparse6 records are not supported")),
        Some(b'&') => return Err(bad("digraph6 records are not supported")),
        _ => {}
    }
    if let Some(&c) = s.iter().find(|&&c| !(OFFSET..=126).contains(&c)) {
        return Err(bad(&format!("byte {c:#04x} outside the graph6 range")));
    }
    let six = |c: u8| (c - OFFSET) as u64;
    let (n, body) = if s[0] != 126 {
        (six(s[0]), &s[1..])
    } else if s.len() >= 2 && s[1] != 126 {
        if s.len() < 4 {
            return Err(bad("truncated size header"));
        }
        ((six(s[1]) << 12) | (six(s[2]) << 6) | six(s[3]), &s[4..])
    } else {
        if s.len() < 8 {
            return Err(bad("truncated size header"));
        }
        (s[2..8].iter().fold(0, |acc, &c| (acc << 6) | six(c)), &s[8..])
    };
    if n > MAX_N {
        return Err(bad("vertex count too large"));
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(&format!("expected {expected} data bytes for n = {n}, found {}", body.len())));
    }
    let bit = |k: usize| (six(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    for k in nbits..expected * 6 {
        if bit(k) {
            return Err(bad("nonzero padding bits"));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Splits a graph6 stream into records, one per nonempty line, numbered
/// from zero.
pub fn graph6_records(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().map(str::trim).filter(|l| !l.is_empty()).enumerate()
}

/// Edge-list text: the vertex count on the first line, then one `u v` pair
/// per line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses edge-list text. Blank lines and lines starting with `#` are
/// skipped.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines.next().ok_or_else(|| Error::parse(1, "missing vertex count"))?;
    let n: usize = header.parse().map_err(|_| Error::parse(first, format!("bad vertex count `{header}`")))?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse(line, "expected `u v`"));
        }
        let parse = |t: &str| t.parse::<usize>().map_err(|_| Error::parse(line, format!("bad vertex `{t}`")));
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        for w in [u, v] {
            if w >= n {
                return Err(Error::parse(line, format!("vertex {w} out of range for n = {n}")));
            }
        }
        if u == v {
            return Err(Error::parse(line, format!("loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

/// Reads either format: edge-list if the first meaningful line is a bare
/// integer, otherwise the first graph6 record.
pub fn from_text(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    if !first.is_empty() && first.bytes().all(|b| b.is_ascii_digit()) {
        from_edge_list(text)
    } else {
        from_graph6(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen, sylvester};
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        // a--c, a--e, b--d, d--e
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&petersen()), "IheA@GUAo");
        assert_eq!(to_graph6(&complete(4).unwrap()), "C~");
    }

    #[test]
    fn large_size_headers() {
        let g = Graph::from_edges(100, [(0, 99)]).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
        let mut header = Vec::new();
        push_size(&mut header, 300_000);
        // 300000 in base 64: 0, 0, 1, 9, 15, 32
        assert_eq!(header, [126, 126, 63, 63, 64, 72, 78, 95]);
        let header = String::from_utf8(header).unwrap();
        assert!(from_graph6(&header).is_err(), "header without adjacency data");
    }

    #[test]
    fn cycle_round_trip_and_header() {
        let c5 = cycle(5).unwrap();
        assert_eq!(from_graph6(&to_graph6(&c5)).unwrap(), c5);
        assert_eq!(from_graph6(&format!(">>graph6<<{}\n", to_graph6(&c5))).unwrap(), c5);
    }

    #[test]
    fn malformed_graph6() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6(":Fa@x^").is_err());
        assert!(from_graph6("D Qc").is_err());
        // one byte short
        assert!(from_graph6("DQ").is_err());
        // padding bit set: n = 2 has one data bit, so the low five must be zero
        assert!(from_graph6("A_").is_ok());
        assert!(from_graph6("A`").is_err());
        assert!(from_graph6("~?").is_err());
    }

    #[test]
    fn edge_list_examples() {
        let g = from_edge_list("3\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert!(from_edge_list("3\n0 3\n").is_err());
        assert!(from_edge_list("3\n0 1 2\n").is_err());
        assert!(from_edge_list("x\n").is_err());
        assert!(from_edge_list("").is_err());
        let s = sylvester();
        assert_eq!(from_edge_list(&to_edge_list(&s)).unwrap(), s);
    }

    #[test]
    fn from_text_detects_format() {
        let p = petersen();
        assert_eq!(from_text(&to_edge_list(&p)).unwrap(), p);
        assert_eq!(from_text(&format!("{}\n", to_graph6(&p))).unwrap(), p);
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..=64, raw in proptest::collection::vec((0usize..64, 0usize..64), 0..300)) {
            let edges: Vec<_> = raw.into_iter().filter(|&(u, v)| u < n && v < n && u != v).collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let text = to_graph6(&g);
            prop_assert_eq!(from_graph6(&text).unwrap(), g);
        }
    }
}
