//! graph6 and edge-list text formats, plus corpus file reading.

use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order expressible with the 4-byte size prefix.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

/// Encodes a graph as graph6 (no header, no trailing newline).
pub fn emit_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::Domain(format!(
            "graph6 output supports at most {GRAPH6_MAX_ORDER} vertices, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(out)
}

pub fn emit_graph6_string(g: &Graph) -> Result<String> {
    // graph6 bytes are always printable ASCII
    emit_graph6(g).map(|b| String::from_utf8(b).expect("graph6 is ASCII"))
}

/// Decodes one graph6 record. Leading/trailing whitespace is not accepted;
/// callers strip line terminators.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let byte = |i: usize| -> Result<u8> {
        let b = *text.get(i).ok_or_else(|| g6_err(i, "unexpected end of input"))?;
        if !(63..=126).contains(&b) {
            return Err(g6_err(i, format!("byte {b:#04x} outside the graph6 range 63..=126")));
        }
        Ok(b - 63)
    };

    let (n, mut pos) = match text.first() {
        None => return Err(g6_err(0, "empty input")),
        Some(&126) => {
            if text.get(1) == Some(&126) {
                return Err(g6_err(1, format!("orders above {GRAPH6_MAX_ORDER} are not supported")));
            }
            let mut n = 0usize;
            for i in 1..4 {
                n = (n << 6) | byte(i)? as usize;
            }
            if n <= 62 {
                return Err(g6_err(0, format!("non-canonical long length prefix for n={n}")));
            }
            (n, 4)
        }
        Some(_) => (byte(0)? as usize, 1),
    };

    let bits = n * n.saturating_sub(1) / 2;
    let body = bits.div_ceil(6);
    if text.len() < pos + body {
        return Err(g6_err(text.len(), format!("expected {body} adjacency bytes for n={n}")));
    }
    if text.len() > pos + body {
        return Err(g6_err(pos + body, "trailing bytes after adjacency data"));
    }

    let mut rows = vec![FixedBitSet::with_capacity(n); n];
    let (mut u, mut v) = (0usize, 1usize);
    for k in 0..body {
        let group = byte(pos)?;
        for b in (0..6).rev() {
            let idx = k * 6 + (5 - b);
            let set = (group >> b) & 1 == 1;
            if idx >= bits {
                if set {
                    return Err(g6_err(pos, "padding bit set beyond the upper triangle"));
                }
                continue;
            }
            if set {
                rows[u].insert(v);
                rows[v].insert(u);
            }
            u += 1;
            if u == v {
                u = 0;
                v += 1;
            }
        }
        pos += 1;
    }
    Ok(Graph::from_rows(rows))
}

/// Parses the edge-list format: `n m`, then `m` lines `u v`; `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |line: usize, message: String| Error::EdgeList { line, message };
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing \"n m\" header".into()))?;
    let nums = parse_pair(header).map_err(|m| err(hline, m))?;
    let (n, m) = nums;

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, l) = lines
            .next()
            .ok_or_else(|| err(hline, format!("header promises {m} edges, found {}", edges.len())))?;
        let e = parse_pair(l).map_err(|msg| err(line, msg))?;
        edges.push((line, e));
    }
    if let Some((line, _)) = lines.next() {
        return Err(err(line, format!("more than the {m} edges promised by the header")));
    }

    let mut g_edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (line, (u, v)) in edges {
        if u >= n || v >= n {
            return Err(err(line, format!("vertex out of range for n={n}")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
        g_edges.push((u, v));
    }
    Graph::from_edges(n, g_edges)
}

fn parse_pair(line: &str) -> std::result::Result<(usize, usize), String> {
    let mut it = line.split_whitespace();
    let mut next = || -> std::result::Result<usize, String> {
        let tok = it.next().ok_or_else(|| "expected two integers".to_string())?;
        tok.parse().map_err(|_| format!("invalid integer {tok:?}"))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err("expected exactly two integers".into());
    }
    Ok((a, b))
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// One graph read from a corpus file.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub line: usize,
    pub graph6: String,
    pub graph: Graph,
}

/// Opens a file, decompressing transparently when the name ends in `.gz`.
pub fn open_text(path: &Path) -> Result<Box<dyn BufRead>> {
    let file = File::open(path).map_err(|source| Error::Io { path: path.into(), source })?;
    let reader: Box<dyn Read> = if path.extension().is_some_and(|e| e == "gz") {
        Box::new(flate2::read::MultiGzDecoder::new(file))
    } else {
        Box::new(file)
    };
    Ok(Box::new(BufReader::new(reader)))
}

/// Reads a graph6 corpus: one graph per line, blank lines skipped.
pub fn read_graph6_corpus(path: &Path) -> Result<Vec<CorpusEntry>> {
    let reader = open_text(path)?;
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|source| Error::Io { path: path.into(), source })?;
        let rec = line.trim_end_matches(['\r', '\n']);
        if rec.is_empty() {
            continue;
        }
        let graph = parse_graph6(rec.as_bytes()).map_err(|e| Error::Corpus {
            path: path.into(),
            line: i + 1,
            source: Box::new(e),
        })?;
        out.push(CorpusEntry { line: i + 1, graph6: rec.to_string(), graph });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bit-level reference decoder written independently of `parse_graph6`:
    /// expands every data byte into 6 bits, then walks the column-major triangle.
    fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let bytes: Vec<u8> = s.bytes().map(|b| b - 63).collect();
        let n = bytes[0] as usize;
        let mut bits = Vec::new();
        for &b in &bytes[1..] {
            for i in (0..6).rev() {
                bits.push((b >> i) & 1);
            }
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        edges.sort();
        (n, edges)
    }

    #[test]
    fn decodes_d_question_brace() {
        let g = parse_graph6(b"D?{").unwrap();
        let (n, edges) = reference_decode("D?{");
        assert_eq!(g.order(), n);
        assert_eq!(g.edges().collect::<Vec<_>>(), edges);
        // frozen from the reference decoder: the star K_{1,4} centred at 4
        assert_eq!(edges, vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn empty_graph_encoding() {
        let g = parse_graph6(b"?").unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(emit_graph6(&g).unwrap(), b"?");
    }

    #[test]
    fn known_encodings() {
        assert_eq!(emit_graph6_string(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(emit_graph6_string(&Graph::cycle(5)).unwrap(), "Dhc");
        assert_eq!(emit_graph6_string(&Graph::petersen()).unwrap().len(), 9);
    }

    #[test]
    fn long_length_prefix_round_trips() {
        let g = Graph::path(70);
        let enc = emit_graph6(&g).unwrap();
        assert_eq!(&enc[..4], &[126, 63, 63 + 1, 63 + 6]);
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_graph6(b""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6(b"D?"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6(b"D?{?"), Err(Error::Graph6 { offset: 3, .. })));
        // n=2 has one data bit; "_" = 0b100000 is fine, "`" = 0b100001 sets padding
        assert!(parse_graph6(b"A_").is_ok());
        assert!(matches!(parse_graph6(b"A`"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6(b"D?\x20"), Err(Error::Graph6 { offset: 2, .. })));
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let text = "# a 5-cycle\n5 5\n0 1\n1 2\n2 3 # spoke\n3 4\n4 0\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::cycle(5));
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);

        assert!(matches!(parse_edge_list(""), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 3\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::EdgeList { .. })));
        assert!(matches!(
            parse_edge_list("3 1\n0 1\n1 2\n"),
            Err(Error::EdgeList { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n1 0\n"),
            Err(Error::EdgeList { line: 3, .. })
        ));
    }
}
