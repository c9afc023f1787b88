//! Text interchange formats.
//!
//! HGF (hypergraphs): line one holds `k n m` as base-10 integers, then m
//! lines of k ascending 0-based vertex ids. Lines starting with `#` are
//! comments. LF line endings.
//!
//! Edge lists (graphs): header `n m`, then m lines of `u v`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

fn parse_err(path: &str, line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_string(),
        line,
        col,
        msg: msg.into(),
    }
}

/// Splits a line into integer fields, reporting the 1-based column of the
/// first offending token.
fn parse_ints(path: &str, lineno: usize, line: &str, expected: usize) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(expected);
    for tok in line.split_whitespace() {
        let col = line.find(tok).map(|i| i + 1).unwrap_or(1);
        let v: u64 = tok
            .parse()
            .map_err(|_| parse_err(path, lineno, col, format!("expected integer, got {tok:?}")))?;
        out.push(v);
    }
    if out.len() != expected {
        return Err(parse_err(
            path,
            lineno,
            1,
            format!("expected {expected} fields, got {}", out.len()),
        ));
    }
    Ok(out)
}

/// Parses HGF text into a validated hypergraph.
pub fn parse_hgf(path: &str, text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, 1, "empty input, expected `k n m` header"))?;
    let head = parse_ints(path, lineno, header, 3)?;
    let (k, n, m) = (head[0] as usize, head[1] as usize, head[2] as usize);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| parse_err(path, lineno, 1, format!("expected {m} edge lines")))?;
        let ids = parse_ints(path, lineno, line, k)?;
        let mut edge = Vec::with_capacity(k);
        for id in ids {
            if id > u32::MAX as u64 {
                return Err(parse_err(path, lineno, 1, format!("id {id} too large")));
            }
            edge.push(id as u32);
        }
        edges.push(edge);
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(parse_err(path, lineno, 1, "trailing content after last edge"));
    }
    Hypergraph::new(k, n, edges)
}

/// Writes a hypergraph in HGF form; deterministic, LF line endings.
pub fn write_hgf(h: &Hypergraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {} {}\n", h.k(), h.n(), h.m()));
    for e in h.edges() {
        let ids: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

/// Parses an `n m` edge-list file into a graph.
pub fn parse_edge_list(path: &str, text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, 1, "empty input, expected `n m` header"))?;
    let head = parse_ints(path, lineno, header, 2)?;
    let (n, m) = (head[0] as usize, head[1] as usize);
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| parse_err(path, lineno, 1, format!("expected {m} edge lines")))?;
        let uv = parse_ints(path, lineno, line, 2)?;
        pairs.push((uv[0] as u32, uv[1] as u32));
    }
    Graph::new(n, pairs)
}

/// Writes a graph as an `n m` edge list.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hgf_round_trip() {
        let h = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let text = write_hgf(&h);
        assert_eq!(text, "3 5 2\n0 1 2\n2 3 4\n");
        let back = parse_hgf("mem", &text).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn hgf_comments_and_blanks_ignored() {
        let text = "# seed instance\n\n3 3 1\n# the only edge\n0 1 2\n";
        let h = parse_hgf("mem", text).unwrap();
        assert_eq!(h.m(), 1);
    }

    #[test]
    fn hgf_parse_errors_carry_position() {
        let err = parse_hgf("f.hgf", "3 3 1\n0 x 2\n").unwrap_err();
        match err {
            Error::Parse { path, line, col, .. } => {
                assert_eq!(path, "f.hgf");
                assert_eq!(line, 2);
                assert_eq!(col, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_hgf("f", "").is_err());
        assert!(parse_hgf("f", "3 3 2\n0 1 2\n").is_err());
        // structural violations surface through validation
        assert!(parse_hgf("f", "3 3 2\n0 1 2\n2 1 0\n").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = write_edge_list(&g);
        let back = parse_edge_list("mem", &text).unwrap();
        assert_eq!(back, g);
    }
}
