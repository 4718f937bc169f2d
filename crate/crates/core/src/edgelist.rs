//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! 0-based IDs. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    let [n, m] = parse_pair(hline, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let [u, v] = parse_pair(line, l)?;
        if u >= n || v >= n {
            return Err(Error::Parse { line, msg: format!("edge ({u}, {v}) out of range for n = {n}") });
        }
        if u == v {
            return Err(Error::Parse { line, msg: format!("self-loop at {u}") });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse { line: 1, msg: format!("header announces {m} edges, found {}", edges.len()) });
    }
    let g = Graph::from_edges(n, &edges)?;
    if g.m() != m {
        return Err(Error::Parse { line: 1, msg: "duplicate edges".into() });
    }
    Ok(g)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse { line, msg: format!("expected two integers, got {text:?}") });
    }
    let num = |s: &str| s.parse::<usize>().map_err(|e| Error::Parse { line, msg: format!("{s:?}: {e}") });
    Ok([num(fields[0])?, num(fields[1])?])
}

/// Canonical rendering: header, then edges `u v` with `u < v` in sorted order.
pub fn to_string(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.into(), source })?;
    parse(&text)
}

pub fn write(path: &Path, g: &Graph) -> Result<()> {
    fs::write(path, to_string(g)).map_err(|source| Error::Io { path: path.into(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blanks() {
        let g = parse("# a triangle\n3 3\n\n0 1\n1 2 # closing\n2 0\n").unwrap();
        assert_eq!(g.m(), 3);
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse("").is_err());
        assert!(parse("3 2\n0 1\n").is_err());
        assert!(parse("3 1\n0 5\n").is_err());
        assert!(parse("3 1\n1 1\n").is_err());
        assert!(parse("3 2\n0 1\n1 0\n").is_err());
        assert!(parse("3 1\n0 x\n").is_err());
    }

    #[test]
    fn canonical_output() {
        let g = parse("4 3\n3 2\n1 0\n2 1\n").unwrap();
        assert_eq!(to_string(&g), "4 3\n0 1\n1 2\n2 3\n");
    }
}
