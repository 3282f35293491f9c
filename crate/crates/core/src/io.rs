//! Plain-text graph formats.
//!
//! ```text
//! graph:           n e          coloured graph:  n e r
//!                  u v                           u v c
//! ```
//!
//! Whitespace separated, LF line endings, 0-based vertices, 1-based colours.
//! Serialisation writes edges in sorted `(u < v)` order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Colour, EdgeColouring, Graph, Vertex};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self { inner: text.lines().enumerate() }
    }

    /// Next non-blank line as (1-based line number, numeric fields).
    fn next_fields(&mut self) -> Result<Option<(usize, Vec<u64>)>> {
        for (i, raw) in self.inner.by_ref() {
            let line = i + 1;
            if raw.trim().is_empty() {
                continue;
            }
            let fields = raw
                .split_whitespace()
                .map(|f| f.parse::<u64>().map_err(|_| parse_err(line, format!("bad number '{f}'"))))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Some((line, fields)));
        }
        Ok(None)
    }
}

fn expect_arity(line: usize, fields: &[u64], k: usize) -> Result<()> {
    if fields.len() != k {
        return Err(parse_err(line, format!("expected {k} fields, found {}", fields.len())));
    }
    Ok(())
}

fn parse_body(text: &str, coloured: bool) -> Result<(Graph, Option<(Colour, Vec<Colour>)>)> {
    let mut lines = Lines::new(text);
    let (hline, header) = lines.next_fields()?.ok_or_else(|| parse_err(1, "missing header"))?;
    expect_arity(hline, &header, if coloured { 3 } else { 2 })?;
    let (n, e) = (header[0] as usize, header[1] as usize);
    let r = if coloured {
        let r = header[2];
        if !(2..=u64::from(Colour::MAX)).contains(&r) {
            return Err(parse_err(hline, format!("colour count {r} out of range")));
        }
        r as Colour
    } else {
        0
    };
    let mut edges: Vec<((Vertex, Vertex), Colour, usize)> = Vec::with_capacity(e);
    while let Some((line, fields)) = lines.next_fields()? {
        expect_arity(line, &fields, if coloured { 3 } else { 2 })?;
        let (u, v) = (fields[0] as usize, fields[1] as usize);
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at {u}")));
        }
        let c = if coloured {
            let c = fields[2];
            if c == 0 || c > u64::from(r) {
                return Err(parse_err(line, format!("colour {c} outside 1..={r}")));
            }
            c as Colour
        } else {
            0
        };
        edges.push(((u.min(v), u.max(v)), c, line));
    }
    if edges.len() != e {
        return Err(parse_err(hline, format!("header declares {e} edges, found {}", edges.len())));
    }
    edges.sort_by_key(|&(pair, _, line)| (pair, line));
    if let Some(w) = edges.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(parse_err(w[1].2, format!("duplicate edge {} {}", w[1].0 .0, w[1].0 .1)));
    }
    let graph = Graph::from_edges(n, edges.iter().map(|&(p, _, _)| p))?;
    let colouring = coloured.then(|| (r, edges.iter().map(|&(_, c, _)| c).collect()));
    Ok((graph, colouring))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_body(text, false).map(|(g, _)| g)
}

pub fn parse_coloured_graph(text: &str) -> Result<EdgeColouring> {
    let (g, col) = parse_body(text, true)?;
    let (r, colours) = col.expect("coloured parse yields colours");
    EdgeColouring::new(g, r, colours)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_coloured_graph(colouring: &EdgeColouring) -> String {
    let g = colouring.graph();
    let mut out = format!("{} {} {}\n", g.n(), g.edge_count(), colouring.r());
    for ((u, v), c) in colouring.edges_with_colours() {
        let _ = writeln!(out, "{u} {v} {c}");
    }
    out
}

pub fn read_graph(path: &std::path::Path) -> anyhow::Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_graph(&text)?)
}

pub fn read_coloured_graph(path: &std::path::Path) -> anyhow::Result<EdgeColouring> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_coloured_graph(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn triangle() {
        let col = parse_coloured_graph("3 3 2\n0 1 1\n1 2 2\n0 2 1\n").unwrap();
        assert_eq!(col.graph(), &Graph::complete(3));
        assert_eq!(col.colour(0, 1), Some(1));
        assert_eq!(col.colour(1, 2), Some(2));
        assert_eq!(col.colour(0, 2), Some(1));
        assert_eq!(write_coloured_graph(&col), "3 3 2\n0 1 1\n0 2 1\n1 2 2\n");
    }

    #[test]
    fn rejects_duplicates_and_bad_colours() {
        let dup = parse_coloured_graph("3 2 2\n0 1 1\n1 0 2\n").unwrap_err();
        assert_eq!(dup, Error::Parse { line: 3, msg: "duplicate edge 0 1".into() });
        assert!(matches!(parse_coloured_graph("3 1 2\n0 1 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_coloured_graph("3 1 2\n0 1 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 2\n0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn plain_graph() {
        let g = parse_graph("4 2\n2 3\n\n0 1\n").unwrap();
        assert_eq!(write_graph(&g), "4 2\n0 1\n2 3\n");
    }

    proptest! {
        #[test]
        fn serialise_parse_is_canonical(n in 2usize..12, raw in prop::collection::vec((0usize..12, 0usize..12, 1u8..4), 0..40)) {
            let mut seen = std::collections::BTreeMap::new();
            for (u, v, c) in raw {
                let (u, v) = (u % n, v % n);
                if u != v {
                    seen.entry((u.min(v), u.max(v))).or_insert(c);
                }
            }
            let g = Graph::from_edges(n, seen.keys().copied()).unwrap();
            let col = EdgeColouring::new(g, 3, seen.values().copied().collect()).unwrap();
            let text = write_coloured_graph(&col);
            let back = parse_coloured_graph(&text).unwrap();
            prop_assert_eq!(&back, &col);
            prop_assert_eq!(write_coloured_graph(&back), text);
        }
    }
}
