//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! N M
//! u v      (M lines, 0-based)
//! ```

use std::fmt::Write as _;

use super::Graph;
use crate::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: text.lines().count().max(1),
        msg: "missing \"N M\" header".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(Error::Parse { line, msg: format!("more than the declared {m} edges") });
        }
        let [u, v] = parse_pair(line, body)?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::Parse { line, msg: format!("vertex {w} out of range 0..{n}") });
            }
        }
        edges.push((u, v, line));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: format!("declared {m} edges, found {}", edges.len()),
        });
    }

    let mut seen = std::collections::BTreeSet::new();
    for &(u, v, line) in &edges {
        if u == v {
            return Err(Error::Parse { line, msg: format!("self-loop at vertex {u}") });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse { line, msg: format!("duplicate edge {u} {v}") });
        }
    }
    Graph::new(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            msg: format!("expected two integers, found {:?}", body),
        });
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("not a non-negative integer: {f:?}"),
        })?;
    }
    Ok(out)
}

/// Header line followed by the sorted edges, one per line.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
