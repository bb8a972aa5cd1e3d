//! Exact canonical forms for graphs of at most [`MAX_ISO_BOUND`] vertices.
//!
//! Individualisation-refinement without automorphism pruning: the ordered
//! partition is refined to an equitable one using only label-free data, the
//! first non-singleton cell is split on each of its vertices in turn, and the
//! canonical code is the minimum adjacency code over all discrete leaves.
//! Vertices with identical neighbourhoods are swapped by an automorphism
//! fixing everything else, so only one of each twin class is tried per cell.

use super::Graph;
use crate::{Error, Result};

/// Largest vertex count with an exact canonical form. The upper-triangle
/// adjacency of 11 vertices is 55 bits.
pub const MAX_ISO_BOUND: usize = 11;

/// Relabelling-invariant code; equal iff the graphs are isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    code: u64,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    /// Representative graph whose labelling realises this code.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let edges = (1..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|&(i, j)| self.code >> pair_index(i, j) & 1 == 1);
        Graph::new(n, edges).expect("code encodes a simple graph")
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with_bound(g, MAX_ISO_BOUND)
}

/// Canonical form refusing graphs above `bound` vertices (`bound` itself is
/// capped at [`MAX_ISO_BOUND`]).
pub fn canonical_form_with_bound(g: &Graph, bound: usize) -> Result<CanonicalForm> {
    let bound = bound.min(MAX_ISO_BOUND);
    let n = g.vertex_count();
    if n > bound {
        return Err(Error::TooLarge { n, bound });
    }
    let mut search = Search { g, best: None };
    let cells = refine(g, vec![(0..n).collect()]);
    search.descend(cells);
    Ok(CanonicalForm { n: n as u8, code: search.best.unwrap_or(0) })
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        // still enforce the size bound on both sides
        canonical_form(g)?;
        canonical_form(h)?;
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    best: Option<u64>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Cells) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let code = self.leaf_code(&cells);
            self.best = Some(self.best.map_or(code, |b| b.min(code)));
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&t| are_twins(self.g, t, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.descend(refine(self.g, next));
        }
    }

    fn leaf_code(&self, cells: &Cells) -> u64 {
        let mut pos = vec![0; self.g.vertex_count()];
        for (i, cell) in cells.iter().enumerate() {
            pos[cell[0]] = i;
        }
        self.g.edges().iter().fold(0u64, |acc, &(u, v)| {
            let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            acc | 1 << pair_index(a, b)
        })
    }
}

fn are_twins(g: &Graph, a: usize, b: usize) -> bool {
    let strip = |x: usize, other: usize| g.neighbors(x).iter().copied().filter(move |&w| w != other);
    strip(a, b).eq(strip(b, a))
}

/// Split cells by neighbour counts into every cell until stable. New cells
/// replace their parent in place, ordered by signature, so the result only
/// depends on the graph structure and the input order of cells.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    let n = g.vertex_count();
    let mut cell_of = vec![0; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0; cells.len()];
                    for &w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}
