//! Small undirected simple graphs on dense vertex labels `0..n`.

mod canon;
mod edgelist;
mod unicyclic;

use std::collections::VecDeque;
use std::fmt;

pub use canon::{
    canonical_form, canonical_form_with_bound, is_isomorphic, CanonicalForm, MAX_ISO_BOUND,
};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use unicyclic::{unicyclic_witness, NotUnicyclic, UnicyclicWitness};

use crate::{Error, Result};

/// Undirected simple graph. Edges are kept as sorted `(min, max)` pairs so
/// iteration order is deterministic; adjacency lists are sorted as well.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Neighbours of `v` are `nbrs[offsets[v]..offsets[v + 1]]`.
    offsets: Vec<usize>,
    nbrs: Vec<usize>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = edges.into_iter().collect();
        let mut degree = vec![0usize; n];
        let mut sorted = true;
        let mut prev = (0, 0);
        for e in &mut list {
            let (u, v) = *e;
            if u.max(v) >= n {
                return Err(Error::VertexOutOfRange { vertex: if u >= n { u } else { v }, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            *e = (u.min(v), u.max(v));
            sorted &= prev < *e;
            prev = *e;
            degree[u] += 1;
            degree[v] += 1;
        }
        // (0, 0) is never an edge, so the first comparison always succeeds
        if !sorted {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }

        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut total = 0;
        for d in &mut degree {
            let start = total;
            total += *d;
            offsets.push(total);
            // reuse as the fill cursor
            *d = start;
        }
        // filling from sorted (min, max) pairs leaves every slice sorted: the
        // smaller neighbours of x come from pairs (y, x), which precede (x, z)
        let mut nbrs = vec![0; total];
        for &(u, v) in &list {
            nbrs[degree[u]] = v;
            degree[u] += 1;
            nbrs[degree[v]] = u;
            degree[v] += 1;
        }
        Ok(Self { n, edges: list, offsets, nbrs })
    }

    /// The cycle `0 ~ 1 ~ ... ~ n-1 ~ 0`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs 3 vertices, got {n}")));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Star with centre 0.
    pub fn star(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (0, i)))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    /// Degree without the range check, for callers that already validated `v`.
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.offsets.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn pendant_count(&self) -> usize {
        self.offsets.windows(2).filter(|w| w[1] - w[0] == 1).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Relabel through `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "permutation of length {} for graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        Self::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// New graph with `remove` deleted and `add` inserted. Every removed
    /// edge must exist.
    pub fn rewire(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Self> {
        let mut edges = self.edges.clone();
        for &(u, v) in remove {
            match edges.binary_search(&(u.min(v), u.max(v))) {
                Ok(i) => {
                    edges.remove(i);
                }
                Err(_) => return Err(Error::MissingEdge(u, v)),
            }
        }
        edges.extend_from_slice(add);
        Self::new(self.n, edges)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges)
    }
}
