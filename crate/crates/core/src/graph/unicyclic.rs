use std::collections::{BTreeMap, VecDeque};

use super::Graph;

/// Why a graph failed the unicyclic membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotUnicyclic {
    Disconnected,
    EdgeCount { vertices: usize, edges: usize },
}

/// A unicyclic graph split into its unique cycle and the trees hanging off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicyclicWitness {
    graph: Graph,
    cycle: Vec<usize>,
    trees: BTreeMap<usize, Vec<Vec<usize>>>,
    root: Vec<usize>,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    cycle_pos: Vec<Option<usize>>,
}

/// Decompose `g` if it is connected with `|E| = |V|`.
///
/// The cycle is the 2-core left after repeatedly stripping degree-1
/// vertices. It is listed starting at its smallest vertex, heading towards
/// the smaller of that vertex's two cycle neighbours.
pub fn unicyclic_witness(g: &Graph) -> Result<UnicyclicWitness, NotUnicyclic> {
    let n = g.vertex_count();
    if g.edge_count() != n || n < 3 {
        return Err(NotUnicyclic::EdgeCount { vertices: n, edges: g.edge_count() });
    }
    if !g.is_connected() {
        return Err(NotUnicyclic::Disconnected);
    }

    let mut deg = g.degrees();
    let mut stripped = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = queue.pop_front() {
        stripped[v] = true;
        for &w in g.neighbors(v) {
            if !stripped[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push_back(w);
                }
            }
        }
    }

    let core_nbrs = |v: usize| g.neighbors(v).iter().copied().filter(|&w| !stripped[w]);
    let start = (0..n).find(|&v| !stripped[v]).expect("connected with |E|=|V| has a cycle");
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = core_nbrs(start).min().unwrap();
    while cur != start {
        cycle.push(cur);
        let next = core_nbrs(cur).find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }

    let mut cycle_pos = vec![None; n];
    for (i, &c) in cycle.iter().enumerate() {
        cycle_pos[c] = Some(i);
    }
    let mut root = vec![usize::MAX; n];
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut trees: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for &c in &cycle {
        root[c] = c;
        let mut branches = Vec::new();
        for &child in g.neighbors(c) {
            if cycle_pos[child].is_some() {
                continue;
            }
            let mut members = vec![child];
            root[child] = c;
            parent[child] = Some(c);
            depth[child] = 1;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                for &w in g.neighbors(v) {
                    if Some(w) != parent[v] {
                        root[w] = c;
                        parent[w] = Some(v);
                        depth[w] = depth[v] + 1;
                        members.push(w);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            branches.push(members);
        }
        trees.insert(c, branches);
    }

    Ok(UnicyclicWitness { graph: g.clone(), cycle, trees, root, parent, depth, cycle_pos })
}

impl UnicyclicWitness {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Cycle vertices in cyclic order.
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle.len()
    }

    /// Attached trees per cycle vertex; each entry is the vertex set of one
    /// branch, root excluded.
    pub fn trees(&self) -> &BTreeMap<usize, Vec<Vec<usize>>> {
        &self.trees
    }

    pub fn on_cycle(&self, v: usize) -> bool {
        self.cycle_pos[v].is_some()
    }

    pub fn cycle_position(&self, v: usize) -> Option<usize> {
        self.cycle_pos[v]
    }

    /// Cycle vertex whose attached tree contains `v` (itself for cycle vertices).
    pub fn root_of(&self, v: usize) -> usize {
        self.root[v]
    }

    /// Neighbour of `v` one step closer to the cycle.
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Distance from `v` to the cycle.
    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// The two cycle neighbours of cycle vertex `c`, in cycle order.
    pub fn cycle_neighbors(&self, c: usize) -> (usize, usize) {
        let i = self.cycle_pos[c].expect("cycle vertex");
        let l = self.cycle.len();
        (self.cycle[(i + l - 1) % l], self.cycle[(i + 1) % l])
    }

    /// Neighbours of `v` that are not on the cycle.
    pub fn tree_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.graph.neighbors(v).iter().copied().filter(move |&w| !self.on_cycle(w))
    }

    /// Children of `v`: neighbours one step further from the cycle.
    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.graph.neighbors(v).iter().copied().filter(move |&w| self.parent[w] == Some(v))
    }

    /// True when every branch at cycle vertex `c` is a path hanging from `c`.
    pub fn branches_are_paths(&self, c: usize) -> bool {
        self.trees[&c].iter().flatten().all(|&v| self.graph.deg(v) <= 2)
    }

    /// Branches at `c` as vertex sequences from the cycle outwards, provided
    /// every branch is a path.
    pub fn hanging_paths(&self, c: usize) -> Option<Vec<Vec<usize>>> {
        if !self.branches_are_paths(c) {
            return None;
        }
        let paths = self
            .children(c)
            .map(|first| {
                let mut path = vec![first];
                while let Some(next) = self.children(*path.last().unwrap()).next() {
                    path.push(next);
                }
                path
            })
            .collect();
        Some(paths)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bare_cycle() {
        let w = unicyclic_witness(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(w.cycle(), &[0, 1, 2, 3]);
        assert!(w.trees().values().all(Vec::is_empty));
    }

    #[test]
    fn path_is_not_unicyclic() {
        assert_eq!(
            unicyclic_witness(&Graph::path(5).unwrap()),
            Err(NotUnicyclic::EdgeCount { vertices: 5, edges: 4 })
        );
    }

    #[test]
    fn disconnected_with_matching_counts() {
        // triangle + triangle: |E| = |V| but two components
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(unicyclic_witness(&g), Err(NotUnicyclic::Disconnected));
    }

    #[test]
    fn tree_bookkeeping() {
        // C4 on 0..4, path 1-4-5, pendant 1-6
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (1, 6)]).unwrap();
        let w = unicyclic_witness(&g).unwrap();
        assert_eq!(w.cycle(), &[0, 1, 2, 3]);
        assert_eq!(w.trees()[&1], vec![vec![4, 5], vec![6]]);
        assert_eq!(w.root_of(5), 1);
        assert_eq!(w.parent(5), Some(4));
        assert_eq!(w.depth(5), 2);
        assert_eq!(w.cycle_neighbors(0), (3, 1));
        assert_eq!(w.hanging_paths(1).unwrap(), vec![vec![4, 5], vec![6]]);
    }
}
