#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use sombor_core::graph::canonical_form;
use sombor_core::transforms::{MoveDescriptor, MoveKind};
use sombor_core::{CanonicalForm, Graph};

/// Canonical forms of all unicyclic graphs on `n` vertices, found by testing
/// every `n`-edge subset of `K_n` for connectivity.
pub fn dense_unicyclic_oracle(n: usize) -> BTreeSet<CanonicalForm> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut out = BTreeSet::new();
    let mut chosen = Vec::with_capacity(n);
    subsets(&pairs, 0, n, &mut chosen, &mut |edges| {
        if connected(n, edges) {
            let g = Graph::new(n, edges.iter().copied()).unwrap();
            out.insert(canonical_form(&g).unwrap());
        }
    });
    out
}

fn subsets(
    pairs: &[(usize, usize)],
    from: usize,
    left: usize,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    if left == 0 {
        emit(chosen);
        return;
    }
    for i in from..=pairs.len() - left {
        chosen.push(pairs[i]);
        subsets(pairs, i + 1, left - 1, chosen, emit);
        chosen.pop();
    }
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut parts = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            parts -= 1;
        }
    }
    parts == 1
}

/// Random connected unicyclic graph on `n` vertices, randomly labelled.
///
/// Three shapes, equally likely: random recursive trees on the cycle; bare
/// paths only, which is where the path and cycle moves live; and recursive
/// trees with subdivided edges, giving degree-2 chains between branch points.
pub fn random_unicyclic(rng: &mut impl Rng, n: usize) -> Graph {
    assert!(n >= 3);
    let shape = rng.gen_range(0..3);
    // subdivided trees need room off the cycle
    let cycle_len = if shape == 2 { rng.gen_range(3..=n.min(5)) } else { rng.gen_range(3..=n) };
    let mut edges: Vec<(usize, usize)> = (0..cycle_len).map(|i| (i, (i + 1) % cycle_len)).collect();
    let mut next = cycle_len;
    match shape {
        0 => {
            while next < n {
                edges.push((rng.gen_range(0..next), next));
                next += 1;
            }
        }
        1 => {
            while next < n {
                let root = rng.gen_range(0..cycle_len);
                let len = rng.gen_range(1..=(n - next).min(4));
                let mut prev = root;
                for _ in 0..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
        }
        _ => {
            let skeleton = rng.gen_range(next..=n);
            while next < skeleton {
                edges.push((rng.gen_range(0..next), next));
                next += 1;
            }
            while next < n && edges.len() > cycle_len {
                let i = rng.gen_range(cycle_len..edges.len());
                let (a, b) = edges[i];
                edges[i] = (a, next);
                edges.push((next, b));
                next += 1;
            }
            while next < n {
                edges.push((rng.gen_range(0..next), next));
                next += 1;
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::new(n, edges.iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
}

/// Vertices on the cycle, by repeatedly stripping leaves.
pub fn cycle_vertices(g: &Graph) -> Vec<bool> {
    let n = g.vertex_count();
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = queue.pop_front() {
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push_back(w);
                }
            }
        }
    }
    alive
}

fn distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Interior vertices of a shortest u-v path, if it is unique and avoids the cycle.
fn tree_interior(g: &Graph, on_cycle: &[bool], u: usize, v: usize) -> Option<Vec<usize>> {
    let du = distances(g, u);
    let dv = distances(g, v);
    let d = du[v];
    let interior: Vec<usize> =
        (0..g.vertex_count()).filter(|&x| x != u && x != v && du[x] + dv[x] == d).collect();
    (interior.len() + 1 == d && interior.iter().all(|&x| !on_cycle[x])).then_some(interior)
}

/// Length of the bare path that starts at `first` and leads away from `root`.
fn bare_path_len(g: &Graph, root: usize, first: usize) -> Option<usize> {
    let (mut prev, mut cur, mut len) = (root, first, 1);
    loop {
        let onward: Vec<usize> = g.neighbors(cur).iter().copied().filter(|&w| w != prev).collect();
        match onward.as_slice() {
            [] => return Some(len),
            [w] => {
                (prev, cur) = (cur, *w);
                len += 1;
            }
            _ => return None,
        }
    }
}

/// The cycle vertex reached from `x` by walking off its tree.
fn root_of(g: &Graph, on_cycle: &[bool], x: usize) -> usize {
    let dist = distances(g, x);
    (0..g.vertex_count()).filter(|&c| on_cycle[c]).min_by_key(|&c| dist[c]).unwrap()
}

/// Checks a descriptor against the lemma hypotheses, computed from scratch.
pub fn hypotheses_hold(g: &Graph, mv: &MoveDescriptor) -> Result<(), String> {
    let on_cycle = cycle_vertices(g);
    let cycle_len = on_cycle.iter().filter(|&&c| c).count();
    let d = |x: usize| g.neighbors(x).len();
    let (u, v) = (mv.u, mv.v);
    let fail = |msg: &str| Err(format!("{:?} at ({u}, {v}): {msg}", mv.kind));
    match mv.kind {
        MoveKind::TreeShiftAdjacent | MoveKind::TreeShiftDistant => {
            if on_cycle[u] || on_cycle[v] {
                return fail("anchor on the cycle");
            }
            if d(u) < 3 || d(v) < 3 || d(u) < d(v) {
                return fail("need d(u) >= d(v) >= 3");
            }
            let Some(interior) = tree_interior(g, &on_cycle, u, v) else {
                return fail("no tree path");
            };
            if interior.iter().any(|&x| d(x) != 2) {
                return fail("v is not the nearest degree >= 3 vertex");
            }
            let adjacent = interior.is_empty();
            if adjacent != (mv.kind == MoveKind::TreeShiftAdjacent) {
                return fail("distance does not match kind");
            }
        }
        MoveKind::PathRebalanceEqual | MoveKind::PathRebalanceStrict => {
            if on_cycle[u] || on_cycle[v] || u == v {
                return fail("path starts must be distinct tree vertices");
            }
            let hubs: Vec<usize> = g.neighbors(u).iter().copied().filter(|&c| on_cycle[c]).collect();
            let [hub] = hubs.as_slice() else {
                return fail("u does not hang off the cycle");
            };
            if !g.has_edge(*hub, v) {
                return fail("paths on different cycle vertices");
            }
            let (Some(l), Some(m)) = (bare_path_len(g, *hub, u), bare_path_len(g, *hub, v)) else {
                return fail("branch is not a path");
            };
            let ok = match mv.kind {
                MoveKind::PathRebalanceEqual => l >= 3 && m >= 2,
                _ => l == 2 && m >= 2 && d(*hub) >= 4,
            };
            if !ok {
                return fail(&format!("lengths l={l}, m={m} do not fit"));
            }
        }
        MoveKind::BranchMigrateNear | MoveKind::BranchMigrateFar => {
            if !on_cycle[u] || on_cycle[v] || d(v) < 3 {
                return fail("need u on cycle, v off cycle with d(v) >= 3");
            }
            if root_of(g, &on_cycle, v) != u {
                return fail("v not in u's tree");
            }
            let Some(interior) = tree_interior(g, &on_cycle, u, v) else {
                return fail("no tree path");
            };
            if interior.iter().any(|&x| d(x) != 2) {
                return fail("interior vertex of degree != 2");
            }
            if interior.is_empty() != (mv.kind == MoveKind::BranchMigrateNear) {
                return fail("distance does not match kind");
            }
        }
        MoveKind::CycleShortenByOne | MoveKind::CycleShortenByTwo | MoveKind::CycleShortenLong => {
            if cycle_len < 4 || !on_cycle[u] || !on_cycle[v] {
                return fail("need cycle length >= 4 and anchors on it");
            }
            for x in [u, v] {
                let branches: Vec<usize> = g.neighbors(x).iter().copied().filter(|&y| !on_cycle[y]).collect();
                if branches.is_empty() || branches.iter().any(|&y| bare_path_len(g, x, y).is_none()) {
                    return fail("anchor without attached paths");
                }
            }
            // one of the two u-v arcs must have degree-2 interior
            let arcs = cycle_arcs(g, &on_cycle, u, v);
            let dist = arcs
                .iter()
                .filter(|arc| arc.iter().all(|&x| d(x) == 2))
                .map(|arc| arc.len() + 1)
                .filter(|&len| cycle_len - len >= 3)
                .min();
            let kind_ok = match (dist, mv.kind) {
                (Some(1), MoveKind::CycleShortenByOne) => true,
                (Some(2), MoveKind::CycleShortenByTwo) => true,
                (Some(k), MoveKind::CycleShortenLong) => k >= 3,
                _ => false,
            };
            if !kind_ok {
                return fail("no suitable arc for this kind");
            }
        }
        MoveKind::HubConsolidate => {
            if cycle_len != 3 || !on_cycle[u] || !on_cycle[v] || u == v {
                return fail("need two vertices of a triangle");
            }
            if d(v) < 3 || d(u) < d(v) {
                return fail("need d(u) >= d(v) >= 3");
            }
        }
    }
    Ok(())
}

/// Interiors of the two cycle arcs from `u` to `v`.
fn cycle_arcs(g: &Graph, on_cycle: &[bool], u: usize, v: usize) -> Vec<Vec<usize>> {
    let starts: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| on_cycle[w]).collect();
    starts
        .into_iter()
        .map(|first| {
            let mut arc = Vec::new();
            let (mut prev, mut cur) = (u, first);
            while cur != v {
                arc.push(cur);
                let next = g.neighbors(cur).iter().copied().find(|&w| on_cycle[w] && w != prev).unwrap();
                (prev, cur) = (cur, next);
            }
            arc
        })
        .collect()
}

/// `|E| = |V|` and connected.
pub fn is_unicyclic(g: &Graph) -> bool {
    g.edge_count() == g.vertex_count() && connected(g.vertex_count(), g.edges())
}

/// Canonical forms of unicyclic graphs on `n` vertices, built as every tree
/// on `n` vertices plus one extra edge. Trees grow one leaf at a time.
pub fn tree_plus_edge_oracle(n: usize) -> BTreeSet<CanonicalForm> {
    let mut trees = BTreeSet::from([canonical_form(&Graph::path(1).unwrap()).unwrap()]);
    for size in 2..=n {
        trees = trees
            .iter()
            .flat_map(|t| {
                let t = t.to_graph();
                (0..size - 1).map(move |v| {
                    let edges = t.edges().iter().copied().chain([(v, size - 1)]);
                    canonical_form(&Graph::new(size, edges).unwrap()).unwrap()
                })
            })
            .collect();
    }
    let mut out = BTreeSet::new();
    for t in &trees {
        let t = t.to_graph();
        for j in 0..n {
            for i in 0..j {
                if !t.has_edge(i, j) {
                    let g = Graph::new(n, t.edges().iter().copied().chain([(i, j)])).unwrap();
                    out.insert(canonical_form(&g).unwrap());
                }
            }
        }
    }
    out
}
