//! Catalogue of unlabelled rooted trees, one entry per isomorphism class.

/// A rooted tree stored as the catalogue ids of its root's subtrees,
/// non-increasing, so each class has exactly one representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RootedTree {
    pub size: usize,
    pub children: Vec<usize>,
}

/// All rooted trees with at most `max_size` vertices, ordered by size.
#[derive(Debug, Clone)]
pub(crate) struct Catalogue {
    pub trees: Vec<RootedTree>,
    /// `by_size[s]` is the id range of trees with `s` vertices.
    pub by_size: Vec<std::ops::Range<usize>>,
}

impl Catalogue {
    pub fn new(max_size: usize) -> Self {
        let mut trees = Vec::new();
        let mut by_size = Vec::with_capacity(max_size + 1);
        by_size.push(0..0);
        for size in 1..=max_size {
            let start = trees.len();
            let mut forests = Vec::new();
            collect_forests(&trees, size - 1, start, &mut Vec::new(), &mut forests);
            trees.extend(forests.into_iter().map(|children| RootedTree { size, children }));
            by_size.push(start..trees.len());
        }
        Self { trees, by_size }
    }

    pub fn ids_of_size(&self, size: usize) -> std::ops::Range<usize> {
        self.by_size.get(size).cloned().unwrap_or(0..0)
    }

    /// Hang tree `id` below `root`, numbering new vertices from `*next`.
    pub fn attach(&self, id: usize, root: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) {
        for &child in &self.trees[id].children {
            let v = *next;
            *next += 1;
            edges.push((root, v));
            self.attach(child, v, next, edges);
        }
    }
}

/// Non-increasing id sequences (ids below `bound`) whose sizes sum to `remaining`.
fn collect_forests(
    trees: &[RootedTree],
    remaining: usize,
    bound: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for id in (0..bound).rev() {
        if trees[id].size <= remaining {
            current.push(id);
            collect_forests(trees, remaining - trees[id].size, id + 1, current, out);
            current.pop();
        }
    }
}
