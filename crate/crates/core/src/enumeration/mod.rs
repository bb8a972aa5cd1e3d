//! Isomorph-free generation of unicyclic graphs and exhaustive max-SO search.
//!
//! A unicyclic graph is a cycle `C_ℓ` with a rooted tree hanging from each
//! cycle vertex, so each class corresponds to a cyclic sequence of rooted
//! trees up to rotation and reflection. Sequences are built from a rooted
//! tree catalogue, kept only when lexicographically minimal in their
//! dihedral orbit, and finally deduplicated by canonical form.

mod rooted;
mod search;

use std::collections::BTreeMap;

use rayon::prelude::*;

pub use search::{max_so_search, verify_theorem, SearchReport, CSV_HEADER};

use crate::graph::{canonical_form, CanonicalForm, Graph};
use crate::{Error, Result};
use rooted::Catalogue;

pub const MIN_N: usize = 3;
pub const MAX_N: usize = 10;

/// One representative per isomorphism class of connected unicyclic graphs
/// on `n` vertices, optionally only those with `k_filter` pendant vertices.
/// Ordered by cycle length, then canonical form.
pub fn enumerate_unicyclic(n: usize, k_filter: Option<usize>) -> Result<Vec<Graph>> {
    if !(MIN_N..=MAX_N).contains(&n) {
        return Err(Error::InvalidArgument(format!("n must be in {MIN_N}..={MAX_N}, got {n}")));
    }
    let catalogue = Catalogue::new(n - 2);
    let partitions: Vec<Vec<(CanonicalForm, Graph)>> = (3..=n)
        .into_par_iter()
        .map(|cycle_len| {
            let mut seen = BTreeMap::new();
            for g in cycle_with_trees(&catalogue, n, cycle_len) {
                if k_filter.is_some_and(|k| g.pendant_count() != k) {
                    continue;
                }
                let cf = canonical_form(&g).expect("n within the exact bound");
                seen.entry(cf).or_insert(g);
            }
            seen.into_iter().collect()
        })
        .collect();

    // graphs with different cycle lengths are never isomorphic, so the merge
    // only has to keep partition order
    Ok(partitions.into_iter().flatten().map(|(_, g)| g).collect())
}

/// Dihedral-minimal tree sequences around a cycle of length `cycle_len`.
fn cycle_with_trees(cat: &Catalogue, n: usize, cycle_len: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut seq = Vec::with_capacity(cycle_len);
    fill(cat, n - cycle_len, cycle_len, &mut seq, &mut |seq| {
        if is_dihedral_min(seq) {
            out.push(build(cat, n, seq));
        }
    });
    out
}

/// Extend `seq` to `len` tree ids using exactly `spare` non-root vertices.
fn fill(cat: &Catalogue, spare: usize, len: usize, seq: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if seq.len() == len {
        if spare == 0 {
            emit(seq);
        }
        return;
    }
    for extra in 0..=spare {
        for id in cat.ids_of_size(extra + 1) {
            seq.push(id);
            fill(cat, spare - extra, len, seq, emit);
            seq.pop();
        }
    }
}

fn is_dihedral_min(seq: &[usize]) -> bool {
    let l = seq.len();
    (0..l).all(|shift| {
        let rot = (0..l).map(|i| seq[(i + shift) % l]);
        let refl = (0..l).map(|i| seq[(l + shift - i) % l]);
        seq.iter().copied().le(rot) && seq.iter().copied().le(refl)
    })
}

/// Cycle on `0..ℓ`, trees numbered after it in sequence order.
fn build(cat: &Catalogue, n: usize, seq: &[usize]) -> Graph {
    let l = seq.len();
    let mut edges: Vec<(usize, usize)> = (0..l).map(|i| (i, (i + 1) % l)).collect();
    let mut next = l;
    for (root, &id) in seq.iter().enumerate() {
        cat.attach(id, root, &mut next, &mut edges);
    }
    debug_assert_eq!(next, n);
    Graph::new(n, edges).expect("construction yields a simple graph")
}
