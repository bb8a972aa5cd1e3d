//! SO-increasing rewrites of unicyclic graphs.
//!
//! Every move is addressed by a [`MoveKind`] and two anchor vertices `u`,
//! `v`. The public functions validate the move's hypotheses on the given
//! graph and refuse with [`Error::Hypothesis`] when they fail; they never
//! fall back to a different rewrite.
//!
//! | kind | `u` | `v` |
//! |------|-----|-----|
//! | `TreeShift*` | receiving tree vertex | tree vertex giving up branches |
//! | `PathRebalance*` | first vertex of the shortened path | first vertex of the extended path |
//! | `BranchMigrate*` | cycle vertex | tree vertex of degree >= 3 |
//! | `CycleShorten*` | cycle vertex that survives the merge | cycle vertex merged into `u` |
//! | `HubConsolidate` | receiving triangle vertex | triangle vertex giving up branches |

mod ascent;
mod moves;

use std::fmt;
use std::str::FromStr;

pub use ascent::{ascend, parse_trace, potential, AscentStep, AscentTrace, Potential, TraceRecord};
pub use moves::{
    branch_migrate, cycle_shorten, hub_consolidate, path_rebalance, tree_shift_adjacent,
    tree_shift_distant,
};

use crate::graph::{Graph, UnicyclicWitness};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveKind {
    TreeShiftAdjacent,
    TreeShiftDistant,
    PathRebalanceEqual,
    PathRebalanceStrict,
    BranchMigrateNear,
    BranchMigrateFar,
    CycleShortenByOne,
    CycleShortenByTwo,
    CycleShortenLong,
    HubConsolidate,
}

impl MoveKind {
    pub const ALL: [Self; 10] = [
        Self::TreeShiftAdjacent,
        Self::TreeShiftDistant,
        Self::PathRebalanceEqual,
        Self::PathRebalanceStrict,
        Self::BranchMigrateNear,
        Self::BranchMigrateFar,
        Self::CycleShortenByOne,
        Self::CycleShortenByTwo,
        Self::CycleShortenLong,
        Self::HubConsolidate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::TreeShiftAdjacent => "TreeShiftAdjacent",
            Self::TreeShiftDistant => "TreeShiftDistant",
            Self::PathRebalanceEqual => "PathRebalanceEqual",
            Self::PathRebalanceStrict => "PathRebalanceStrict",
            Self::BranchMigrateNear => "BranchMigrateNear",
            Self::BranchMigrateFar => "BranchMigrateFar",
            Self::CycleShortenByOne => "CycleShortenByOne",
            Self::CycleShortenByTwo => "CycleShortenByTwo",
            Self::CycleShortenLong => "CycleShortenLong",
            Self::HubConsolidate => "HubConsolidate",
        }
    }

    pub fn predicted_sign(self) -> PredictedSign {
        match self {
            Self::PathRebalanceEqual => PredictedSign::Equal,
            _ => PredictedSign::StrictIncrease,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown move kind {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PredictedSign {
    StrictIncrease,
    Equal,
}

/// A move whose hypotheses hold at anchors `(u, v)` on some graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MoveDescriptor {
    pub kind: MoveKind,
    pub u: usize,
    pub v: usize,
    pub predicted: PredictedSign,
}

/// Every applicable move, sorted by kind then anchors.
pub fn find_moves(g: &Graph) -> Result<Vec<MoveDescriptor>> {
    let w = moves::witness(g)?;
    let n = g.vertex_count();
    let mut found = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            for plan in moves::candidate_plans(&w, u, v) {
                found.push(MoveDescriptor { kind: plan.kind, u, v, predicted: plan.kind.predicted_sign() });
            }
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

/// Apply a descriptor, re-checking its hypotheses.
pub fn apply(g: &Graph, mv: &MoveDescriptor) -> Result<Graph> {
    let w = moves::witness(g)?;
    let plan = moves::plan_for(&w, mv.kind, mv.u, mv.v)?;
    plan.apply(&w)
}

pub(crate) fn witness_of(g: &Graph) -> Result<UnicyclicWitness> {
    moves::witness(g)
}
