use std::fmt::Write as _;

use super::{apply, find_moves, witness_of, MoveDescriptor, MoveKind};
use crate::graph::{parse_edge_list, write_edge_list, Graph, UnicyclicWitness};
use crate::sombor::{format_sig, sombor_index};
use crate::{Error, Result};

/// Lexicographic progress measure for [`ascend`]; every applied move makes
/// it strictly smaller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Potential {
    /// Vertices of degree >= 3 off the cycle.
    pub heavy_tree_vertices: usize,
    pub cycle_len: usize,
    pub branched_cycle_vertices: usize,
    /// Sum over non-designated hanging paths of `len - 1`.
    pub path_excess: usize,
}

/// Designated path at cycle vertex `c`: first vertex of the longest hanging
/// path, lowest label among the longest.
fn designated(paths: &[Vec<usize>]) -> Option<usize> {
    paths.iter().map(|p| (std::cmp::Reverse(p.len()), p[0])).min().map(|(_, first)| first)
}

pub fn potential(w: &UnicyclicWitness) -> Potential {
    let g = w.graph();
    let heavy_tree_vertices =
        (0..g.vertex_count()).filter(|&v| !w.on_cycle(v) && g.deg(v) >= 3).count();
    let branched_cycle_vertices = w.trees().values().filter(|b| !b.is_empty()).count();
    let path_excess = w
        .cycle()
        .iter()
        .filter_map(|&c| w.hanging_paths(c))
        .map(|paths| {
            let keep = designated(&paths);
            paths.iter().filter(|p| Some(p[0]) != keep).map(|p| p.len() - 1).sum::<usize>()
        })
        .sum();
    Potential { heavy_tree_vertices, cycle_len: w.cycle_len(), branched_cycle_vertices, path_excess }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AscentStep {
    pub mv: MoveDescriptor,
    /// Graph after the move.
    pub graph: Graph,
    pub so_before: f64,
    pub so_after: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AscentTrace {
    pub start: Graph,
    pub steps: Vec<AscentStep>,
}

impl AscentTrace {
    pub fn final_graph(&self) -> &Graph {
        self.steps.last().map_or(&self.start, |s| &s.graph)
    }

    /// Line records: a `steps <count>` header, one
    /// `<index> <tag> <u> <v> <so_before> <so_after>` line per step, then
    /// `final` and the final graph's edge list.
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        writeln!(out, "steps {}", self.steps.len()).unwrap();
        for (i, s) in self.steps.iter().enumerate() {
            writeln!(
                out,
                "{} {} {} {} {} {}",
                i + 1,
                s.mv.kind,
                s.mv.u,
                s.mv.v,
                format_sig(s.so_before, 10),
                format_sig(s.so_after, 10)
            )
            .unwrap();
        }
        out.push_str("final\n");
        out.push_str(&write_edge_list(self.final_graph()));
        out
    }
}

/// One parsed step line of a trace.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRecord {
    pub index: usize,
    pub kind: MoveKind,
    pub u: usize,
    pub v: usize,
    pub so_before: f64,
    pub so_after: f64,
}

/// Read back [`AscentTrace::to_records`] output.
pub fn parse_trace(text: &str) -> Result<(Vec<TraceRecord>, Graph)> {
    let bad = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
    let lines: Vec<&str> = text.lines().collect();
    let count: usize = lines
        .first()
        .and_then(|l| l.strip_prefix("steps "))
        .and_then(|c| c.trim().parse().ok())
        .ok_or_else(|| bad(1, "expected \"steps <count>\""))?;
    let mut records = Vec::with_capacity(count);
    for i in 0..count {
        let line = i + 2;
        let fields: Vec<&str> = lines.get(i + 1).ok_or_else(|| bad(line, "missing step"))?.split(' ').collect();
        if fields.len() != 6 {
            return Err(bad(line, "expected 6 fields"));
        }
        let int = |s: &str| s.parse::<usize>().map_err(|_| bad(line, "bad integer"));
        let real = |s: &str| s.parse::<f64>().map_err(|_| bad(line, "bad number"));
        records.push(TraceRecord {
            index: int(fields[0])?,
            kind: fields[1].parse().map_err(|_| bad(line, "unknown move kind"))?,
            u: int(fields[2])?,
            v: int(fields[3])?,
            so_before: real(fields[4])?,
            so_after: real(fields[5])?,
        });
    }
    if lines.get(count + 1) != Some(&"final") {
        return Err(bad(count + 2, "expected \"final\""));
    }
    let graph = parse_edge_list(&lines[count + 2..].join("\n")).map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse { line: line + count + 2, msg },
        other => other,
    })?;
    Ok((records, graph))
}

/// Order in which move families are tried.
const PHASES: [&[MoveKind]; 5] = [
    &[MoveKind::TreeShiftAdjacent, MoveKind::TreeShiftDistant],
    &[MoveKind::BranchMigrateNear, MoveKind::BranchMigrateFar],
    &[MoveKind::CycleShortenByOne, MoveKind::CycleShortenByTwo, MoveKind::CycleShortenLong],
    &[MoveKind::HubConsolidate],
    &[MoveKind::PathRebalanceStrict, MoveKind::PathRebalanceEqual],
];

/// Path moves only feed the designated path at their cycle vertex.
fn feeds_designated(w: &UnicyclicWitness, mv: &MoveDescriptor) -> bool {
    let hub = w.parent(mv.u).expect("path moves start at a tree vertex");
    let paths = w.hanging_paths(hub).unwrap_or_default();
    designated(&paths) == Some(mv.v)
}

fn next_move(g: &Graph) -> Result<Option<MoveDescriptor>> {
    let w = witness_of(g)?;
    let moves = find_moves(g)?;
    for phase in PHASES {
        let pick = moves.iter().find(|mv| {
            phase.contains(&mv.kind)
                && (!matches!(mv.kind, MoveKind::PathRebalanceEqual | MoveKind::PathRebalanceStrict)
                    || feeds_designated(&w, mv))
        });
        if let Some(mv) = pick {
            return Ok(Some(*mv));
        }
    }
    Ok(None)
}

/// Greedily apply moves until none is available.
pub fn ascend(g: &Graph) -> Result<AscentTrace> {
    witness_of(g)?;
    if g.pendant_count() == 0 {
        return Err(Error::InvalidArgument("ascent needs at least one pendant vertex".into()));
    }
    let mut steps = Vec::new();
    let mut current = g.clone();
    let mut so = sombor_index::<f64>(&current).0;
    let mut measure = potential(&witness_of(&current)?);
    while let Some(mv) = next_move(&current)? {
        let next = apply(&current, &mv)?;
        let next_measure = potential(&witness_of(&next)?);
        assert!(next_measure < measure, "{mv:?} did not decrease the potential");
        measure = next_measure;
        let so_after = sombor_index::<f64>(&next).0;
        steps.push(AscentStep { mv, graph: next.clone(), so_before: so, so_after });
        current = next;
        so = so_after;
    }
    Ok(AscentTrace { start: g.clone(), steps })
}
