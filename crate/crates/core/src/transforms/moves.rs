use super::{MoveKind, PredictedSign};
use crate::graph::{unicyclic_witness, Graph, UnicyclicWitness};
use crate::{Error, Result};

pub(super) fn witness(g: &Graph) -> Result<UnicyclicWitness> {
    unicyclic_witness(g).map_err(|_| Error::NotUnicyclic)
}

fn unmet(msg: impl Into<String>) -> Error {
    Error::Hypothesis(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(unmet(msg()))
    }
}

fn check_vertices(g: &Graph, u: usize, v: usize) -> Result<()> {
    for x in [u, v] {
        g.degree(x)?;
    }
    ensure(u != v, || format!("anchors must differ (u = v = {u})"))
}

/// Edge edits for one move.
#[derive(Debug, Clone)]
pub(super) struct Plan {
    pub kind: MoveKind,
    remove: Vec<(usize, usize)>,
    add: Vec<(usize, usize)>,
}

impl Plan {
    pub fn apply(&self, w: &UnicyclicWitness) -> Result<Graph> {
        w.graph().rewire(&self.remove, &self.add)
    }

    /// Re-home `from`'s edges to `movers` onto `to`.
    fn rehome(kind: MoveKind, from: usize, to: usize, movers: &[usize]) -> Self {
        Self {
            kind,
            remove: movers.iter().map(|&x| (from, x)).collect(),
            add: movers.iter().map(|&x| (to, x)).collect(),
        }
    }
}

/// Highest-degree vertex among `candidates`, lowest label on ties.
fn heaviest(g: &Graph, candidates: impl IntoIterator<Item = usize>) -> Option<usize> {
    candidates.into_iter().min_by_key(|&x| (std::cmp::Reverse(g.deg(x)), x))
}

/// Vertices of the tree path from `a` to `b`, both ends included. Both must
/// hang off the same cycle vertex; the path may run through that root.
fn tree_path(w: &UnicyclicWitness, a: usize, b: usize) -> Vec<usize> {
    let (mut x, mut y) = (a, b);
    let (mut head, mut tail) = (vec![], vec![]);
    while w.depth(x) > w.depth(y) {
        head.push(x);
        x = w.parent(x).unwrap();
    }
    while w.depth(y) > w.depth(x) {
        tail.push(y);
        y = w.parent(y).unwrap();
    }
    while x != y {
        head.push(x);
        tail.push(y);
        x = w.parent(x).unwrap();
        y = w.parent(y).unwrap();
    }
    head.push(x);
    head.extend(tail.into_iter().rev());
    head
}

pub(super) fn plan_tree_adjacent(w: &UnicyclicWitness, u: usize, v: usize) -> Result<Plan> {
    let g = w.graph();
    check_vertices(g, u, v)?;
    ensure(!w.on_cycle(u) && !w.on_cycle(v), || format!("{u} and {v} must lie in an attached tree"))?;
    ensure(g.has_edge(u, v), || format!("{u} and {v} are not adjacent"))?;
    let (du, dv) = (g.deg(u), g.deg(v));
    ensure(du >= 3 && dv >= 3, || format!("need d(u), d(v) >= 3, got {du}, {dv}"))?;
    ensure(du >= dv, || format!("need m >= n, i.e. d(u) >= d(v), got {du} < {dv}"))?;

    let others = g.neighbors(v).iter().copied().filter(|&x| x != u);
    let keep = heaviest(g, others.clone()).unwrap();
    let movers: Vec<usize> = others.filter(|&x| x != keep).collect();
    Ok(Plan::rehome(MoveKind::TreeShiftAdjacent, v, u, &movers))
}

pub(super) fn plan_tree_distant(w: &UnicyclicWitness, u: usize, v: usize) -> Result<Plan> {
    let g = w.graph();
    check_vertices(g, u, v)?;
    ensure(!w.on_cycle(u) && !w.on_cycle(v), || format!("{u} and {v} must lie in an attached tree"))?;
    ensure(w.root_of(u) == w.root_of(v), || format!("{u} and {v} lie in different attached trees"))?;
    let path = tree_path(w, u, v);
    ensure(path.len() >= 3, || format!("{u} and {v} are at distance {} < 2", path.len() - 1))?;
    let interior = &path[1..path.len() - 1];
    ensure(interior.iter().all(|&x| !w.on_cycle(x)), || "the u-v path leaves the attached tree".into())?;
    ensure(interior.iter().all(|&x| g.deg(x) == 2), || {
        "a vertex strictly between u and v has degree != 2".into()
    })?;
    let (du, dv) = (g.deg(u), g.deg(v));
    ensure(du >= 3 && dv >= 3, || format!("need d(u), d(v) >= 3, got {du}, {dv}"))?;
    ensure(du >= dv, || format!("need m >= n, i.e. d(u) >= d(v), got {du} < {dv}"))?;

    let toward_u = path[path.len() - 2];
    let others = g.neighbors(v).iter().copied().filter(|&x| x != toward_u);
    let keep = heaviest(g, others.clone()).unwrap();
    let movers: Vec<usize> = others.filter(|&x| x != keep).collect();
    Ok(Plan::rehome(MoveKind::TreeShiftDistant, v, u, &movers))
}

/// A branch at a cycle vertex that is a bare path, as `[first, ..., end]`.
fn hanging_path(w: &UnicyclicWitness, first: usize) -> Result<(usize, Vec<usize>)> {
    let hub = w.parent(first).filter(|&p| w.on_cycle(p)).ok_or_else(|| {
        unmet(format!("{first} is not the first vertex of a branch at a cycle vertex"))
    })?;
    let mut path = vec![first];
    loop {
        let last = *path.last().unwrap();
        let mut children = w.children(last);
        match (children.next(), children.next()) {
            (None, _) => break,
            (Some(c), None) => path.push(c),
            _ => return Err(unmet(format!("branch at {first} is not a path"))),
        }
    }
    Ok((hub, path))
}

pub(super) fn plan_path(w: &UnicyclicWitness, pl: usize, pm: usize) -> Result<Plan> {
    let g = w.graph();
    check_vertices(g, pl, pm)?;
    let (hub_l, donor) = hanging_path(w, pl)?;
    let (hub_m, receiver) = hanging_path(w, pm)?;
    ensure(hub_l == hub_m, || {
        format!("paths at {pl} and {pm} are attached to different cycle vertices ({hub_l}, {hub_m})")
    })?;
    let (l, m) = (donor.len(), receiver.len());
    ensure(l >= 2, || format!("donor path has length {l}, need >= 2"))?;
    ensure(m >= 2, || format!("receiving path has length {m}, need >= 2"))?;
    let kind = if l >= 3 { MoveKind::PathRebalanceEqual } else { MoveKind::PathRebalanceStrict };
    let (end, before_end) = (donor[l - 1], donor[l - 2]);
    Ok(Plan { kind, remove: vec![(before_end, end)], add: vec![(receiver[m - 1], end)] })
}

pub(super) fn plan_branch(w: &UnicyclicWitness, u: usize, v: usize) -> Result<Plan> {
    let g = w.graph();
    check_vertices(g, u, v)?;
    ensure(w.on_cycle(u), || format!("{u} is not on the cycle"))?;
    ensure(!w.on_cycle(v) && w.root_of(v) == u, || format!("{v} is not in a tree attached at {u}"))?;
    let (du, dv) = (g.deg(u), g.deg(v));
    ensure(dv >= 3, || format!("need d(v) >= 3, got {dv}"))?;
    let path = tree_path(w, u, v);
    ensure(path[1..path.len() - 1].iter().all(|&x| g.deg(x) == 2), || {
        "a vertex strictly between u and v has degree != 2".into()
    })?;
    let kind = if path.len() == 2 { MoveKind::BranchMigrateNear } else { MoveKind::BranchMigrateFar };

    if du >= dv {
        let toward_u = path[path.len() - 2];
        let children = g.neighbors(v).iter().copied().filter(|&x| x != toward_u);
        let keep = heaviest(g, children.clone()).unwrap();
        let movers: Vec<usize> = children.filter(|&x| x != keep).collect();
        Ok(Plan::rehome(kind, v, u, &movers))
    } else {
        // x is the lighter cycle neighbour (d(y) >= d(x)); it is re-routed through v
        let (a, b) = w.cycle_neighbors(u);
        let x = if (g.deg(a), a) <= (g.deg(b), b) { a } else { b };
        let toward_v = path[1];
        let movers: Vec<usize> =
            g.neighbors(u).iter().copied().filter(|&t| !w.on_cycle(t) && t != toward_v).collect();
        let mut plan = Plan::rehome(kind, u, v, &movers);
        plan.remove.push((u, x));
        plan.add.push((v, x));
        Ok(plan)
    }
}

pub(super) fn plan_cycle(w: &UnicyclicWitness, u: usize, v: usize) -> Result<Plan> {
    let g = w.graph();
    check_vertices(g, u, v)?;
    let l = w.cycle_len();
    ensure(l >= 4, || format!("cycle has length {l}, need >= 4"))?;
    let (Some(pu), Some(pv)) = (w.cycle_position(u), w.cycle_position(v)) else {
        return Err(unmet(format!("{u} and {v} must both be on the cycle")));
    };
    for x in [u, v] {
        ensure(!w.trees()[&x].is_empty(), || format!("no path attached to {x}"))?;
        ensure(w.branches_are_paths(x), || format!("branches at {x} are not all paths"))?;
    }
    let cycle = w.cycle();
    let arc = |step: usize| -> Vec<usize> {
        let mut out = vec![u];
        let mut i = pu;
        while i != pv {
            i = (i + step) % l;
            out.push(cycle[i]);
        }
        out
    };
    let eligible = |arc: &Vec<usize>| {
        let d = arc.len() - 1;
        l - d >= 3 && arc[1..d].iter().all(|&x| g.deg(x) == 2)
    };
    let (fwd, back) = (arc(1), arc(l - 1));
    let chosen = match (eligible(&fwd), eligible(&back)) {
        (true, true) if back.len() < fwd.len() => back,
        (true, _) => fwd,
        (false, true) => back,
        (false, false) => {
            return Err(unmet(format!(
                "no u-v arc with degree-2 interior leaving a cycle of length >= 3 ({u}, {v})"
            )))
        }
    };
    let d = chosen.len() - 1;
    let kind = match d {
        1 => MoveKind::CycleShortenByOne,
        2 => MoveKind::CycleShortenByTwo,
        _ => MoveKind::CycleShortenLong,
    };

    // z: pendant end of the longest path at u or v, lowest label on ties
    let paths = [u, v].into_iter().flat_map(|x| w.hanging_paths(x).unwrap());
    let z = paths
        .map(|p| (std::cmp::Reverse(p.len()), *p.last().unwrap()))
        .min()
        .unwrap()
        .1;

    let mut remove: Vec<(usize, usize)> = chosen.windows(2).map(|e| (e[0], e[1])).collect();
    let mut add = Vec::new();
    let arc_prev = chosen[d - 1];
    for &x in g.neighbors(v) {
        if x != arc_prev {
            remove.push((v, x));
            add.push((u, x));
        }
    }
    // freed vertices hang off z as a path ending in v
    let mut prev = z;
    for &x in chosen[1..].iter() {
        add.push((prev, x));
        prev = x;
    }
    Ok(Plan { kind, remove, add })
}

pub(super) fn plan_hub(w: &UnicyclicWitness, u: usize, v: usize) -> Result<Plan> {
    let g = w.graph();
    check_vertices(g, u, v)?;
    ensure(w.cycle_len() == 3, || format!("cycle has length {}, need 3", w.cycle_len()))?;
    ensure(w.on_cycle(u) && w.on_cycle(v), || format!("{u} and {v} must both be on the triangle"))?;
    let (du, dv) = (g.deg(u), g.deg(v));
    ensure(dv >= 3, || format!("{v} has no attached branches"))?;
    ensure(du >= dv, || format!("need d(u) >= d(v), got {du} < {dv}"))?;
    let movers: Vec<usize> = w.tree_neighbors(v).collect();
    Ok(Plan::rehome(MoveKind::HubConsolidate, v, u, &movers))
}

type Planner = fn(&UnicyclicWitness, usize, usize) -> Result<Plan>;

const PLANNERS: [Planner; 6] =
    [plan_tree_adjacent, plan_tree_distant, plan_path, plan_branch, plan_cycle, plan_hub];

pub(super) fn candidate_plans(w: &UnicyclicWitness, u: usize, v: usize) -> Vec<Plan> {
    PLANNERS.iter().filter_map(|p| p(w, u, v).ok()).collect()
}

pub(super) fn plan_for(w: &UnicyclicWitness, kind: MoveKind, u: usize, v: usize) -> Result<Plan> {
    use MoveKind::*;
    let plan = match kind {
        TreeShiftAdjacent => plan_tree_adjacent(w, u, v)?,
        TreeShiftDistant => plan_tree_distant(w, u, v)?,
        PathRebalanceEqual | PathRebalanceStrict => plan_path(w, u, v)?,
        BranchMigrateNear | BranchMigrateFar => plan_branch(w, u, v)?,
        CycleShortenByOne | CycleShortenByTwo | CycleShortenLong => plan_cycle(w, u, v)?,
        HubConsolidate => plan_hub(w, u, v)?,
    };
    ensure(plan.kind == kind, || format!("anchors ({u}, {v}) give {} rather than {kind}", plan.kind))?;
    Ok(plan)
}

fn run(g: &Graph, u: usize, v: usize, planner: Planner) -> Result<Graph> {
    let w = witness(g)?;
    planner(&w, u, v)?.apply(&w)
}

/// Within an attached tree, move all but the heaviest of `v`'s other
/// neighbours onto its neighbour `u`. Needs `d(u) >= d(v) >= 3`.
pub fn tree_shift_adjacent(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    run(g, u, v, plan_tree_adjacent)
}

/// As [`tree_shift_adjacent`] for `u`, `v` joined by a path of degree-2
/// vertices; `v` keeps its path neighbour and its heaviest other neighbour.
pub fn tree_shift_distant(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    run(g, u, v, plan_tree_distant)
}

/// Move the pendant end of the path starting at `pl` to the end of the path
/// starting at `pm`; both paths hang off the same cycle vertex.
pub fn path_rebalance(g: &Graph, pl: usize, pm: usize) -> Result<(Graph, PredictedSign)> {
    let w = witness(g)?;
    let plan = plan_path(&w, pl, pm)?;
    Ok((plan.apply(&w)?, plan.kind.predicted_sign()))
}

/// Collapse a degree >= 3 tree vertex `v` onto its cycle vertex `u`, or, when
/// `d(v) > d(u)`, pull the cycle through `v` and hand it `u`'s branches.
pub fn branch_migrate(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    run(g, u, v, plan_branch)
}

/// Merge cycle vertex `v` into `u`, dropping the arc between them; the freed
/// vertices extend the longest path at the merged vertex.
pub fn cycle_shorten(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    run(g, u, v, plan_cycle)
}

/// On a triangle, move every branch at `v` onto `u`.
pub fn hub_consolidate(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    run(g, u, v, plan_hub)
}
