//! Pass moves: lift out a maximal over- (or under-) bridge and re-lay the
//! strand along a shortest face route.
//!
//! Removing a run of same-level transits cuts the diagram open; the faces on
//! either side of every removed strand edge merge into regions. The new
//! strand is routed between the cut endpoints through the region-adjacency
//! (dual) graph, paying one new crossing per surviving edge traversed. A
//! breadth-first search with deterministic tie-breaking yields the cheapest
//! route; rebuilding through pass-sequence surgery validates the result.

use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{KnotError, Result};
use crate::surgery::{SurgPass, SurgSeq};

/// One edge traversal of a pass-move route. `from_right` records which side
/// of the crossed edge the new strand arrives from, fixing the handedness of
/// the crossing it creates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteStep {
    pub edge: usize,
    pub from_right: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PassMove {
    /// First pass index of the lifted run.
    pub run_start: usize,
    /// Number of consecutive same-level transits removed.
    pub run_len: usize,
    /// True if the lifted strand passes over throughout (an over-bridge).
    pub over: bool,
    /// Edges crossed by the re-laid strand, in order of travel.
    pub route: Vec<RouteStep>,
}

// ---------------------------------------------------------------------------
// Region structure of the cut diagram
// ---------------------------------------------------------------------------

struct Uf(Vec<usize>);

impl Uf {
    fn new(n: usize) -> Uf {
        Uf((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // keep the smaller id as representative for determinism
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.0[hi] = lo;
    }
}

struct Regions {
    /// Region class of each original face.
    class_of_face: Vec<usize>,
    /// Region on the right / left of each edge's direction of travel.
    edge_sides: Vec<(usize, usize)>,
    start: usize,
    end: usize,
}

fn in_run(i: usize, run_start: usize, run_len: usize, two_n: usize) -> bool {
    (i + two_n - run_start) % two_n < run_len
}

/// Faces of the cut diagram, as merged classes of the original faces.
fn cut_regions(d: &Diagram, run_start: usize, run_len: usize) -> Regions {
    let two_n = 2 * d.n();
    let faces = d.faces();
    let ed = d.edge_darts();
    let mut edge_sides = Vec::with_capacity(two_n);
    for e in 0..two_n {
        let (tail, head) = d.edge_tail_head(&ed, e);
        edge_sides.push((faces.face_of[tail as usize], faces.face_of[head as usize]));
    }
    let mut uf = Uf::new(faces.faces.len());
    for off in 0..=run_len {
        let e = (run_start + off) % two_n;
        let (r, l) = edge_sides[e];
        uf.union(r, l);
    }
    let start = uf.find(edge_sides[run_start].0);
    let end = uf.find(edge_sides[(run_start + run_len) % two_n].0);
    let class_of_face: Vec<usize> = (0..faces.faces.len()).map(|f| uf.find(f)).collect();
    let edge_sides = edge_sides
        .iter()
        .map(|&(r, l)| (class_of_face[r], class_of_face[l]))
        .collect();
    Regions { class_of_face, edge_sides, start, end }
}

/// Shortest region route for the lifted strand, with deterministic
/// tie-breaking (breadth-first, neighbors in edge-label order).
fn best_route(d: &Diagram, run_start: usize, run_len: usize) -> Vec<RouteStep> {
    let two_n = 2 * d.n();
    let reg = cut_regions(d, run_start, run_len);
    if reg.start == reg.end {
        return Vec::new();
    }
    let n_classes = reg.class_of_face.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_classes];
    for e in 0..two_n {
        if in_run(e, run_start, run_len + 1, two_n) {
            continue; // removed strand edges cannot be crossed
        }
        let (r, l) = reg.edge_sides[e];
        if r == l {
            continue;
        }
        adj[r].push((l, e));
        adj[l].push((r, e));
    }
    for a in adj.iter_mut() {
        a.sort_unstable_by_key(|&(_, e)| e);
    }
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n_classes];
    let mut seen = vec![false; n_classes];
    seen[reg.start] = true;
    let mut queue = std::collections::VecDeque::from([reg.start]);
    while let Some(c) = queue.pop_front() {
        if c == reg.end {
            break;
        }
        for &(to, e) in &adj[c] {
            if !seen[to] {
                seen[to] = true;
                parent[to] = Some((c, e));
                queue.push_back(to);
            }
        }
    }
    debug_assert!(seen[reg.end], "face dual graph of a planar diagram is connected");
    let mut steps = Vec::new();
    let mut c = reg.end;
    while let Some((prev, e)) = parent[c] {
        let (r, _) = reg.edge_sides[e];
        steps.push(RouteStep { edge: e, from_right: r == prev });
        c = prev;
    }
    steps.reverse();
    steps
}

// ---------------------------------------------------------------------------
// Enumeration and application
// ---------------------------------------------------------------------------

/// One move per maximal same-level run of length >= 2, carrying the cheapest
/// reroute found for it. Callers wanting simplification filter on
/// `route.len() < run_len`.
pub fn enumerate_pass_moves(d: &Diagram) -> Vec<PassMove> {
    let two_n = 2 * d.n();
    if two_n < 4 {
        return Vec::new();
    }
    let passes = d.passes();
    let mut out = Vec::new();
    for r in 0..two_n {
        let prev = (r + two_n - 1) % two_n;
        if passes[prev].under == passes[r].under {
            continue; // not the start of a maximal run
        }
        let mut len = 1;
        while len < two_n && passes[(r + len) % two_n].under == passes[r].under {
            len += 1;
        }
        if len < 2 {
            continue;
        }
        let route = best_route(d, r, len);
        out.push(PassMove { run_start: r, run_len: len, over: !passes[r].under, route });
    }
    out.sort_unstable_by_key(|m| m.run_start);
    out
}

pub(super) fn apply_pass(d: &Diagram, m: &PassMove) -> Result<(Diagram, Vec<Option<usize>>)> {
    let two_n = 2 * d.n();
    let stale = |msg: &str| KnotError::StaleMove(msg.to_string());
    if m.run_len < 2 || m.run_len >= two_n || m.run_start >= two_n {
        return Err(stale("run out of range"));
    }
    let passes = d.passes();
    let s_under = !m.over;
    for off in 0..m.run_len {
        if passes[(m.run_start + off) % two_n].under != s_under {
            return Err(stale("run is no longer a same-level bridge"));
        }
    }
    // replay the route against the current region structure; this rejects
    // stale routes that would otherwise re-lay the strand incorrectly
    let reg = cut_regions(d, m.run_start, m.run_len);
    let mut at = reg.start;
    for step in &m.route {
        if step.edge >= two_n || in_run(step.edge, m.run_start, m.run_len + 1, two_n) {
            return Err(stale("route crosses a removed edge"));
        }
        let (r, l) = reg.edge_sides[step.edge];
        let from = if step.from_right { r } else { l };
        let to = if step.from_right { l } else { r };
        if from != at {
            return Err(stale("route is not contiguous in the cut diagram"));
        }
        at = to;
    }
    if at != reg.end {
        return Err(stale("route does not reach the cut endpoint"));
    }

    let mut seq = SurgSeq::from_diagram(d);
    let old = seq.passes.clone();
    // crossings on the lifted bridge disappear entirely: both their run-side
    // and partner-side transits go
    let mut removed_key = vec![false; d.n()];
    for off in 0..m.run_len {
        removed_key[old[(m.run_start + off) % two_n].key] = true;
    }
    // one new crossing per route step; handedness from the approach side
    let mut keys = Vec::with_capacity(m.route.len());
    for step in &m.route {
        let over_in = if step.from_right == m.over { 1 } else { 3 };
        keys.push(seq.push_crossing(over_in));
    }
    // partner transits: crossing edge e adds a transit on e, i.e. just
    // before e's head pass in the old indexing
    let mut before: Vec<Vec<SurgPass>> = vec![Vec::new(); two_n];
    for (j, step) in m.route.iter().enumerate() {
        before[step.edge].push(SurgPass { key: keys[j], under: m.over });
    }
    let mut out = Vec::with_capacity(two_n + 2 * m.route.len() - m.run_len);
    for i in 0..two_n {
        out.extend_from_slice(&before[i]);
        if i == m.run_start {
            for &k in &keys {
                out.push(SurgPass { key: k, under: s_under });
            }
        }
        if !in_run(i, m.run_start, m.run_len, two_n) && !removed_key[old[i].key] {
            out.push(old[i]);
        }
    }
    seq.passes = out;
    seq.rebuild()
}
