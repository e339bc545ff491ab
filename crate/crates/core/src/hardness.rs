//! Hard-diagram verification: R3-orbit enumeration, candidate filtering,
//! deduplication and R3-class partitioning.
//!
//! A diagram is hard when its entire R3 orbit admits no R1-/R2- reduction:
//! any simplification must first increase the crossing number.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::diagram::{CanonicalCode, Diagram};
use crate::invariants::jones_capped;
use crate::moves::{apply_move, enumerate_moves, level_simplify, Move, MoveKind, REDUCING_KINDS};

#[derive(Clone, Copy, Debug)]
pub struct OrbitLimits {
    /// Deterministic bound on explored orbit members.
    pub max_diagrams: usize,
    /// Wall-clock guard; exceeding it reports Timeout distinctly.
    pub timeout: Duration,
    pub jones_cap: usize,
}

impl Default for OrbitLimits {
    fn default() -> OrbitLimits {
        OrbitLimits {
            max_diagrams: 100_000,
            timeout: Duration::from_secs(120),
            jones_cap: 64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum HardnessVerdict {
    /// No orbit member reduces; `orbit_size` counts the start diagram.
    Hard { orbit_size: usize },
    /// R3 path from the start to a member with a reducing move.
    NotHard { path: Vec<Move>, simplifying: Move },
    Timeout { explored: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub enum OrbitResult {
    Complete(BTreeSet<CanonicalCode>),
    Timeout { explored: usize },
}

/// Candidate filter: trivial Jones polynomial, and `retries` independently
/// seeded level simplifications all fail to reach the trivial diagram.
pub fn filter_candidate(d: &Diagram, retries: usize, limits: &OrbitLimits) -> bool {
    match jones_capped(d, limits.jones_cap) {
        Ok(v) if v.is_one() => {}
        _ => return false, // nontrivial, or cap exceeded (logged skip)
    }
    if d.n() == 0 {
        return false;
    }
    !(0..retries as u64).any(|seed| level_simplify(d, seed, 1000).reached_trivial)
}

struct OrbitWalk {
    /// Explored diagrams; entry 0 is the start.
    members: Vec<Diagram>,
    /// Predecessor index and the R3 move that reached each member.
    parents: Vec<Option<(usize, Move)>>,
    codes: BTreeSet<CanonicalCode>,
    timed_out: bool,
}

fn walk_orbit(
    d: &Diagram,
    limits: &OrbitLimits,
    mut visit: impl FnMut(usize, &Diagram) -> bool,
) -> OrbitWalk {
    let deadline = Instant::now() + limits.timeout;
    let mut walk = OrbitWalk {
        members: vec![d.clone()],
        parents: vec![None],
        codes: BTreeSet::from([d.canonical_code()]),
        timed_out: false,
    };
    let mut queue = VecDeque::from([0usize]);
    if !visit(0, d) {
        return walk;
    }
    while let Some(i) = queue.pop_front() {
        for m in enumerate_moves(&walk.members[i], &[MoveKind::R3]) {
            let next = apply_move(&walk.members[i], &m).expect("enumerated R3 applies");
            let code = next.canonical_code();
            if !walk.codes.insert(code) {
                continue;
            }
            let j = walk.members.len();
            walk.members.push(next);
            walk.parents.push(Some((i, m)));
            if !visit(j, &walk.members[j]) {
                return walk;
            }
            if walk.members.len() >= limits.max_diagrams || Instant::now() > deadline {
                walk.timed_out = true;
                return walk;
            }
            queue.push_back(j);
        }
    }
    walk
}

/// All diagrams reachable by R3 moves, as canonical codes.
pub fn r3_orbit(d: &Diagram, limits: &OrbitLimits) -> OrbitResult {
    let walk = walk_orbit(d, limits, |_, _| true);
    if walk.timed_out {
        OrbitResult::Timeout { explored: walk.members.len() }
    } else {
        OrbitResult::Complete(walk.codes)
    }
}

/// Hard iff no member of the R3 orbit admits an R1-/R2- move.
pub fn is_hard(d: &Diagram, limits: &OrbitLimits) -> HardnessVerdict {
    let mut witness: Option<(usize, Move)> = None;
    let walk = walk_orbit(d, limits, |i, member| {
        match enumerate_moves(member, &REDUCING_KINDS).into_iter().next() {
            Some(m) => {
                witness = Some((i, m));
                false
            }
            None => true,
        }
    });
    if let Some((i, simplifying)) = witness {
        // reconstruct the R3 path start -> witness member
        let mut path = Vec::new();
        let mut at = i;
        while let Some((p, m)) = &walk.parents[at] {
            path.push(m.clone());
            at = *p;
        }
        path.reverse();
        return HardnessVerdict::NotHard { path, simplifying };
    }
    if walk.timed_out {
        HardnessVerdict::Timeout { explored: walk.members.len() }
    } else {
        HardnessVerdict::Hard { orbit_size: walk.members.len() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Canonical code of each distinct diagram -> R3 class id.
    pub class_of: BTreeMap<CanonicalCode, usize>,
    /// Class ids whose orbit enumeration timed out (singleton, unresolved).
    pub unresolved: BTreeSet<usize>,
}

/// Deduplicate by canonical code, then partition into R3-equivalence
/// classes via shared orbit membership.
pub fn dedup_and_partition(
    diagrams: &[Diagram],
    limits: &OrbitLimits,
) -> (usize, OrbitPartition) {
    let mut distinct: Vec<(CanonicalCode, &Diagram)> = Vec::new();
    let mut seen = BTreeSet::new();
    for d in diagrams {
        let code = d.canonical_code();
        if seen.insert(code.clone()) {
            distinct.push((code, d));
        }
    }
    // union-find over distinct indices
    let mut parent: Vec<usize> = (0..distinct.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let mut orbit_owner: BTreeMap<CanonicalCode, usize> = BTreeMap::new();
    let mut timed_out: BTreeSet<usize> = BTreeSet::new();
    for (i, (code, d)) in distinct.iter().enumerate() {
        match r3_orbit(d, limits) {
            OrbitResult::Complete(codes) => {
                for c in codes {
                    if let Some(&j) = orbit_owner.get(&c) {
                        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                        let (lo, hi) = (ri.min(rj), ri.max(rj));
                        parent[hi] = lo;
                    } else {
                        orbit_owner.insert(c, i);
                    }
                }
            }
            OrbitResult::Timeout { .. } => {
                timed_out.insert(i);
                orbit_owner.entry(code.clone()).or_insert(i);
            }
        }
    }
    // stable class ids in first-seen order
    let mut class_ids: BTreeMap<usize, usize> = BTreeMap::new();
    let mut partition = OrbitPartition::default();
    for (i, (code, _)) in distinct.iter().enumerate() {
        let root = find(&mut parent, i);
        let next = class_ids.len();
        let id = *class_ids.entry(root).or_insert(next);
        partition.class_of.insert(code.clone(), id);
        if timed_out.contains(&i) {
            partition.unresolved.insert(id);
        }
    }
    (distinct.len(), partition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::random_mix;
    use crate::samples;

    fn limits() -> OrbitLimits {
        OrbitLimits { max_diagrams: 10_000, ..OrbitLimits::default() }
    }

    #[test]
    fn trefoil_orbit_is_singleton() {
        match r3_orbit(&samples::trefoil(), &limits()) {
            OrbitResult::Complete(codes) => assert_eq!(codes.len(), 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn kink_is_not_hard() {
        let v = is_hard(&samples::kink(true), &limits());
        match v {
            HardnessVerdict::NotHard { path, simplifying } => {
                assert!(path.is_empty());
                let smaller = apply_move(&samples::kink(true), &simplifying).unwrap();
                assert_eq!(smaller.n(), 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn filter_rejects_knotted_and_easy() {
        let lim = limits();
        assert!(!filter_candidate(&samples::trefoil(), 5, &lim)); // V != 1
        let easy = random_mix(&Diagram::unknot(), 2, 10, 8);
        assert!(!filter_candidate(&easy, 5, &lim)); // simplifies
    }

    #[test]
    fn not_hard_witnesses_replay() {
        // diagrams one R2+ and one R3 away from the trefoil: never hard,
        // and when no immediate reduction exists the witness path is real
        let t = samples::trefoil();
        let mut checked = 0;
        for m in enumerate_moves(&t, &[MoveKind::R2Pos]).into_iter().take(12) {
            let d2 = apply_move(&t, &m).unwrap();
            for r3 in enumerate_moves(&d2, &[MoveKind::R3]).into_iter().take(3) {
                let d3 = apply_move(&d2, &r3).unwrap();
                match is_hard(&d3, &limits()) {
                    HardnessVerdict::NotHard { path, simplifying } => {
                        let mut cur = d3.clone();
                        for p in &path {
                            cur = apply_move(&cur, p).unwrap();
                        }
                        let smaller = apply_move(&cur, &simplifying).unwrap();
                        assert!(smaller.n() < d3.n());
                        if enumerate_moves(&d3, &REDUCING_KINDS).is_empty() {
                            assert!(!path.is_empty());
                        }
                        checked += 1;
                    }
                    other => panic!("R2+ diagram judged {other:?}"),
                }
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn orbit_start_independent() {
        // build a diagram with a nontrivial R3 orbit
        let t = samples::trefoil();
        let m = enumerate_moves(&t, &[MoveKind::R2Pos]).into_iter().next().unwrap();
        let d = apply_move(&t, &m).unwrap();
        let r3 = enumerate_moves(&d, &[MoveKind::R3]).into_iter().next().unwrap();
        let d2 = apply_move(&d, &r3).unwrap();
        let (a, b) = (r3_orbit(&d, &limits()), r3_orbit(&d2, &limits()));
        assert_eq!(a, b);
        if let OrbitResult::Complete(codes) = a {
            assert!(codes.len() >= 2);
        }
    }

    #[test]
    fn dedup_and_partition_basics() {
        let t = samples::trefoil();
        // same diagram serialized differently: rotate the crossing list
        let rotated = Diagram::parse_pd("[[3,6,4,1],[5,2,6,3],[1,4,2,5]]").unwrap();
        let (count, part) = dedup_and_partition(&[t.clone(), rotated], &limits());
        assert_eq!(count, 1);
        assert_eq!(part.class_of.len(), 1);

        // two R3-related distinct diagrams: 2 distinct, 1 class
        let m = enumerate_moves(&t, &[MoveKind::R2Pos]).into_iter().next().unwrap();
        let d = apply_move(&t, &m).unwrap();
        let r3 = enumerate_moves(&d, &[MoveKind::R3]).into_iter().next().unwrap();
        let d2 = apply_move(&d, &r3).unwrap();
        assert_ne!(d.canonical_code(), d2.canonical_code());
        let (count, part) = dedup_and_partition(&[d.clone(), d2], &limits());
        assert_eq!(count, 2);
        let ids: BTreeSet<usize> = part.class_of.values().copied().collect();
        assert_eq!(ids.len(), 1);

        // disjoint fixtures: classes = distinct
        let (count, part) =
            dedup_and_partition(&[t.clone(), samples::figure_eight()], &limits());
        assert_eq!(count, 2);
        let ids: BTreeSet<usize> = part.class_of.values().copied().collect();
        assert_eq!(ids.len(), 2);
    }
}
