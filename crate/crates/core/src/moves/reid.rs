//! Reidemeister move detection and application.
//!
//! All applications go through pass-sequence surgery (`SurgSeq`): edit the
//! transit sequence, rebuild, and let full validation (including the planar
//! Euler count) reject any inconsistent site.

use crate::diagram::{dart_crossing, dart_pos, Diagram};
use crate::error::{KnotError, Result};
use crate::surgery::{SurgPass, SurgSeq};

use super::Move;

type Traced = (Diagram, Vec<Option<usize>>);

fn stale(msg: impl Into<String>) -> KnotError {
    KnotError::StaleMove(msg.into())
}

/// Position parity: positions 1/3 carry the over-strand.
#[inline]
fn is_over_pos(p: u8) -> bool {
    p % 2 == 1
}

// ---------------------------------------------------------------------------
// R1
// ---------------------------------------------------------------------------

fn kink_position(d: &Diagram, c: usize) -> Option<u8> {
    let e = d.crossings()[c].edges;
    (0..4u8).find(|&p| e[p as usize] == e[((p + 1) % 4) as usize])
}

pub(super) fn enumerate_r1_neg(d: &Diagram, out: &mut Vec<Move>) {
    for c in 0..d.n() {
        if kink_position(d, c).is_some() {
            out.push(Move::R1Neg { crossing: c });
        }
    }
}

pub(super) fn apply_r1_neg(d: &Diagram, c: usize) -> Result<Traced> {
    if c >= d.n() {
        return Err(stale(format!("crossing {c} out of range")));
    }
    if kink_position(d, c).is_none() {
        return Err(stale(format!("crossing {c} is not a kink")));
    }
    let mut seq = SurgSeq::from_diagram(d);
    seq.remove_keys(&[c]);
    seq.rebuild()
}

/// Edge count for enumeration purposes; the 0-crossing unknot has one edge.
fn edge_count(d: &Diagram) -> usize {
    (2 * d.n()).max(1)
}

pub(super) fn enumerate_r1_pos(d: &Diagram, out: &mut Vec<Move>) {
    for edge in 0..edge_count(d) {
        for over_first in [false, true] {
            for over_in in [1u8, 3] {
                out.push(Move::R1Pos { edge, over_first, over_in });
            }
        }
    }
}

pub(super) fn apply_r1_pos(d: &Diagram, edge: usize, over_first: bool, over_in: u8) -> Result<Traced> {
    if edge >= edge_count(d) {
        return Err(stale(format!("edge {edge} out of range")));
    }
    if over_in != 1 && over_in != 3 {
        return Err(stale("over_in must be 1 or 3"));
    }
    let mut seq = SurgSeq::from_diagram(d);
    let k = seq.push_crossing(over_in);
    let at = edge % (seq.passes.len() + 1).max(1);
    let pair = if over_first {
        [SurgPass { key: k, under: false }, SurgPass { key: k, under: true }]
    } else {
        [SurgPass { key: k, under: true }, SurgPass { key: k, under: false }]
    };
    seq.passes.splice(at..at, pair);
    seq.rebuild()
}

// ---------------------------------------------------------------------------
// R2
// ---------------------------------------------------------------------------

/// Bigon faces where one strand is over at both crossings.
fn r2_bigons(d: &Diagram) -> Vec<(usize, usize)> {
    let faces = d.faces();
    let mut out = Vec::new();
    for orbit in &faces.faces {
        if orbit.len() != 2 {
            continue;
        }
        let (d1, d2) = (orbit[0], orbit[1]);
        let (c1, c2) = (dart_crossing(d1), dart_crossing(d2));
        if c1 == c2 {
            continue;
        }
        let e1 = d.crossings()[c1].edges[dart_pos(d1) as usize];
        let e2 = d.crossings()[c2].edges[dart_pos(d2) as usize];
        // position of each boundary edge at each crossing
        let pos_at = |c: usize, e: usize, skip: u8| -> u8 {
            (0..4u8)
                .find(|&p| p != skip && d.crossings()[c].edges[p as usize] == e)
                .or_else(|| (0..4u8).find(|&p| d.crossings()[c].edges[p as usize] == e))
                .unwrap()
        };
        let e1_c1 = dart_pos(d1);
        let e1_c2 = pos_at(c2, e1, u8::MAX);
        let e2_c2 = dart_pos(d2);
        let e2_c1 = pos_at(c1, e2, u8::MAX);
        let e1_uniform = is_over_pos(e1_c1) == is_over_pos(e1_c2);
        let e2_uniform = is_over_pos(e2_c1) == is_over_pos(e2_c2);
        if e1_uniform && e2_uniform && is_over_pos(e1_c1) != is_over_pos(e2_c1) {
            out.push((c1.min(c2), c1.max(c2)));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub(super) fn enumerate_r2_neg(d: &Diagram, out: &mut Vec<Move>) {
    for (c1, c2) in r2_bigons(d) {
        out.push(Move::R2Neg { c1, c2 });
    }
}

pub(super) fn apply_r2_neg(d: &Diagram, c1: usize, c2: usize) -> Result<Traced> {
    let key = (c1.min(c2), c1.max(c2));
    if !r2_bigons(d).contains(&key) {
        return Err(stale(format!("no cancellable bigon between {c1} and {c2}")));
    }
    let mut seq = SurgSeq::from_diagram(d);
    seq.remove_keys(&[c1, c2]);
    seq.rebuild()
}

pub(super) fn enumerate_r2_pos(d: &Diagram, out: &mut Vec<Move>) {
    let faces = d.faces();
    for orbit in &faces.faces {
        for &da in orbit {
            for &db in orbit {
                if da == db {
                    continue;
                }
                let ea = d.crossings()[dart_crossing(da)].edges[dart_pos(da) as usize];
                let eb = d.crossings()[dart_crossing(db)].edges[dart_pos(db) as usize];
                if ea == eb {
                    continue;
                }
                for over in [false, true] {
                    out.push(Move::R2Pos { dart_a: da, dart_b: db, over });
                }
            }
        }
    }
}

pub(super) fn apply_r2_pos(d: &Diagram, dart_a: u32, dart_b: u32, over: bool) -> Result<Traced> {
    let n = d.n();
    if dart_a as usize >= 4 * n || dart_b as usize >= 4 * n {
        return Err(stale("dart out of range"));
    }
    let faces = d.faces();
    if faces.face_of[dart_a as usize] != faces.face_of[dart_b as usize] {
        return Err(stale("darts no longer border a common face"));
    }
    let e1 = d.crossings()[dart_crossing(dart_a)].edges[dart_pos(dart_a) as usize];
    let e2 = d.crossings()[dart_crossing(dart_b)].edges[dart_pos(dart_b) as usize];
    if e1 == e2 {
        return Err(stale("cannot poke an edge across itself"));
    }
    let ed = d.edge_darts();
    // +1 if the face walk along the edge matches the knot direction
    let orient = |dd: u32, e: usize| -> i32 {
        let (tail, _) = d.edge_tail_head(&ed, e);
        if tail == dd {
            1
        } else {
            -1
        }
    };
    let or1 = orient(dart_a, e1);
    let or2 = orient(dart_b, e2);
    // handedness: the poked strand approaches e2 from its right iff or2 = +1
    let over_in_x1: u8 = if (or2 == 1) == over { 1 } else { 3 };
    let over_in_x2: u8 = 4 - over_in_x1;
    let mut seq = SurgSeq::from_diagram(d);
    let x1 = seq.push_crossing(over_in_x1);
    let x2 = seq.push_crossing(over_in_x2);
    let s_pair = [SurgPass { key: x1, under: !over }, SurgPass { key: x2, under: !over }];
    // along e2's own direction the transits come in strand order only when
    // the two face sides are traversed with opposite knot orientations
    let t_pair = if or1 * or2 == -1 {
        [SurgPass { key: x1, under: over }, SurgPass { key: x2, under: over }]
    } else {
        [SurgPass { key: x2, under: over }, SurgPass { key: x1, under: over }]
    };
    let mut passes = Vec::with_capacity(seq.passes.len() + 4);
    for (i, p) in seq.passes.iter().enumerate() {
        if i == e1 {
            passes.extend_from_slice(&s_pair);
        }
        if i == e2 {
            passes.extend_from_slice(&t_pair);
        }
        passes.push(*p);
    }
    seq.passes = passes;
    seq.rebuild()
}

// ---------------------------------------------------------------------------
// R3
// ---------------------------------------------------------------------------

/// For a triangle face side `dart`, return (edge, apex) if the edge is
/// over at both its crossings or under at both.
fn r3_site(d: &Diagram, faces: &crate::diagram::Faces, dart: u32) -> Option<(usize, usize)> {
    let f = faces.face_of[dart as usize];
    let orbit = &faces.faces[f];
    if orbit.len() != 3 {
        return None;
    }
    let cs: Vec<usize> = orbit.iter().map(|&dd| dart_crossing(dd)).collect();
    if cs[0] == cs[1] || cs[1] == cs[2] || cs[0] == cs[2] {
        return None;
    }
    let ed = d.edge_darts();
    let e = d.crossings()[dart_crossing(dart)].edges[dart_pos(dart) as usize];
    let mate = d.mate(&ed, dart);
    let (ca, cb) = (dart_crossing(dart), dart_crossing(mate));
    if is_over_pos(dart_pos(dart)) != is_over_pos(dart_pos(mate)) {
        return None;
    }
    let apex = *cs.iter().find(|&&c| c != ca && c != cb)?;
    Some((e, apex))
}

pub(super) fn enumerate_r3(d: &Diagram, out: &mut Vec<Move>) {
    let faces = d.faces();
    for orbit in &faces.faces {
        if orbit.len() != 3 {
            continue;
        }
        for &dart in orbit {
            if let Some((_, apex)) = r3_site(d, &faces, dart) {
                out.push(Move::R3 { dart: dart as usize, apex });
            }
        }
    }
}

pub(super) fn apply_r3(d: &Diagram, dart: usize, apex: usize) -> Result<Traced> {
    let n = d.n();
    let dart = dart as u32;
    if (dart as usize) >= 4 * n {
        return Err(stale("dart out of range"));
    }
    let faces = d.faces();
    let (e, found_apex) = r3_site(d, &faces, dart)
        .ok_or_else(|| stale("no slidable triangle at this site"))?;
    if found_apex != apex {
        return Err(stale(format!("triangle apex moved: {found_apex} != {apex}")));
    }
    let two_n = 2 * n;
    let passes = d.passes();
    let i2 = e;
    let i1 = (e + two_n - 1) % two_n;
    let c_first = passes[i1].crossing;
    let c_second = passes[i2].crossing;
    let s_under = passes[i1].under;
    debug_assert_eq!(s_under, passes[i2].under);
    // the other two triangle edges: eb touches c_first, ec touches c_second
    let f = faces.face_of[dart as usize];
    let ed = d.edge_darts();
    let mut eb = usize::MAX;
    let mut ec = usize::MAX;
    for &dd in &faces.faces[f] {
        let ee = d.crossings()[dart_crossing(dd)].edges[dart_pos(dd) as usize];
        if ee == e {
            continue;
        }
        let (ca, cb) = (dart_crossing(dd), dart_crossing(d.mate(&ed, dd)));
        if ca == c_first || cb == c_first {
            eb = ee;
        } else {
            debug_assert!(ca == c_second || cb == c_second);
            ec = ee;
        }
    }
    if eb == usize::MAX || ec == usize::MAX {
        return Err(stale("degenerate triangle"));
    }
    // strand B's transits at c_first and at the apex
    let other_at = |c: usize, not: usize| -> usize {
        (0..two_n).find(|&i| passes[i].crossing == c && i != not).unwrap()
    };
    let j1 = other_at(c_first, i1);
    let k2 = other_at(c_second, i2);
    let (j3, b_after) = if passes[eb].crossing == apex {
        (eb, true)
    } else {
        ((eb + two_n - 1) % two_n, false)
    };
    let (k3, c_after) = if passes[ec].crossing == apex {
        (ec, true)
    } else {
        ((ec + two_n - 1) % two_n, false)
    };
    debug_assert_ne!(j3, k3);
    let b_under = passes[j1].under;
    let c_under = passes[k2].under;

    let seq = SurgSeq::from_diagram(d);
    let mut out = Vec::with_capacity(two_n);
    for i in 0..two_n {
        if i == i1 {
            out.push(SurgPass { key: c_second, under: s_under });
        } else if i == i2 {
            out.push(SurgPass { key: c_first, under: s_under });
        } else if i == j1 || i == k2 {
            // removed: these transits migrate past the apex
        } else if i == j3 {
            if b_after {
                out.push(seq.passes[i]);
                out.push(SurgPass { key: c_first, under: b_under });
            } else {
                out.push(SurgPass { key: c_first, under: b_under });
                out.push(seq.passes[i]);
            }
        } else if i == k3 {
            if c_after {
                out.push(seq.passes[i]);
                out.push(SurgPass { key: c_second, under: c_under });
            } else {
                out.push(SurgPass { key: c_second, under: c_under });
                out.push(seq.passes[i]);
            }
        } else {
            out.push(seq.passes[i]);
        }
    }
    let mut seq = seq;
    seq.passes = out;
    seq.rebuild()
}
