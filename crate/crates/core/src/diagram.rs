//! Planar diagram (PD) data model.
//!
//! A diagram is a list of crossings, each a 4-tuple of edge labels read
//! counterclockwise from the incoming under-strand. Edge labels run
//! consecutively along the knot (mod 2n), which is how orientation is
//! recovered from the raw tuples. The over-strand's incoming position
//! (1 or 3) is resolved once at construction and carried explicitly so that
//! diagram surgery never has to re-derive it from label arithmetic.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{KnotError, Result};

/// A dart is one of the four edge-ends at a crossing, encoded as `4*c + p`.
pub(crate) type Dart = u32;

#[inline]
pub(crate) fn dart(c: usize, p: u8) -> Dart {
    (c as u32) * 4 + p as u32
}

#[inline]
pub(crate) fn dart_crossing(d: Dart) -> usize {
    (d / 4) as usize
}

#[inline]
pub(crate) fn dart_pos(d: Dart) -> u8 {
    (d % 4) as u8
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    /// Edge labels, counterclockwise from the incoming under-strand.
    pub edges: [usize; 4],
    /// Position (1 or 3) where the over-strand enters.
    pub over_in: u8,
}

impl Crossing {
    #[inline]
    pub fn over_out(&self) -> u8 {
        4 - self.over_in
    }

    /// +1 if the over-strand enters at position 3, -1 otherwise.
    #[inline]
    pub fn sign(&self) -> i8 {
        if self.over_in == 3 {
            1
        } else {
            -1
        }
    }

    /// Over/under swap. The tuple is re-rooted at the old over-strand's
    /// incoming edge, which becomes the new under-strand.
    pub fn switched(&self) -> Crossing {
        let e = self.edges;
        if self.over_in == 1 {
            Crossing { edges: [e[1], e[2], e[3], e[0]], over_in: 3 }
        } else {
            Crossing { edges: [e[3], e[0], e[1], e[2]], over_in: 1 }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BracketStyle {
    /// `[[a,b,c,d],...]`
    Square,
    /// `[(a,b,c,d),...]`
    Paren,
}

/// One transit of a crossing along the knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pass {
    pub crossing: usize,
    /// true if the strand passes under at this crossing
    pub under: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    /// Label base of the original text (0 or 1), kept for round-tripping.
    label_base: u8,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings
    }
}
impl Eq for Diagram {}

impl Diagram {
    /// The zero-crossing unknot diagram.
    pub fn unknot() -> Diagram {
        Diagram { crossings: Vec::new(), label_base: 0 }
    }

    pub fn n(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, i: usize) -> Result<&Crossing> {
        self.crossings.get(i).ok_or(KnotError::IndexOutOfRange { index: i, n: self.n() })
    }

    pub fn label_base(&self) -> u8 {
        self.label_base
    }


    pub(crate) fn from_parts_unvalidated(crossings: Vec<Crossing>, label_base: u8) -> Diagram {
        Diagram { crossings, label_base }
    }

    // ------------------------------------------------------------------
    // Parsing and serialization
    // ------------------------------------------------------------------

    pub fn parse_pd(text: &str) -> Result<Diagram> {
        let tuples = parse_tuples(text)?;
        Self::from_tuples(&tuples)
    }

    /// Build from raw 4-tuples (0- or 1-based, auto-detected).
    pub fn from_tuples(tuples: &[[i64; 4]]) -> Result<Diagram> {
        if tuples.is_empty() {
            return Ok(Diagram::unknot());
        }
        let min = tuples.iter().flatten().copied().min().unwrap();
        let label_base: u8 = if min == 0 {
            0
        } else if min == 1 {
            1
        } else {
            return Err(KnotError::Validation(format!(
                "smallest edge label is {min}; expected 0 or 1"
            )));
        };
        let n = tuples.len();
        let two_n = 2 * n;
        let mut counts = vec![0usize; two_n];
        let mut crossings = Vec::with_capacity(n);
        for t in tuples {
            let mut edges = [0usize; 4];
            for (k, &v) in t.iter().enumerate() {
                let v = v - label_base as i64;
                if v < 0 || v as usize >= two_n {
                    return Err(KnotError::Validation(format!(
                        "edge label {} out of range [{}, {}]",
                        v + label_base as i64,
                        label_base,
                        two_n - 1 + label_base as usize
                    )));
                }
                edges[k] = v as usize;
                counts[v as usize] += 1;
            }
            crossings.push(Crossing { edges, over_in: 0 });
        }
        for (e, &c) in counts.iter().enumerate() {
            if c != 2 {
                return Err(KnotError::Validation(format!(
                    "label {} occurs {} times (expected 2)",
                    e + label_base as usize,
                    c
                )));
            }
        }
        for cr in crossings.iter_mut() {
            cr.over_in = derive_over_in(&cr.edges, two_n)?;
        }
        let d = Diagram { crossings, label_base };
        d.validate()?;
        Ok(d)
    }

    pub fn serialize_pd(&self, style: BracketStyle) -> String {
        let (open, close) = match style {
            BracketStyle::Square => ('[', ']'),
            BracketStyle::Paren => ('(', ')'),
        };
        let mut out = String::from("[");
        for (i, c) in self.crossings.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let e = c.edges;
            let _ = write!(out, "{open}{},{},{},{}{close}", e[0], e[1], e[2], e[3]);
        }
        out.push(']');
        out
    }

    // ------------------------------------------------------------------
    // Structural accessors
    // ------------------------------------------------------------------

    /// For each edge label, its two darts (in encounter order over tuples).
    pub(crate) fn edge_darts(&self) -> Vec<[Dart; 2]> {
        let two_n = 2 * self.n();
        let mut out = vec![[u32::MAX; 2]; two_n];
        for (c, cr) in self.crossings.iter().enumerate() {
            for p in 0..4u8 {
                let e = cr.edges[p as usize];
                let slot = &mut out[e];
                if slot[0] == u32::MAX {
                    slot[0] = dart(c, p);
                } else {
                    debug_assert_eq!(slot[1], u32::MAX);
                    slot[1] = dart(c, p);
                }
            }
        }
        out
    }

    pub(crate) fn mate(&self, edge_darts: &[[Dart; 2]], d: Dart) -> Dart {
        let c = dart_crossing(d);
        let e = self.crossings[c].edges[dart_pos(d) as usize];
        let [a, b] = edge_darts[e];
        if a == d {
            b
        } else {
            a
        }
    }

    /// Is this dart an incoming edge-end (head of its edge)?
    #[inline]
    pub(crate) fn is_in_dart(&self, d: Dart) -> bool {
        let p = dart_pos(d);
        p == 0 || p == self.crossings[dart_crossing(d)].over_in
    }

    /// (tail dart, head dart) of an edge. The face containing the tail dart
    /// lies to the right of the edge's direction of travel.
    pub(crate) fn edge_tail_head(&self, edge_darts: &[[Dart; 2]], e: usize) -> (Dart, Dart) {
        let [a, b] = edge_darts[e];
        if self.is_in_dart(a) && !self.is_in_dart(b) {
            (b, a)
        } else if self.is_in_dart(b) && !self.is_in_dart(a) {
            (a, b)
        } else {
            // loop edge: both darts at one crossing, exactly one is an entry
            debug_assert_eq!(dart_crossing(a), dart_crossing(b));
            if self.is_in_dart(a) {
                (b, a)
            } else {
                (a, b)
            }
        }
    }

    /// The traversal of the knot, starting at the pass entered by edge 0.
    /// `passes()[i]` is entered via edge label `i`.
    pub fn passes(&self) -> Vec<Pass> {
        let n = self.n();
        if n == 0 {
            return Vec::new();
        }
        let ed = self.edge_darts();
        let mut out = Vec::with_capacity(2 * n);
        let mut e = 0usize;
        for _ in 0..2 * n {
            let [a, b] = ed[e];
            let head = if self.is_in_dart(a) && !self.is_in_dart(b) {
                a
            } else if self.is_in_dart(b) && !self.is_in_dart(a) {
                b
            } else {
                // kinks: both at the same crossing; exactly one is an entry
                debug_assert!(dart_crossing(a) == dart_crossing(b));
                if self.is_in_dart(a) {
                    a
                } else {
                    b
                }
            };
            let c = dart_crossing(head);
            let p = dart_pos(head);
            out.push(Pass { crossing: c, under: p == 0 });
            let exit = if p == 0 { 2 } else { self.crossings[c].over_out() };
            e = self.crossings[c].edges[exit as usize];
        }
        out
    }

    /// Full structural validation: labels, orientation consistency, single
    /// component, planarity (Euler count).
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if n == 0 {
            return Ok(());
        }
        let two_n = 2 * n;
        let mut counts = vec![0usize; two_n];
        for cr in &self.crossings {
            if cr.over_in != 1 && cr.over_in != 3 {
                return Err(KnotError::Validation("over_in must be 1 or 3".into()));
            }
            for &e in &cr.edges {
                if e >= two_n {
                    return Err(KnotError::Validation(format!("edge label {e} out of range")));
                }
                counts[e] += 1;
            }
        }
        for (e, &c) in counts.iter().enumerate() {
            if c != 2 {
                return Err(KnotError::Validation(format!(
                    "label {e} occurs {c} times (expected 2)"
                )));
            }
        }
        // orientation: follow the strand and require consecutive labels
        let ed = self.edge_darts();
        let mut e = 0usize;
        let mut visits = vec![0u8; n];
        for _ in 0..two_n {
            let [a, b] = ed[e];
            let (ha, hb) = (self.is_in_dart(a), self.is_in_dart(b));
            let head = match (ha, hb) {
                (true, false) => a,
                (false, true) => b,
                _ => {
                    if dart_crossing(a) == dart_crossing(b) && ha != hb {
                        if ha {
                            a
                        } else {
                            b
                        }
                    } else {
                        return Err(KnotError::Validation(format!(
                            "edge {e} does not have exactly one head and one tail \
                             (multi-component or inconsistent orientation)"
                        )));
                    }
                }
            };
            let c = dart_crossing(head);
            let p = dart_pos(head);
            visits[c] += 1;
            let exit = if p == 0 { 2 } else { self.crossings[c].over_out() };
            let out_e = self.crossings[c].edges[exit as usize];
            if out_e != (e + 1) % two_n {
                return Err(KnotError::Validation(format!(
                    "edge labels not consecutive along the strand at crossing {c} \
                     (expected {}, found {out_e}; multi-component or inconsistent orientation)",
                    (e + 1) % two_n
                )));
            }
            e = out_e;
        }
        if visits.iter().any(|&v| v != 2) {
            return Err(KnotError::MultiComponent);
        }
        // planarity: a knot shadow on the sphere has n + 2 faces
        let f = self.faces().faces.len();
        if f != n + 2 {
            return Err(KnotError::Validation(format!(
                "face count {f} != n + 2 = {} (not a planar diagram)",
                n + 2
            )));
        }
        Ok(())
    }

    // ------------------------------------------------------------------
    // Faces
    // ------------------------------------------------------------------

    /// Face structure of the underlying 4-valent plane graph. Faces are
    /// orbits of `d -> rot(mate(d))`; each face lies to the right of its
    /// darts' traversal direction.
    pub(crate) fn faces(&self) -> Faces {
        let n = self.n();
        let ed = self.edge_darts();
        let mut face_of = vec![usize::MAX; 4 * n];
        let mut faces = Vec::new();
        for start in 0..(4 * n) as u32 {
            if face_of[start as usize] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut orbit = Vec::new();
            let mut d = start;
            loop {
                face_of[d as usize] = id;
                orbit.push(d);
                let m = self.mate(&ed, d);
                d = (m & !3) | ((m + 1) & 3);
                if d == start {
                    break;
                }
            }
            faces.push(orbit);
        }
        Faces { faces, face_of }
    }

    // ------------------------------------------------------------------
    // Elementary operations
    // ------------------------------------------------------------------

    pub fn change_crossing(&self, i: usize) -> Result<Diagram> {
        if i >= self.n() {
            return Err(KnotError::IndexOutOfRange { index: i, n: self.n() });
        }
        let mut crossings = self.crossings.clone();
        crossings[i] = crossings[i].switched();
        let d = Diagram { crossings, label_base: self.label_base };
        debug_assert!(d.validate().is_ok());
        Ok(d)
    }

    pub fn mirror(&self) -> Diagram {
        let crossings = self.crossings.iter().map(|c| c.switched()).collect();
        let d = Diagram { crossings, label_base: self.label_base };
        debug_assert!(d.validate().is_ok());
        d
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign() as i64).sum()
    }

    /// Cut edge `e1` of `self` and edge `e2` of `other` and splice.
    pub fn connected_sum(&self, e1: usize, other: &Diagram, e2: usize) -> Result<Diagram> {
        if self.n() == 0 {
            return Ok(other.clone());
        }
        if other.n() == 0 {
            return Ok(self.clone());
        }
        if e1 >= 2 * self.n() {
            return Err(KnotError::InvalidEdge { label: e1 });
        }
        if e2 >= 2 * other.n() {
            return Err(KnotError::InvalidEdge { label: e2 });
        }
        let p1 = self.passes();
        let p2 = other.passes();
        let n1 = self.n();
        let mut seq = crate::surgery::SurgSeq::new();
        for cr in self.crossings.iter().chain(other.crossings.iter()) {
            seq.push_crossing(cr.over_in);
        }
        for i in 0..p1.len() {
            let p = p1[(e1 + i) % p1.len()];
            seq.push_pass(p.crossing, p.under);
        }
        for i in 0..p2.len() {
            let p = p2[(e2 + i) % p2.len()];
            seq.push_pass(n1 + p.crossing, p.under);
        }
        let (d, _) = seq.rebuild()?;
        Ok(d)
    }

    // ------------------------------------------------------------------
    // Gauss codes
    // ------------------------------------------------------------------

    pub fn to_gauss_code(&self) -> GaussCode {
        let passes = self.passes();
        let triples = passes
            .iter()
            .map(|p| (p.crossing, !p.under, self.crossings[p.crossing].sign()))
            .collect();
        GaussCode { triples }
    }

    /// Lexicographically minimal renumbered Gauss code over all basepoints
    /// and both traversal directions.
    pub fn canonical_code(&self) -> CanonicalCode {
        let passes = self.passes();
        let m = passes.len();
        if m == 0 {
            return CanonicalCode { bytes: Vec::new() };
        }
        let signs: Vec<i8> = self.crossings.iter().map(|c| c.sign()).collect();
        let mut best: Option<Vec<u8>> = None;
        let mut renumber = vec![u16::MAX; self.n()];
        for dir in 0..2 {
            for start in 0..m {
                renumber.iter_mut().for_each(|x| *x = u16::MAX);
                let mut next_id = 0u16;
                let mut cand = Vec::with_capacity(4 * m);
                for k in 0..m {
                    let idx = if dir == 0 { (start + k) % m } else { (start + m - k) % m };
                    let p = passes[idx];
                    let id = &mut renumber[p.crossing];
                    if *id == u16::MAX {
                        *id = next_id;
                        next_id += 1;
                    }
                    let id = *id;
                    cand.extend_from_slice(&id.to_be_bytes());
                    cand.push(p.under as u8);
                    cand.push((signs[p.crossing] > 0) as u8);
                }
                if best.as_ref().map_or(true, |b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        CanonicalCode { bytes: best.unwrap() }
    }
}

pub(crate) struct Faces {
    pub faces: Vec<Vec<Dart>>,
    pub face_of: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussCode {
    /// (crossing id, over flag, sign), in traversal order
    pub triples: Vec<(usize, bool, i8)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCode {
    pub bytes: Vec<u8>,
}

impl CanonicalCode {
    pub fn hex(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update(&self.bytes);
        let d = h.finalize();
        d.iter().take(16).map(|b| format!("{b:02x}")).collect()
    }
}

/// Resolve the over-strand's incoming position from edge labels.
fn derive_over_in(edges: &[usize; 4], two_n: usize) -> Result<u8> {
    // R1 kink: the loop edge occupies two cyclically adjacent positions
    for p in 0..4usize {
        if edges[p] == edges[(p + 1) % 4] {
            return Ok(match p {
                1 => 1,
                2 => 3,
                3 => 1,
                0 => 3,
                _ => unreachable!(),
            });
        }
    }
    let a = edges[1];
    let b = edges[3];
    if (a + 1) % two_n == b {
        Ok(1)
    } else if (b + 1) % two_n == a {
        Ok(3)
    } else {
        Err(KnotError::Validation(format!(
            "cannot orient over-strand of crossing {edges:?}"
        )))
    }
}

fn parse_tuples(text: &str) -> Result<Vec<[i64; 4]>> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let err = |pos: usize, msg: &str| KnotError::Syntax { pos, msg: msg.into() };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos >= bytes.len() || bytes[pos] != b'[' {
        return Err(err(pos, "expected '['"));
    }
    pos += 1;
    let mut tuples = Vec::new();
    skip_ws(&mut pos);
    if pos < bytes.len() && bytes[pos] == b']' {
        return Ok(tuples);
    }
    loop {
        skip_ws(&mut pos);
        let close = match bytes.get(pos) {
            Some(b'[') => b']',
            Some(b'(') => b')',
            _ => return Err(err(pos, "expected '[' or '(' opening a 4-tuple")),
        };
        pos += 1;
        let mut tuple = Vec::with_capacity(4);
        loop {
            skip_ws(&mut pos);
            let start = pos;
            if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
                pos += 1;
            }
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == start {
                return Err(err(pos, "expected integer"));
            }
            let v: i64 = text[start..pos]
                .parse()
                .map_err(|_| err(start, "integer out of range"))?;
            tuple.push(v);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(&c) if c == close => {
                    pos += 1;
                    break;
                }
                _ => return Err(err(pos, "expected ',' or tuple close")),
            }
        }
        if tuple.len() != 4 {
            return Err(err(pos, &format!("tuple arity {} (expected 4)", tuple.len())));
        }
        tuples.push([tuple[0], tuple[1], tuple[2], tuple[3]]);
        skip_ws(&mut pos);
        match bytes.get(pos) {
            Some(b',') => pos += 1,
            Some(b']') => {
                pos += 1;
                break;
            }
            _ => return Err(err(pos, "expected ',' or ']'")),
        }
    }
    skip_ws(&mut pos);
    if pos != bytes.len() {
        return Err(err(pos, "trailing input after diagram"));
    }
    Ok(tuples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn parse_trefoil_one_based() {
        let d = Diagram::parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap();
        assert_eq!(d.n(), 3);
        assert_eq!(d.label_base(), 1);
        // labels normalized to 0..5
        assert!(d.crossings().iter().flat_map(|c| c.edges.iter()).all(|&e| e < 6));
    }

    #[test]
    fn parse_paren_style() {
        let d = Diagram::parse_pd("[(3,1,0,2),(1,3,2,0)]");
        // may or may not validate, but bracket style itself must parse
        let _ = d;
        let d = Diagram::parse_pd("[(1,4,2,5),(3,6,4,1),(5,2,6,3)]").unwrap();
        assert_eq!(d.n(), 3);
    }

    #[test]
    fn parse_arity_error() {
        let e = Diagram::parse_pd("[[1,2,3]]").unwrap_err();
        assert!(matches!(e, KnotError::Syntax { .. }), "{e:?}");
    }

    #[test]
    fn parse_occurs_twice_error() {
        let e = Diagram::parse_pd("[[1,2,3,4],[5,6,7,8],[1,2,3,4]]").unwrap_err();
        assert!(matches!(e, KnotError::Validation(_)), "{e:?}");
    }

    #[test]
    fn serialize_round_trip() {
        let d = samples::trefoil();
        let s = d.serialize_pd(BracketStyle::Square);
        let d2 = Diagram::parse_pd(&s).unwrap();
        assert_eq!(d, d2);
        let s2 = d2.serialize_pd(BracketStyle::Paren);
        let d3 = Diagram::parse_pd(&s2).unwrap();
        assert_eq!(d, d3);
    }

    #[test]
    fn empty_diagram() {
        let d = Diagram::parse_pd("[]").unwrap();
        assert_eq!(d.n(), 0);
        assert_eq!(d.serialize_pd(BracketStyle::Square), "[]");
        assert!(d.to_gauss_code().triples.is_empty());
        assert!(d.canonical_code().bytes.is_empty());
    }

    #[test]
    fn change_crossing_involution() {
        let d = samples::trefoil();
        for i in 0..3 {
            let d2 = d.change_crossing(i).unwrap();
            assert_ne!(d, d2);
            assert_eq!(d, d2.change_crossing(i).unwrap());
        }
        assert!(d.change_crossing(3).is_err());
    }

    #[test]
    fn mirror_involution_and_commutation() {
        let d = samples::figure_eight();
        assert_eq!(d, d.mirror().mirror());
        for i in 0..d.n() {
            let a = d.mirror().change_crossing(i).unwrap();
            let b = d.change_crossing(i).unwrap().mirror();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn writhe_of_trefoils() {
        let d = samples::trefoil();
        assert_eq!(d.writhe().abs(), 3);
        assert_eq!(d.mirror().writhe(), -d.writhe());
    }

    #[test]
    fn faces_euler_count() {
        for d in [samples::trefoil(), samples::figure_eight(), samples::kink(true)] {
            assert_eq!(d.faces().faces.len(), d.n() + 2);
        }
    }

    #[test]
    fn passes_alternate_for_trefoil() {
        let d = samples::trefoil();
        let ps = d.passes();
        assert_eq!(ps.len(), 6);
        for w in ps.windows(2) {
            assert_ne!(w[0].under, w[1].under);
        }
    }

    #[test]
    fn canonical_code_invariance_under_rotation() {
        let d = Diagram::parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap();
        let rotated = Diagram::parse_pd("[[3,6,4,1],[5,2,6,3],[1,4,2,5]]").unwrap();
        assert_eq!(d.canonical_code(), rotated.canonical_code());
        // relabeled basepoint: shift all labels by 2 mod 6
        let shifted = Diagram::parse_pd("[[3,6,4,1],[5,2,6,3],[1,4,2,5]]").unwrap();
        assert_eq!(d.canonical_code(), shifted.canonical_code());
    }

    #[test]
    fn canonical_code_distinguishes_chirality_consistently() {
        let d = samples::trefoil();
        let m = d.mirror();
        // a diagram and its mirror have different signed codes in general
        assert_ne!(d.canonical_code(), m.canonical_code());
        assert_eq!(d.canonical_code(), d.canonical_code());
    }

    #[test]
    fn connected_sum_counts() {
        let t = samples::trefoil();
        let f = samples::figure_eight();
        let s = t.connected_sum(0, &f, 3).unwrap();
        assert_eq!(s.n(), 7);
        s.validate().unwrap();
        let u = Diagram::unknot();
        assert_eq!(u.connected_sum(0, &t, 0).unwrap(), t);
    }

    #[test]
    fn kink_diagrams_valid() {
        for sign in [true, false] {
            let d = samples::kink(sign);
            assert_eq!(d.n(), 1);
            d.validate().unwrap();
            assert_eq!(d.writhe(), if sign { 1 } else { -1 });
        }
    }
}
