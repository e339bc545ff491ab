//! Kauffman bracket by frontier contraction.
//!
//! Crossings are absorbed one at a time; the partial tangle is represented by
//! a pairing of its open edge labels, and a dictionary maps each pairing to
//! its accumulated coefficient in Z[A^{±1}]. For planar inputs the frontier
//! stays narrow if crossings are absorbed in an adjacency-greedy order, which
//! keeps the dictionary far below the 2^n state count.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::diagram::Diagram;
use crate::poly::LaurentPoly;

/// A pairing of open edge labels, stored as sorted (min, max) pairs.
type Pairing = Vec<(u32, u32)>;

/// `<D>` in the variable A. The A-smoothing of a tuple (a,b,c,d) joins a-b
/// and c-d; the B-smoothing joins b-c and d-a.
pub fn kauffman_bracket(d: &Diagram) -> LaurentPoly {
    let n = d.n();
    if n == 0 {
        return LaurentPoly::one('A');
    }
    let order = absorption_order(d);
    let mut states: BTreeMap<Pairing, LaurentPoly> = BTreeMap::new();
    states.insert(Vec::new(), LaurentPoly::one('A'));
    for &c in &order {
        let e = d.crossings()[c].edges;
        let arcs_a = [(e[0] as u32, e[1] as u32), (e[2] as u32, e[3] as u32)];
        let arcs_b = [(e[1] as u32, e[2] as u32), (e[3] as u32, e[0] as u32)];
        let mut next: BTreeMap<Pairing, LaurentPoly> = BTreeMap::new();
        for (pairing, coeff) in states.iter() {
            for (arcs, exp) in [(arcs_a, 1i64), (arcs_b, -1i64)] {
                let (p2, loops) = absorb(pairing, &arcs);
                let mut c2 = coeff.mul_term(exp, &BigInt::one());
                for _ in 0..loops {
                    c2 = c2.mul(&delta());
                }
                let entry = next.entry(p2).or_insert_with(|| LaurentPoly::zero('A'));
                *entry = entry.add(&c2);
            }
        }
        states = next;
    }
    // all edges absorbed: only the empty pairing survives, carrying delta^L
    debug_assert_eq!(states.len(), 1);
    let total = states.remove(&Vec::new()).expect("open pairing left after absorbing all crossings");
    div_exact(&total, &delta())
}

/// -A^2 - A^{-2}
pub fn delta() -> LaurentPoly {
    LaurentPoly::from_coeffs('A', [(2, -1), (-2, -1)])
}

/// Merge two smoothing arcs into a pairing; returns the new pairing and the
/// number of closed loops formed.
///
/// An open endpoint is named by its edge label; the pairing records which
/// endpoints are joined through the already-absorbed region. Touching a label
/// already in the pairing absorbs its second (and last) endpoint.
fn absorb(pairing: &Pairing, arcs: &[(u32, u32); 2]) -> (Pairing, u32) {
    let mut map: BTreeMap<u32, u32> = pairing.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
    let mut loops = 0u32;
    for &(x, y) in arcs {
        if x == y {
            // a loop edge whose both slots sit in this arc: closes on itself
            debug_assert!(!map.contains_key(&x));
            loops += 1;
            continue;
        }
        if map.get(&x) == Some(&y) {
            // the arc joins the two ends of one open path: closed loop
            map.remove(&x);
            map.remove(&y);
            loops += 1;
            continue;
        }
        let px = match map.remove(&x) {
            Some(p) => {
                map.remove(&p);
                p
            }
            None => x,
        };
        let py = match map.remove(&y) {
            Some(p) => {
                map.remove(&p);
                p
            }
            None => y,
        };
        debug_assert_ne!(px, py);
        map.insert(px, py);
        map.insert(py, px);
    }
    let out: Pairing = map.iter().filter(|&(&a, &b)| a < b).map(|(&a, &b)| (a, b)).collect();
    (out, loops)
}

/// Greedy absorption order: prefer crossings with the most already-open edges.
fn absorption_order(d: &Diagram) -> Vec<usize> {
    let n = d.n();
    let mut open = vec![false; 2 * n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        let mut best_score = -1i32;
        for c in 0..n {
            if done[c] {
                continue;
            }
            let e = d.crossings()[c].edges;
            let mut score = 0i32;
            for &x in &e {
                if open[x] {
                    score += 1;
                }
            }
            // count repeated labels inside the crossing (kink loops close fast)
            for i in 0..4 {
                for j in (i + 1)..4 {
                    if e[i] == e[j] {
                        score += 1;
                    }
                }
            }
            if score > best_score {
                best_score = score;
                best = c;
            }
        }
        done[best] = true;
        order.push(best);
        for &x in &d.crossings()[best].edges {
            open[x] = true;
        }
    }
    order
}

/// Exact division of Laurent polynomials (panics if not exact).
pub fn div_exact(num: &LaurentPoly, den: &LaurentPoly) -> LaurentPoly {
    assert!(!den.is_zero());
    let mut rem = num.clone();
    let mut quot = LaurentPoly::with_denom(num.var, num.denom);
    let d_max = den.max_exp().unwrap();
    let d_lead = den.coeff(d_max);
    while !rem.is_zero() {
        let r_max = rem.max_exp().unwrap();
        let r_lead = rem.coeff(r_max);
        let (q, r) = num_integer_div_rem(&r_lead, &d_lead);
        assert!(r == BigInt::from(0), "inexact Laurent division");
        let shift = r_max - d_max;
        quot.add_term(shift, q.clone());
        rem = rem.sub(&den.mul_term(shift, &q));
    }
    quot
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

/// Exhaustive 2^n state sum; exponential, for cross-checking only.
pub fn bracket_state_sum(d: &Diagram) -> LaurentPoly {
    let n = d.n();
    if n == 0 {
        return LaurentPoly::one('A');
    }
    assert!(n <= 20, "state sum is exponential; diagram too large");
    let ed = d.edge_darts();
    let mut acc = LaurentPoly::zero('A');
    for mask in 0u64..(1u64 << n) {
        // union-find over darts
        let mut parent: Vec<u32> = (0..(4 * n) as u32).collect();
        fn find(p: &mut Vec<u32>, mut x: u32) -> u32 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        let union = |p: &mut Vec<u32>, a: u32, b: u32| {
            let ra = find(p, a);
            let rb = find(p, b);
            if ra != rb {
                p[ra as usize] = rb;
            }
        };
        for e in ed.iter() {
            union(&mut parent, e[0], e[1]);
        }
        let mut a_count = 0i64;
        for c in 0..n {
            let base = (4 * c) as u32;
            if mask >> c & 1 == 0 {
                a_count += 1;
                union(&mut parent, base, base + 1);
                union(&mut parent, base + 2, base + 3);
            } else {
                union(&mut parent, base + 1, base + 2);
                union(&mut parent, base + 3, base);
            }
        }
        let mut loops = 0u32;
        for x in 0..(4 * n) as u32 {
            if find(&mut parent, x) == x {
                loops += 1;
            }
        }
        let b_count = n as i64 - a_count;
        let term = LaurentPoly::monomial('A', BigInt::one(), a_count - b_count);
        let mut t = term;
        for _ in 0..loops.saturating_sub(1) {
            t = t.mul(&delta());
        }
        acc = acc.add(&t);
    }
    acc
}
