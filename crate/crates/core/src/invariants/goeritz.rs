//! Determinant and signature via the Goeritz matrix and the
//! Gordon-Litherland correction term.
//!
//! Faces are checkerboard-colored; the Goeritz matrix over the white faces
//! gives |det| directly, and the signature of that matrix minus a correction
//! over "type II" crossings gives the knot signature. The sign conventions
//! are fixed so that the right-handed trefoil has signature -2.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::diagram::{dart, Diagram};
use crate::poly::LaurentPoly;

/// (determinant, signature)
pub fn det_and_signature(d: &Diagram) -> (BigInt, i64) {
    let n = d.n();
    if n == 0 {
        return (BigInt::one(), 0);
    }
    let colors = checkerboard(d);
    let (det0, sig0) = goeritz_for(d, &colors, false);
    if cfg!(debug_assertions) {
        // the construction must not depend on which color class is "white"
        let (det1, sig1) = goeritz_for(d, &colors, true);
        debug_assert_eq!(det0, det1);
        debug_assert_eq!(sig0, sig1);
    }
    (det0, sig0)
}

pub fn determinant(d: &Diagram) -> BigInt {
    det_and_signature(d).0
}

pub fn signature(d: &Diagram) -> i64 {
    det_and_signature(d).1
}

/// Two-color the faces so faces sharing an edge differ.
fn checkerboard(d: &Diagram) -> Vec<bool> {
    let faces = d.faces();
    let nf = faces.faces.len();
    let ed = d.edge_darts();
    let mut color = vec![None; nf];
    color[0] = Some(false);
    let mut queue = vec![0usize];
    while let Some(f) = queue.pop() {
        let c = color[f].unwrap();
        for &dd in &faces.faces[f] {
            let g = faces.face_of[d.mate(&ed, dd) as usize];
            match color[g] {
                None => {
                    color[g] = Some(!c);
                    queue.push(g);
                }
                Some(cg) => debug_assert_ne!(cg, c, "faces not checkerboard-colorable"),
            }
        }
    }
    color.into_iter().map(|c| c.expect("disconnected face graph")).collect()
}

/// Corner k of a crossing is the face between positions k and k+1.
fn corner_face(faces: &crate::diagram::Faces, c: usize, k: u8) -> usize {
    faces.face_of[dart(c, (k + 1) % 4) as usize]
}

fn goeritz_for(d: &Diagram, colors: &[bool], white: bool) -> (BigInt, i64) {
    let n = d.n();
    let faces = d.faces();
    let white_faces: Vec<usize> =
        (0..faces.faces.len()).filter(|&f| colors[f] == white).collect();
    let mut windex = vec![usize::MAX; faces.faces.len()];
    for (i, &f) in white_faces.iter().enumerate() {
        windex[f] = i;
    }
    let m = white_faces.len();
    let mut g = vec![0i64; m * m];
    let mut mu = 0i64;
    for c in 0..n {
        let corner_colors: Vec<bool> =
            (0..4).map(|k| colors[corner_face(&faces, c, k)]).collect();
        debug_assert_eq!(corner_colors[0], corner_colors[2]);
        debug_assert_eq!(corner_colors[1], corner_colors[3]);
        debug_assert_ne!(corner_colors[0], corner_colors[1]);
        // white corners sit at positions (1,3) iff white13
        let white13 = corner_colors[1] == white;
        let eta: i64 = if white13 { -1 } else { 1 };
        let sign = d.crossings()[c].sign() as i64;
        // type II crossings feed the Gordon-Litherland correction
        let type_ii = (sign > 0) != white13;
        if type_ii {
            mu += eta;
        }
        let (u, v) = if white13 {
            (corner_face(&faces, c, 1), corner_face(&faces, c, 3))
        } else {
            (corner_face(&faces, c, 0), corner_face(&faces, c, 2))
        };
        let (u, v) = (windex[u], windex[v]);
        if u != v {
            g[u * m + v] -= eta;
            g[v * m + u] -= eta;
        }
    }
    for u in 0..m {
        let s: i64 = (0..m).filter(|&v| v != u).map(|v| g[u * m + v]).sum();
        g[u * m + u] = -s;
    }
    // delete the last white face's row and column
    let k = m - 1;
    let reduced: Vec<Vec<BigRational>> = (0..k)
        .map(|r| (0..k).map(|c| BigRational::from(BigInt::from(g[r * m + c]))).collect())
        .collect();
    let det = sym_det(&reduced);
    let sig = sym_signature(reduced);
    (det.abs(), sig - mu)
}

fn sym_det(a: &[Vec<BigRational>]) -> BigInt {
    let k = a.len();
    if k == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigRational>> = a.to_vec();
    let mut det = BigRational::one();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r][col].is_zero());
        let pr = match pivot {
            Some(p) => p,
            None => return BigInt::zero(),
        };
        if pr != col {
            m.swap(pr, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in (col + 1)..k {
            let f = &m[r][col] / &pv;
            if f.is_zero() {
                continue;
            }
            for c in col..k {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    debug_assert!(det.is_integer());
    det.to_integer()
}

/// Signature of a symmetric rational matrix by congruence diagonalization.
pub(crate) fn sym_signature(mut a: Vec<Vec<BigRational>>) -> i64 {
    let n = a.len();
    let mut sig = 0i64;
    let mut k = 0usize;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(j) = ((k + 1)..n).find(|&j| !a[j][j].is_zero()) {
                // swap rows and columns k and j
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = ((k + 1)..n).find(|&j| !a[k][j].is_zero()) {
                // all diagonals zero: make a[k][k] nonzero by adding row/col j
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            } else {
                // zero row: zero eigenvalue
                k += 1;
                continue;
            }
        }
        let pv = a[k][k].clone();
        sig += if pv.is_positive() { 1 } else { -1 };
        for r in (k + 1)..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &pv;
            for c in k..n {
                let sub = &f * &a[k][c];
                a[r][c] -= sub;
            }
            // keep symmetry
            for c in (k + 1)..n {
                a[c][r] = a[r][c].clone();
            }
            a[r][k] = BigRational::zero();
            a[k][r] = BigRational::zero();
        }
        k += 1;
    }
    sig
}

/// Cross-check helper: |Delta(-1)| from a t-polynomial.
pub fn det_from_alexander(delta: &LaurentPoly) -> BigInt {
    delta.eval_int(-1).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn sym_signature_basics() {
        let m = |rows: Vec<Vec<i64>>| -> Vec<Vec<BigRational>> {
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| BigRational::from(BigInt::from(x))).collect())
                .collect()
        };
        assert_eq!(sym_signature(m(vec![vec![2, 0], vec![0, -3]])), 0);
        assert_eq!(sym_signature(m(vec![vec![1, 0], vec![0, 3]])), 2);
        // hyperbolic plane: signature 0
        assert_eq!(sym_signature(m(vec![vec![0, 1], vec![1, 0]])), 0);
        // trefoil Seifert form V + V^T = [[-2, 1], [1, -2]]
        assert_eq!(sym_signature(m(vec![vec![-2, 1], vec![1, -2]])), -2);
    }

    #[test]
    fn unknot_diagrams() {
        for d in [
            Diagram::unknot(),
            samples::kink(true),
            samples::kink(false),
            samples::unknot_r2(),
            samples::unknot_twist2(),
        ] {
            let (det, sig) = det_and_signature(&d);
            assert_eq!(det, BigInt::one(), "{d:?}");
            assert_eq!(sig, 0, "{d:?}");
        }
    }

    #[test]
    fn trefoil_and_figure_eight() {
        let t = samples::trefoil();
        let (det, sig) = det_and_signature(&t);
        assert_eq!(det, BigInt::from(3));
        assert_eq!(sig.abs(), 2);
        let (detm, sigm) = det_and_signature(&t.mirror());
        assert_eq!(detm, BigInt::from(3));
        assert_eq!(sigm, -sig);

        let f = samples::figure_eight();
        let (det, sig) = det_and_signature(&f);
        assert_eq!(det, BigInt::from(5));
        assert_eq!(sig, 0);
    }

    #[test]
    fn right_trefoil_signature_is_minus_two() {
        let r = samples::trefoil_right();
        assert_eq!(signature(&r), -2);
    }

    #[test]
    fn connected_sum_additivity() {
        let t = samples::trefoil();
        let f = samples::figure_eight();
        let s = t.connected_sum(1, &f, 2).unwrap();
        let (det, sig) = det_and_signature(&s);
        assert_eq!(det, BigInt::from(15));
        assert_eq!(sig, signature(&t) + signature(&f));
    }

    #[test]
    fn murasugi_congruence() {
        // det = 1 mod 4 <=> sig = 0 mod 4 (knots)
        for d in [
            samples::trefoil(),
            samples::trefoil_right(),
            samples::figure_eight(),
            samples::kink(true),
        ] {
            let (det, sig) = det_and_signature(&d);
            let det_mod = (&det % BigInt::from(4i64) + BigInt::from(4i64)) % BigInt::from(4i64);
            let expect = if sig.rem_euclid(4) == 0 { 1i64 } else { 3 };
            assert_eq!(det_mod, BigInt::from(expect), "{d:?} sig={sig}");
        }
    }
}
