//! Alexander polynomial from the Wirtinger presentation via Fox calculus.
//!
//! The Alexander matrix has entries of degree <= 1 in t, so its determinant
//! (degree <= n-1) is recovered exactly by evaluating at n integer points and
//! interpolating. Each integer determinant is computed by CRT over 62-bit
//! primes with modular Gaussian elimination, which keeps the big-integer work
//! out of the O(n^3) inner loop.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::diagram::Diagram;
use crate::error::{KnotError, Result};
use crate::poly::LaurentPoly;

/// Normalized Alexander polynomial: Delta(t) = Delta(1/t), Delta(1) = 1.
pub fn alexander(d: &Diagram) -> Result<LaurentPoly> {
    let n = d.n();
    if n <= 1 {
        return Ok(LaurentPoly::one('t'));
    }
    let rows = wirtinger_rows(d);
    // delete row 0 and column (arc) 0
    let m = n - 1;
    // dense matrix of (constant, t-coefficient) entries
    let mut mat = vec![(0i64, 0i64); m * m];
    for (r, row) in rows.iter().enumerate().skip(1) {
        for &(arc, c0, c1) in row {
            if arc == 0 {
                continue;
            }
            let cell = &mut mat[(r - 1) * m + (arc - 1)];
            cell.0 += c0;
            cell.1 += c1;
        }
    }
    // evaluate det at t = 2 .. n+1 and interpolate (degree <= n-1)
    let points: Vec<i64> = (2..=(n as i64 + 1)).collect();
    let mut values = Vec::with_capacity(points.len());
    for &t in &points {
        values.push(det_at(&mat, m, t));
    }
    let poly = interpolate(&points, &values)?;
    normalize(poly)
}

/// Fox-derivative rows: for each crossing, sparse (arc, constant, t-coeff)
/// triples. Positive crossings give (over: 1-t, in: t, out: -1); negative
/// crossings give the t-scaled (over: t-1, in: 1, out: -t).
fn wirtinger_rows(d: &Diagram) -> Vec<Vec<(usize, i64, i64)>> {
    let n = d.n();
    let two_n = 2 * n;
    let passes = d.passes();
    // arc of each edge: arcs break after each under-pass
    let mut arc_of_edge = vec![0usize; two_n];
    let mut arc = 0usize;
    for i in 0..two_n {
        arc_of_edge[i] = arc % n;
        if passes[i].under {
            arc += 1;
        }
    }
    let mut under_at = vec![usize::MAX; n];
    let mut over_at = vec![usize::MAX; n];
    for (i, p) in passes.iter().enumerate() {
        if p.under {
            under_at[p.crossing] = i;
        } else {
            over_at[p.crossing] = i;
        }
    }
    (0..n)
        .map(|c| {
            let i = under_at[c];
            let arc_in = arc_of_edge[i];
            let arc_out = arc_of_edge[(i + 1) % two_n];
            let arc_over = arc_of_edge[over_at[c]];
            if d.crossings()[c].sign() > 0 {
                vec![(arc_over, 1, -1), (arc_in, 0, 1), (arc_out, -1, 0)]
            } else {
                vec![(arc_over, -1, 1), (arc_in, 1, 0), (arc_out, 0, -1)]
            }
        })
        .collect()
}

/// det of the matrix with entries c0 + c1*t, evaluated at integer t.
fn det_at(mat: &[(i64, i64)], m: usize, t: i64) -> BigInt {
    if m == 0 {
        return BigInt::one();
    }
    // Hadamard bound on |det|
    let mut log2_bound = 1.0f64;
    for r in 0..m {
        let mut s = 0f64;
        for c in 0..m {
            let (c0, c1) = mat[r * m + c];
            let v = (c0 + c1 * t) as f64;
            s += v * v;
        }
        log2_bound += 0.5 * s.max(1.0).log2();
    }
    let primes = primes_for_bits(log2_bound + 2.0);
    let mut residues = Vec::with_capacity(primes.len());
    for &p in &primes {
        residues.push(det_mod_p(mat, m, t, p));
    }
    crt_signed(&primes, &residues)
}

fn det_mod_p(mat: &[(i64, i64)], m: usize, t: i64, p: u64) -> u64 {
    let reduce = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    let mut a: Vec<u64> = (0..m * m)
        .map(|k| {
            let (c0, c1) = mat[k];
            let v = mulmod(reduce(c1), reduce(t), p);
            addmod(reduce(c0), v, p)
        })
        .collect();
    let mut det: u64 = 1;
    let mut neg = false;
    for k in 0..m {
        let pivot = (k..m).find(|&r| a[r * m + k] != 0);
        let pr = match pivot {
            Some(pr) => pr,
            None => return 0,
        };
        if pr != k {
            for c in 0..m {
                a.swap(pr * m + c, k * m + c);
            }
            neg = !neg;
        }
        let pv = a[k * m + k];
        det = mulmod(det, pv, p);
        let inv = powmod(pv, p - 2, p);
        for r in (k + 1)..m {
            let f = mulmod(a[r * m + k], inv, p);
            if f == 0 {
                continue;
            }
            for c in k..m {
                let sub = mulmod(f, a[k * m + c], p);
                a[r * m + c] = submod(a[r * m + c], sub, p);
            }
        }
    }
    if neg {
        submod(0, det, p)
    } else {
        det
    }
}

#[inline]
fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

#[inline]
fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'base: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Enough 62-bit primes that their product exceeds 2^(bits+1).
fn primes_for_bits(bits: f64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut acc_bits = 0.0f64;
    let mut cand = (1u64 << 62) - 1;
    while acc_bits < bits + 1.0 {
        while !is_prime_u64(cand) {
            cand -= 2;
        }
        primes.push(cand);
        acc_bits += (cand as f64).log2();
        cand -= 2;
    }
    primes
}

/// Signed CRT reconstruction into (-M/2, M/2).
fn crt_signed(primes: &[u64], residues: &[u64]) -> BigInt {
    let mut modulus = BigInt::one();
    let mut x = BigInt::zero();
    for (&p, &r) in primes.iter().zip(residues) {
        let pb = BigInt::from(p);
        // solve x' = x (mod modulus), x' = r (mod p)
        let diff = (BigInt::from(r) - &x) % &pb;
        let inv = mod_inverse(&modulus, &pb);
        let k = (diff * inv).rem_euclid_big(&pb);
        x += k * &modulus;
        modulus *= pb;
    }
    let half = &modulus >> 1;
    if x > half {
        x -= &modulus;
    }
    x
}

trait RemEuclidBig {
    fn rem_euclid_big(self, m: &BigInt) -> BigInt;
}

impl RemEuclidBig for BigInt {
    fn rem_euclid_big(self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    // extended Euclid
    let (mut old_r, mut r) = (a.clone().rem_euclid_big(m), m.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    while !r.is_zero() {
        let q = &old_r / &r;
        let tmp = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, tmp);
        let tmp = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, tmp);
    }
    old_s.rem_euclid_big(m)
}

/// Newton interpolation through (points[i], values[i]); result must have
/// integer coefficients.
fn interpolate(points: &[i64], values: &[BigInt]) -> Result<LaurentPoly> {
    let n = points.len();
    let mut table: Vec<BigRational> =
        values.iter().map(|v| BigRational::from(v.clone())).collect();
    // divided differences in place: table[i] becomes f[x_0..x_i]
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &table[i] - &table[i - 1];
            let den = BigRational::from(BigInt::from(points[i] - points[i - level]));
            table[i] = num / den;
        }
    }
    // expand Newton form to monomial coefficients
    let mut coeffs = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::zero(); n]; // product (x - x_0)...(x - x_{k-1})
    basis[0] = BigRational::one();
    let mut basis_len = 1usize;
    for (k, dd) in table.iter().enumerate() {
        for (i, b) in basis.iter().enumerate().take(basis_len) {
            coeffs[i] += dd * b;
        }
        if k + 1 < n {
            // basis *= (x - points[k])
            let xk = BigRational::from(BigInt::from(points[k]));
            basis_len += 1;
            for i in (0..basis_len).rev() {
                let lower = if i > 0 { basis[i - 1].clone() } else { BigRational::zero() };
                basis[i] = lower - &basis[i] * &xk;
            }
        }
    }
    let mut poly = LaurentPoly::zero('t');
    for (e, c) in coeffs.iter().enumerate() {
        if !c.is_integer() {
            return Err(KnotError::DegeneratePresentation(
                "interpolated determinant is not integral".into(),
            ));
        }
        poly.add_term(e as i64, c.to_integer());
    }
    Ok(poly)
}

/// Multiply by +-t^k so the polynomial is symmetric with value 1 at t = 1.
fn normalize(p: LaurentPoly) -> Result<LaurentPoly> {
    if p.is_zero() {
        return Err(KnotError::DegeneratePresentation(
            "Alexander determinant vanishes".into(),
        ));
    }
    let min = p.min_exp().unwrap();
    let max = p.max_exp().unwrap();
    if (min + max) % 2 != 0 {
        return Err(KnotError::DegeneratePresentation(format!(
            "odd exponent span {}..{}",
            min, max
        )));
    }
    let centered = p.mul_term(-(min + max) / 2, &BigInt::one());
    let at_one = centered.eval_int(1);
    let signed = if at_one == BigInt::from(-1) {
        centered.neg()
    } else if at_one == BigInt::one() {
        centered
    } else {
        return Err(KnotError::DegeneratePresentation(format!(
            "Delta(1) = {at_one}, expected +-1"
        )));
    };
    if signed != signed.invert_var() {
        return Err(KnotError::DegeneratePresentation(
            "determinant is not palindromic".into(),
        ));
    }
    Ok(signed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn unknots_give_one() {
        for d in [
            Diagram::unknot(),
            samples::kink(true),
            samples::kink(false),
            samples::unknot_r2(),
            samples::unknot_twist2(),
        ] {
            assert!(alexander(&d).unwrap().is_one(), "{:?}", d);
        }
    }

    #[test]
    fn trefoil_alexander() {
        let want = LaurentPoly::from_coeffs('t', [(-1, 1), (0, -1), (1, 1)]);
        assert_eq!(alexander(&samples::trefoil()).unwrap(), want);
        assert_eq!(alexander(&samples::trefoil_right()).unwrap(), want);
    }

    #[test]
    fn figure_eight_alexander() {
        let want = LaurentPoly::from_coeffs('t', [(-1, -1), (0, 3), (1, -1)]);
        assert_eq!(alexander(&samples::figure_eight()).unwrap(), want);
    }

    #[test]
    fn crossing_change_on_trefoil_unknots() {
        let d = samples::trefoil().change_crossing(0).unwrap();
        assert!(alexander(&d).unwrap().is_one());
    }

    #[test]
    fn modular_helpers() {
        assert!(is_prime_u64((1u64 << 61) - 1));
        assert!(!is_prime_u64((1u64 << 62) - 1));
        let p = primes_for_bits(130.0);
        assert!(p.len() >= 3);
        // x = 100 mod 101, x = 0 mod 103, |x| < 101*103/2  =>  x = 5150
        let x = crt_signed(&[101, 103], &[100, 0]);
        assert_eq!(x, BigInt::from(5150));
        let y = crt_signed(&[3, 5], &[2, 4]);
        assert_eq!(y, BigInt::from(-1));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        // p(t) = 3t^2 - 5t + 7
        let pts: Vec<i64> = vec![2, 3, 4];
        let vals: Vec<BigInt> =
            pts.iter().map(|&t| BigInt::from(3 * t * t - 5 * t + 7)).collect();
        let p = interpolate(&pts, &vals).unwrap();
        assert_eq!(p.coeff(2), BigInt::from(3));
        assert_eq!(p.coeff(1), BigInt::from(-5));
        assert_eq!(p.coeff(0), BigInt::from(7));
    }
}
