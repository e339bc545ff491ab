//! Exact integer Laurent polynomials in one variable.
//!
//! Exponents are stored as integer multiples of `1/denom`, where `denom` is 1
//! for ordinary polynomials (Alexander, Jones in `t`) and 4 for the Kauffman
//! bracket's intermediate `A = t^{-1/4}` substitution.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentPoly {
    /// exponent (in units of 1/denom) -> nonzero coefficient
    coeffs: BTreeMap<i64, BigInt>,
    pub var: char,
    pub denom: u8,
}

impl LaurentPoly {
    pub fn zero(var: char) -> Self {
        LaurentPoly { coeffs: BTreeMap::new(), var, denom: 1 }
    }

    pub fn one(var: char) -> Self {
        Self::monomial(var, BigInt::one(), 0)
    }

    pub fn with_denom(var: char, denom: u8) -> Self {
        LaurentPoly { coeffs: BTreeMap::new(), var, denom }
    }

    /// `c * var^(exp/denom)` with `exp` in units of `1/denom`.
    pub fn monomial(var: char, c: BigInt, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs, var, denom: 1 }
    }

    pub fn monomial_denom(var: char, denom: u8, c: BigInt, exp: i64) -> Self {
        let mut p = Self::monomial(var, c, exp);
        p.denom = denom;
        p
    }

    pub fn from_coeffs<I: IntoIterator<Item = (i64, i64)>>(var: char, it: I) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in it {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map_or(false, |c| c.is_one())
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Minimal exponent, in units of 1/denom. None for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!((self.var, self.denom), (other.var, other.denom));
        let mut out = self.clone();
        for (e, c) in other.coeffs.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.coeffs.iter() {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!((self.var, self.denom), (other.var, other.denom));
        let mut out = Self::with_denom(self.var, self.denom);
        for (e1, c1) in self.coeffs.iter() {
            for (e2, c2) in other.coeffs.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, exp: i64, c: &BigInt) -> Self {
        let mut out = Self::with_denom(self.var, self.denom);
        for (e, k) in self.coeffs.iter() {
            out.add_term(e + exp, k * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::monomial_denom(self.var, self.denom, BigInt::one(), 0);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Formal derivative d/dvar. Only for integer exponents (denom == 1).
    pub fn derivative(&self) -> Self {
        assert_eq!(self.denom, 1, "derivative requires integer exponents");
        let mut out = Self::zero(self.var);
        for (e, c) in self.coeffs.iter() {
            out.add_term(e - 1, c * BigInt::from(*e));
        }
        out
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .map(|(e, c)| c.to_f64().unwrap_or(f64::INFINITY) * x.powf(*e as f64 / self.denom as f64))
            .sum()
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .map(|(e, c)| z.powf(*e as f64 / self.denom as f64) * c.to_f64().unwrap_or(f64::INFINITY))
            .sum()
    }

    /// Exact evaluation at a nonzero rational point (denom must be 1).
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        assert_eq!(self.denom, 1);
        assert!(!x.is_zero(), "cannot evaluate Laurent polynomial at 0");
        let mut acc = BigRational::zero();
        for (e, c) in self.coeffs.iter() {
            let mut t = BigRational::from(c.clone());
            let p = if *e >= 0 { x.clone() } else { x.recip() };
            for _ in 0..e.unsigned_abs() {
                t *= &p;
            }
            acc += t;
        }
        acc
    }

    /// Exact evaluation at integer x (may have negative exponents only if x = +-1).
    pub fn eval_int(&self, x: i64) -> BigInt {
        let r = self.eval_rational(&BigRational::from(BigInt::from(x)));
        assert!(r.is_integer());
        r.to_integer()
    }

    pub fn abs_coeff_sum(&self) -> BigInt {
        self.coeffs.values().map(|c| c.abs()).sum()
    }

    /// Substitute the variable by `new_var^(num/4)`; used for A -> t^(-1/4).
    /// `num` is the numerator in quarter units (so A -> t^{-1/4} is num = -1).
    pub fn substitute_quarter(&self, new_var: char, num: i64) -> Self {
        assert_eq!(self.denom, 1);
        let mut out = Self::with_denom(new_var, 4);
        for (e, c) in self.coeffs.iter() {
            out.add_term(e * num, c.clone());
        }
        out
    }

    /// Reduce a denom-4 polynomial to integer exponents, if all exponents are
    /// divisible by 4.
    pub fn reduce_denom(&self) -> Option<Self> {
        if self.denom == 1 {
            return Some(self.clone());
        }
        if self.coeffs.keys().any(|e| e % self.denom as i64 != 0) {
            return None;
        }
        let mut out = Self::zero(self.var);
        for (e, c) in self.coeffs.iter() {
            out.add_term(e / self.denom as i64, c.clone());
        }
        Some(out)
    }

    /// Mirror: var -> var^{-1}.
    pub fn invert_var(&self) -> Self {
        let mut out = Self::with_denom(self.var, self.denom);
        for (e, c) in self.coeffs.iter() {
            out.add_term(-e, c.clone());
        }
        out
    }

    /// Sorted `{exponent: coefficient}` map for JSON output. Exponents are in
    /// units of 1/denom (always integral for denom == 1 polynomials).
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, c) in self.coeffs.iter() {
            map.insert(e.to_string(), serde_json::Value::String(c.to_string()));
        }
        serde_json::Value::Object(map)
    }

    /// Stable byte encoding for hashing.
    pub fn fingerprint_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.push(self.var as u8);
        out.push(self.denom);
        for (e, c) in self.coeffs.iter() {
            out.extend_from_slice(&e.to_le_bytes());
            let (sign, bytes) = c.to_bytes_le();
            out.push(match sign {
                num_bigint::Sign::Minus => 0,
                num_bigint::Sign::NoSign => 1,
                num_bigint::Sign::Plus => 2,
            });
            out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
            out.extend_from_slice(&bytes);
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *e == 0 {
                write!(f, "{}", c)?;
            } else if self.denom == 1 {
                write!(f, "{}*{}^{}", c, self.var, e)?;
            } else {
                write!(f, "{}*{}^({}/{})", c, self.var, e, self.denom)?;
            }
        }
        Ok(())
    }
}
