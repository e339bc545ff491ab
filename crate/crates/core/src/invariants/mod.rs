//! Exact knot invariants and the derived ML feature vector.

mod alexander;
pub mod bracket;
mod goeritz;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::diagram::Diagram;
use crate::error::{KnotError, Result};
use crate::poly::LaurentPoly;

pub use alexander::alexander;
pub use bracket::{bracket_state_sum, kauffman_bracket};
pub use goeritz::{det_and_signature, det_from_alexander, determinant, signature};

/// Default crossing cap for the bracket/Jones skein computation.
pub const DEFAULT_BRACKET_CAP: usize = 64;

pub fn writhe(d: &Diagram) -> i64 {
    d.writhe()
}

/// True iff the traversal alternates over/under (vacuously true for n = 0).
pub fn is_alternating(d: &Diagram) -> bool {
    let passes = d.passes();
    passes.windows(2).all(|w| w[0].under != w[1].under)
        && (passes.len() < 2 || passes[0].under != passes[passes.len() - 1].under)
}

pub fn kauffman_bracket_capped(d: &Diagram, cap: usize) -> Result<LaurentPoly> {
    if d.n() > cap {
        return Err(KnotError::CapExceeded { n: d.n(), cap });
    }
    Ok(kauffman_bracket(d))
}

/// V_K(t): writhe-normalized bracket with A = t^{-1/4}.
pub fn jones_capped(d: &Diagram, cap: usize) -> Result<LaurentPoly> {
    let b = kauffman_bracket_capped(d, cap)?;
    let w = d.writhe();
    let sign = if w % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    // V = (-A^3)^{-w} <D>
    let adjusted = b.mul_term(-3 * w, &sign);
    let quartered = adjusted.substitute_quarter('t', -1);
    Ok(quartered.reduce_denom().unwrap_or(quartered))
}

pub fn jones(d: &Diagram) -> Result<LaurentPoly> {
    jones_capped(d, DEFAULT_BRACKET_CAP)
}

// ---------------------------------------------------------------------------
// Feature vector
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct FeatureConfig {
    /// Evaluation points for V, Delta and their first three derivatives.
    pub points: Vec<Complex64>,
    /// Symmetric clip range bound.
    pub clip: f64,
    pub bracket_cap: usize,
}

impl Default for FeatureConfig {
    fn default() -> Self {
        let root5 = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 5.0);
        let root3 = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        FeatureConfig {
            points: vec![Complex64::new(0.99, 0.0), Complex64::new(1.01, 0.0), root5, root3],
            clip: 1e6,
            bracket_cap: DEFAULT_BRACKET_CAP,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FeatureVector {
    pub values: Vec<f64>,
    pub failed: Vec<bool>,
    pub clip: f64,
}

/// Names of the entries, in order; length depends only on the config.
pub fn feature_schema(config: &FeatureConfig) -> Vec<String> {
    let mut names = vec![
        "writhe".into(),
        "crossings".into(),
        "alternating".into(),
        "determinant".into(),
        "signature".into(),
        "alexander_abs_coeff_sum".into(),
        "alexander_min_deg".into(),
        "alexander_max_deg".into(),
        "jones_min_deg".into(),
        "jones_max_deg".into(),
    ];
    for poly in ["jones", "alexander"] {
        for deriv in 0..4 {
            for (i, p) in config.points.iter().enumerate() {
                for part in ["re", "im"] {
                    names.push(format!(
                        "{poly}_d{deriv}_p{i}({:.4}{:+.4}i)_{part}",
                        p.re, p.im
                    ));
                }
            }
        }
    }
    names
}

pub fn feature_vector(d: &Diagram, config: &FeatureConfig) -> FeatureVector {
    let mut values = Vec::new();
    let mut failed = Vec::new();
    let clip = config.clip;
    let push = |v: Option<f64>, values: &mut Vec<f64>, failed: &mut Vec<bool>| match v {
        Some(x) if x.is_finite() => {
            values.push(x.clamp(-clip, clip));
            failed.push(false);
        }
        _ => {
            values.push(0.0);
            failed.push(true);
        }
    };

    let (det, sig) = det_and_signature(d);
    let delta = alexander(d).ok();
    let v = jones_capped(d, config.bracket_cap).ok();
    // Jones features need integer exponents; treat quarter-exponents as failure
    let v = v.filter(|p| p.denom == 1);

    push(Some(d.writhe() as f64), &mut values, &mut failed);
    push(Some(d.n() as f64), &mut values, &mut failed);
    push(Some(if is_alternating(d) { 1.0 } else { 0.0 }), &mut values, &mut failed);
    push(det.to_f64(), &mut values, &mut failed);
    push(Some(sig as f64), &mut values, &mut failed);
    push(
        delta.as_ref().and_then(|p| p.abs_coeff_sum().to_f64()),
        &mut values,
        &mut failed,
    );
    push(delta.as_ref().and_then(|p| p.min_exp()).map(|e| e as f64), &mut values, &mut failed);
    push(delta.as_ref().and_then(|p| p.max_exp()).map(|e| e as f64), &mut values, &mut failed);
    push(v.as_ref().and_then(|p| p.min_exp()).map(|e| e as f64), &mut values, &mut failed);
    push(v.as_ref().and_then(|p| p.max_exp()).map(|e| e as f64), &mut values, &mut failed);

    for poly in [&v, &delta] {
        let mut current = poly.clone();
        for _ in 0..4 {
            for pt in &config.points {
                let val = current.as_ref().map(|p| p.eval_complex(*pt));
                push(val.map(|z| z.re), &mut values, &mut failed);
                push(val.map(|z| z.im), &mut values, &mut failed);
            }
            current = current.map(|p| p.derivative());
        }
    }
    debug_assert_eq!(values.len(), feature_schema(config).len());
    FeatureVector { values, failed, clip }
}

// ---------------------------------------------------------------------------
// Fingerprints
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FingerprintMode {
    Alexander,
    Jones,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fingerprint(pub [u8; 32]);

impl std::fmt::Debug for Fingerprint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in &self.0[..8] {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// Hash of the canonical coefficient encoding of the selected polynomial(s).
/// A failed computation yields a sentinel fingerprint in a distinct domain.
pub fn fingerprint(d: &Diagram, mode: FingerprintMode) -> Fingerprint {
    fingerprint_capped(d, mode, DEFAULT_BRACKET_CAP)
}

pub fn fingerprint_capped(d: &Diagram, mode: FingerprintMode, cap: usize) -> Fingerprint {
    let mut h = Sha256::new();
    let mut ok = true;
    let absorb = |tag: &str, p: Result<LaurentPoly>, h: &mut Sha256, ok: &mut bool| match p {
        Ok(p) => {
            h.update(tag.as_bytes());
            h.update(p.fingerprint_bytes());
        }
        Err(_) => *ok = false,
    };
    match mode {
        FingerprintMode::Alexander => absorb("alex:", alexander(d), &mut h, &mut ok),
        FingerprintMode::Jones => absorb("jones:", jones_capped(d, cap), &mut h, &mut ok),
        FingerprintMode::Both => {
            absorb("alex:", alexander(d), &mut h, &mut ok);
            absorb("jones:", jones_capped(d, cap), &mut h, &mut ok);
        }
    }
    if !ok {
        let mut h = Sha256::new();
        h.update(b"failed-invariant-computation");
        h.update([mode as u8]);
        return Fingerprint(h.finalize().into());
    }
    Fingerprint(h.finalize().into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use num_traits::Signed;

    fn jones_of(d: &Diagram) -> LaurentPoly {
        jones(d).unwrap()
    }

    #[test]
    fn bracket_base_cases() {
        assert!(kauffman_bracket(&Diagram::unknot()).is_one());
        // single positive kink: -A^3
        let k = kauffman_bracket(&samples::kink(true));
        assert_eq!(k, LaurentPoly::from_coeffs('A', [(3, -1)]));
        let k = kauffman_bracket(&samples::kink(false));
        assert_eq!(k, LaurentPoly::from_coeffs('A', [(-3, -1)]));
    }

    #[test]
    fn bracket_matches_state_sum() {
        for d in [
            samples::trefoil(),
            samples::figure_eight(),
            samples::kink(true),
            samples::unknot_r2(),
            samples::unknot_twist2(),
            samples::trefoil().connected_sum(2, &samples::figure_eight(), 5).unwrap(),
        ] {
            assert_eq!(kauffman_bracket(&d), bracket_state_sum(&d), "{d:?}");
        }
    }

    #[test]
    fn jones_of_unknots_is_one() {
        for d in [
            Diagram::unknot(),
            samples::kink(true),
            samples::kink(false),
            samples::unknot_r2(),
            samples::unknot_twist2(),
        ] {
            assert!(jones_of(&d).is_one(), "{d:?}");
        }
    }

    #[test]
    fn jones_of_trefoils() {
        // left-handed trefoil: -t^{-4} + t^{-3} + t^{-1}, or its mirror
        let left = LaurentPoly::from_coeffs('t', [(-4, -1), (-3, 1), (-1, 1)]);
        let right = left.invert_var();
        let v = jones_of(&samples::trefoil());
        let vm = jones_of(&samples::trefoil_right());
        assert!(v == left || v == right, "{v:?}");
        assert_eq!(vm, v.invert_var());
    }

    #[test]
    fn jones_of_figure_eight() {
        let want = LaurentPoly::from_coeffs('t', [(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]);
        assert_eq!(jones_of(&samples::figure_eight()), want);
    }

    #[test]
    fn jones_det_alexander_consistency() {
        for d in [
            samples::trefoil(),
            samples::figure_eight(),
            samples::trefoil().connected_sum(0, &samples::trefoil_right(), 1).unwrap(),
        ] {
            let v = jones_of(&d);
            let det = determinant(&d);
            let delta = alexander(&d).unwrap();
            assert_eq!(v.eval_int(-1).abs(), det);
            assert_eq!(delta.eval_int(-1).abs(), det);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let d = samples::trefoil();
        assert!(matches!(
            jones_capped(&d, 2),
            Err(KnotError::CapExceeded { n: 3, cap: 2 })
        ));
    }

    #[test]
    fn alternating_flags() {
        assert!(is_alternating(&Diagram::unknot()));
        assert!(is_alternating(&samples::trefoil()));
        assert!(is_alternating(&samples::figure_eight()));
        assert!(!is_alternating(&samples::unknot_r2()));
    }

    #[test]
    fn feature_vector_shape_and_values() {
        let config = FeatureConfig::default();
        let schema = feature_schema(&config);
        let fu = feature_vector(&Diagram::unknot(), &config);
        let ft = feature_vector(&samples::trefoil(), &config);
        assert_eq!(fu.values.len(), schema.len());
        assert_eq!(ft.values.len(), schema.len());
        assert!(fu.failed.iter().all(|&f| !f));
        assert!(ft.failed.iter().all(|&f| !f));
        // V(unknot) = 1 everywhere, derivatives vanish
        let jones_idx = schema.iter().position(|s| s.starts_with("jones_d0_p0")).unwrap();
        assert!((fu.values[jones_idx] - 1.0).abs() < 1e-12);
        let d1_idx = schema.iter().position(|s| s.starts_with("jones_d1_p0")).unwrap();
        assert!(fu.values[d1_idx].abs() < 1e-12);
        // trefoil V(0.99) matches a direct evaluation
        let v = jones_of(&samples::trefoil());
        assert!((ft.values[jones_idx] - v.eval_f64(0.99)).abs() < 1e-9);
        // all clipped
        assert!(ft.values.iter().all(|v| v.abs() <= config.clip));
    }

    #[test]
    fn fingerprints_distinguish_and_fail_distinctly() {
        let t = samples::trefoil();
        let u = samples::unknot_r2();
        for mode in [FingerprintMode::Alexander, FingerprintMode::Jones, FingerprintMode::Both] {
            assert_ne!(fingerprint(&t, mode), fingerprint(&u, mode));
            assert_eq!(fingerprint(&t, mode), fingerprint(&t, mode));
        }
        // same knot, different diagrams, equal fingerprints
        assert_eq!(
            fingerprint(&u, FingerprintMode::Both),
            fingerprint(&Diagram::unknot(), FingerprintMode::Both)
        );
        // capped-out Jones gives the sentinel, distinct from successes
        let failed = fingerprint_capped(&t, FingerprintMode::Jones, 1);
        assert_ne!(failed, fingerprint(&t, FingerprintMode::Jones));
        assert_ne!(failed, fingerprint(&u, FingerprintMode::Jones));
    }
}
