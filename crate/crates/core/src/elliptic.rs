//! Phase-diagram classification and elliptic modulus data for the XY chain.
//!
//! The physical parameters are the transverse field `h >= 0` and the
//! anisotropy `gamma > 0`. Each bulk region of the phase diagram carries its
//! own elliptic parameter `k`, from which the complete elliptic integrals,
//! the modulus ratio `tau0 = I(k')/I(k)` and the nome `q = exp(-pi tau0)`
//! are derived.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Default absolute tolerance for snapping inputs onto the special lines.
///
/// The closed forms blow up logarithmically near the critical lines, so
/// exact-line inputs must be intercepted rather than evaluated.
pub const DEFAULT_TIE_TOL: f64 = 1e-9;

/// Relative AGM termination threshold.
const AGM_TOL: f64 = 1e-16;

/// Region of the (h, gamma) phase diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// 4(1 - gamma^2) < h^2 < 4.
    Case1a,
    /// h^2 < 4(1 - gamma^2).
    Case1b,
    /// h > 2.
    Case2,
    /// h = 2 sqrt(1 - gamma^2); ground state is a sum of two product states.
    FactorizingLine,
    /// h = 2 critical line.
    CriticalField,
    /// gamma = 0, h < 2 critical line (XX model).
    CriticalXx,
}

impl Region {
    /// Bulk regions are the ones with a regular elliptic parameter.
    pub fn is_bulk(self) -> bool {
        matches!(self, Region::Case1a | Region::Case1b | Region::Case2)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Region::Case1a => "Case1a",
            Region::Case1b => "Case1b",
            Region::Case2 => "Case2",
            Region::FactorizingLine => "FactorizingLine",
            Region::CriticalField => "CriticalField",
            Region::CriticalXx => "CriticalXX",
        }
    }
}

/// A point of the phase diagram together with its classified region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    pub h: f64,
    pub gamma: f64,
    pub region: Region,
}

impl PhasePoint {
    /// Classify `(h, gamma)` with the default tie tolerance.
    pub fn new(h: f64, gamma: f64) -> Result<Self> {
        Self::with_tie_tol(h, gamma, DEFAULT_TIE_TOL)
    }

    pub fn with_tie_tol(h: f64, gamma: f64, tie_tol: f64) -> Result<Self> {
        let region = classify_region(h, gamma, tie_tol)?;
        Ok(PhasePoint { h, gamma, region })
    }
}

/// Elliptic modulus data attached to a phase point.
///
/// On the factorizing line `k = 0` and `tau0` is flagged infinite; the
/// entropy path short-circuits there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticData {
    pub k: f64,
    pub kprime: f64,
    /// Complete elliptic integral I(k).
    pub ik: f64,
    /// Complete elliptic integral I(k').
    pub ikprime: f64,
    /// tau0 = I(k')/I(k).
    pub tau0: f64,
    /// eps = pi * tau0.
    pub eps: f64,
    /// Nome q = exp(-eps).
    pub q: f64,
}

impl EllipticData {
    pub fn is_factorizing(&self) -> bool {
        self.k == 0.0
    }
}

/// Assign a region to `(h, gamma)`; special lines take precedence over
/// the bulk cases.
pub fn classify_region(h: f64, gamma: f64, tie_tol: f64) -> Result<Region> {
    if !h.is_finite() || !gamma.is_finite() {
        return Err(Error::Domain(format!("non-finite input h={h}, gamma={gamma}")));
    }
    if h < 0.0 {
        return Err(Error::Domain(format!("h must be >= 0, got {h}")));
    }
    if gamma < -tie_tol {
        return Err(Error::Domain(format!("gamma must be > 0, got {gamma}")));
    }

    if (h - 2.0).abs() <= tie_tol {
        return Ok(Region::CriticalField);
    }
    if gamma <= tie_tol {
        if h < 2.0 {
            return Ok(Region::CriticalXx);
        }
        return Err(Error::Domain(format!(
            "gamma = {gamma} is on the isotropic line with h > 2; no bulk region applies"
        )));
    }
    if gamma <= 1.0 {
        let h_f = 2.0 * (1.0 - gamma * gamma).sqrt();
        if (h - h_f).abs() <= tie_tol {
            return Ok(Region::FactorizingLine);
        }
    }

    if h > 2.0 {
        Ok(Region::Case2)
    } else if h * h > 4.0 * (1.0 - gamma * gamma) {
        Ok(Region::Case1a)
    } else {
        Ok(Region::Case1b)
    }
}

/// Elliptic parameter `k` of a phase point.
///
/// Returns `k = 0` on the factorizing line (the Case-1b numerator vanishes
/// there) and an error on the critical lines, where `k` degenerates to 1.
pub fn elliptic_parameter(point: &PhasePoint) -> Result<f64> {
    let h = point.h;
    let g = point.gamma;
    match point.region {
        Region::Case1a => Ok(((h / 2.0) * (h / 2.0) + g * g - 1.0).sqrt() / g),
        Region::Case1b => Ok(((1.0 - h * h / 4.0 - g * g) / (1.0 - h * h / 4.0)).sqrt()),
        Region::Case2 => Ok(g / ((h / 2.0) * (h / 2.0) + g * g - 1.0).sqrt()),
        Region::FactorizingLine => Ok(0.0),
        Region::CriticalField | Region::CriticalXx => Err(Error::CriticalPoint(format!(
            "k degenerates to 1 on the {} line",
            point.region.as_str()
        ))),
    }
}

/// Complementary parameter `k'` in a cancellation-free form per region.
///
/// Algebraically identical to `sqrt(1 - k^2)` but accurate near the critical
/// lines where `k -> 1`.
fn complementary_parameter(point: &PhasePoint) -> Result<f64> {
    let h = point.h;
    let g = point.gamma;
    match point.region {
        // 1 - k^2 = (1 - (h/2)^2) / gamma^2
        Region::Case1a => Ok(((1.0 - h / 2.0) * (1.0 + h / 2.0)).sqrt() / g),
        // 1 - k^2 = gamma^2 / (1 - h^2/4)
        Region::Case1b => Ok(g / (1.0 - h * h / 4.0).sqrt()),
        // 1 - k^2 = ((h/2)^2 - 1) / ((h/2)^2 + gamma^2 - 1)
        Region::Case2 => {
            let num = (h / 2.0 - 1.0) * (h / 2.0 + 1.0);
            Ok((num / ((h / 2.0) * (h / 2.0) + g * g - 1.0)).sqrt())
        }
        Region::FactorizingLine => Ok(1.0),
        Region::CriticalField | Region::CriticalXx => Err(Error::CriticalPoint(format!(
            "k' degenerates to 0 on the {} line",
            point.region.as_str()
        ))),
    }
}

/// Arithmetic-geometric mean of `(a, b)`, both positive. Quadratic
/// convergence reaches the rounding floor within a handful of iterations;
/// the gap test alone can stall one ulp above the threshold, so iteration
/// stops as soon as the gap fails to shrink.
fn agm(mut a: f64, mut b: f64) -> f64 {
    let mut gap = (a - b).abs();
    while gap > AGM_TOL * a {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        a = an;
        b = bn;
        let next = (a - b).abs();
        if next >= gap {
            break;
        }
        gap = next;
    }
    0.5 * (a + b)
}

/// Complete elliptic integral of the first kind,
/// `I(k) = integral_0^1 dx / sqrt((1-x^2)(1-k^2 x^2)) = pi / (2 AGM(1, k'))`.
pub fn complete_elliptic_k(k: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&k) {
        return Err(Error::Domain(format!("elliptic parameter must lie in [0,1), got {k}")));
    }
    let kprime = ((1.0 - k) * (1.0 + k)).sqrt();
    Ok(PI / (2.0 * agm(1.0, kprime)))
}

/// I(k) given the complementary parameter directly; avoids recomputing
/// `sqrt(1-k^2)` when an accurate `k'` is already known.
fn elliptic_k_from_complementary(kprime: f64) -> f64 {
    PI / (2.0 * agm(1.0, kprime))
}

/// Full elliptic modulus data `(k, k', I(k), I(k'), tau0, eps, q)` for a
/// bulk or factorizing-line point.
pub fn modulus_data(point: &PhasePoint) -> Result<EllipticData> {
    if point.region == Region::FactorizingLine {
        return Ok(EllipticData {
            k: 0.0,
            kprime: 1.0,
            ik: PI / 2.0,
            ikprime: f64::INFINITY,
            tau0: f64::INFINITY,
            eps: f64::INFINITY,
            q: 0.0,
        });
    }
    if !point.region.is_bulk() {
        return Err(Error::CriticalPoint(format!(
            "modulus data undefined on the {} line",
            point.region.as_str()
        )));
    }
    let k = elliptic_parameter(point)?;
    let kprime = complementary_parameter(point)?;
    let ik = elliptic_k_from_complementary(kprime);
    let ikprime = elliptic_k_from_complementary(k);
    let tau0 = ikprime / ik;
    let eps = PI * tau0;
    Ok(EllipticData { k, kprime, ik, ikprime, tau0, eps, q: (-eps).exp() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_bulk_points() {
        assert_eq!(classify_region(3.0, 1.0, DEFAULT_TIE_TOL).unwrap(), Region::Case2);
        assert_eq!(classify_region(0.0, 0.5, DEFAULT_TIE_TOL).unwrap(), Region::Case1b);
        assert_eq!(classify_region(1.9, 1.0, DEFAULT_TIE_TOL).unwrap(), Region::Case1a);
    }

    #[test]
    fn classify_special_lines() {
        let h_f = 2.0 * (1.0f64 - 0.25).sqrt();
        assert_eq!(classify_region(h_f, 0.5, DEFAULT_TIE_TOL).unwrap(), Region::FactorizingLine);
        assert_eq!(classify_region(2.0, 1.0, DEFAULT_TIE_TOL).unwrap(), Region::CriticalField);
        assert_eq!(classify_region(1.0, 0.0, DEFAULT_TIE_TOL).unwrap(), Region::CriticalXx);
    }

    #[test]
    fn classify_rejects_bad_domain() {
        assert!(matches!(classify_region(-1.0, 0.5, DEFAULT_TIE_TOL), Err(Error::Domain(_))));
        assert!(matches!(classify_region(1.0, -0.5, DEFAULT_TIE_TOL), Err(Error::Domain(_))));
    }

    #[test]
    fn k_case2_direct_value() {
        // (h=3, gamma=1): k = 1/sqrt(2.25 + 1 - 1) = 2/3
        let p = PhasePoint::new(3.0, 1.0).unwrap();
        assert!((elliptic_parameter(&p).unwrap() - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn k_case1b_direct_value() {
        // (h=0, gamma=0.5): k = sqrt(0.75)
        let p = PhasePoint::new(0.0, 0.5).unwrap();
        assert!((elliptic_parameter(&p).unwrap() - 0.75f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn k_vanishes_on_factorizing_line() {
        for gamma in [0.25, 0.5, 0.8] {
            let h = 2.0 * (1.0f64 - gamma * gamma).sqrt();
            let p = PhasePoint::new(h, gamma).unwrap();
            assert_eq!(p.region, Region::FactorizingLine);
            assert_eq!(elliptic_parameter(&p).unwrap(), 0.0);
        }
    }

    #[test]
    fn k_errors_on_critical_lines() {
        let p = PhasePoint::new(2.0, 1.0).unwrap();
        assert!(matches!(elliptic_parameter(&p), Err(Error::CriticalPoint(_))));
        let p = PhasePoint::new(1.0, 0.0).unwrap();
        assert!(matches!(elliptic_parameter(&p), Err(Error::CriticalPoint(_))));
    }

    #[test]
    fn elliptic_k_at_zero() {
        assert!((complete_elliptic_k(0.0).unwrap() - PI / 2.0).abs() < 1e-16);
    }

    #[test]
    fn elliptic_k_symmetric_point() {
        // k = k' = 1/sqrt(2): I(k) = I(k')
        let k = 1.0 / 2.0f64.sqrt();
        let kp = (1.0 - k * k).sqrt();
        let a = complete_elliptic_k(k).unwrap();
        let b = complete_elliptic_k(kp).unwrap();
        assert!((a - b).abs() < 1e-15 * a);
    }

    #[test]
    fn elliptic_k_rejects_out_of_range() {
        assert!(complete_elliptic_k(1.0).is_err());
        assert!(complete_elliptic_k(-0.1).is_err());
    }

    #[test]
    fn modulus_data_case2() {
        let p = PhasePoint::new(3.0, 1.0).unwrap();
        let d = modulus_data(&p).unwrap();
        assert!((d.k - 2.0 / 3.0).abs() < 1e-15);
        assert!((d.kprime - (5.0f64).sqrt() / 3.0).abs() < 1e-15);
        assert!((d.k * d.k + d.kprime * d.kprime - 1.0).abs() < 1e-15);
        assert!(d.q > 0.0 && d.q < 1.0);
        assert!((d.q - (-PI * d.ikprime / d.ik).exp()).abs() < 1e-16);
    }

    #[test]
    fn modulus_data_factorizing_flags() {
        let h = 2.0 * (1.0f64 - 0.25).sqrt();
        let p = PhasePoint::new(h, 0.5).unwrap();
        let d = modulus_data(&p).unwrap();
        assert!(d.is_factorizing());
        assert!(d.tau0.is_infinite());
        assert_eq!(d.q, 0.0);
    }

    #[test]
    fn modulus_data_errors_on_critical() {
        let p = PhasePoint::new(2.0, 0.7).unwrap();
        assert!(matches!(modulus_data(&p), Err(Error::CriticalPoint(_))));
    }

    #[test]
    fn parameter_identity_on_grid() {
        for h in [0.5, 1.2, 1.9, 2.5, 3.0, 5.0] {
            for gamma in [0.25, 0.5, 1.0] {
                let p = PhasePoint::new(h, gamma).unwrap();
                let d = modulus_data(&p).unwrap();
                assert!(d.k > 0.0 && d.k < 1.0, "k out of range at ({h},{gamma})");
                assert!(
                    (d.k * d.k + d.kprime * d.kprime - 1.0).abs() < 1e-15,
                    "k^2+k'^2 != 1 at ({h},{gamma})"
                );
                assert!(d.ik > 0.0 && d.ikprime > 0.0 && d.tau0 > 0.0);
            }
        }
    }

    #[test]
    fn case2_is_reciprocal_of_case1a_formula() {
        // For h > 2 the Case-2 parameter is the reciprocal of the Case-1a
        // expression evaluated formally.
        for h in [2.5, 3.0, 5.0] {
            for g in [0.25, 0.5, 1.0] {
                let p = PhasePoint::new(h, g).unwrap();
                let k2 = elliptic_parameter(&p).unwrap();
                let k1a = ((h / 2.0) * (h / 2.0) + g * g - 1.0).sqrt() / g;
                assert!((k2 * k1a - 1.0).abs() < 1e-13, "({h},{g}): {}", k2 * k1a);
            }
        }
    }
}
