//! Zero-argument Jacobi theta constants on the imaginary axis.
//!
//! For tau = i t with t > 0 the three constants are real and positive:
//!
//! ```text
//! theta2(0|it) = 2 sum_{n>=0} q^{(n+1/2)^2}
//! theta3(0|it) = 1 + 2 sum_{n>=1} q^{n^2}
//! theta4(0|it) = 1 + 2 sum_{n>=1} (-1)^n q^{n^2}     with q = e^{-pi t}.
//! ```
//!
//! The direct series converges fast for t >= 1. For t < 1 the alternating
//! theta4 series loses all significant digits (its value is exponentially
//! small against O(1) terms), so the Jacobi imaginary transformation is used
//! instead: evaluating at 1/t and rescaling by 1/sqrt(t) swaps theta2 and
//! theta4 and leaves theta3 in place.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Relative truncation threshold for the q-series and q-products.
const SERIES_TOL: f64 = 1e-18;

/// Theta constants at tau = i * tau_imag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaConstants {
    pub t2: f64,
    pub t3: f64,
    pub t4: f64,
    /// Imaginary part of the modulus: tau = i * tau_imag.
    pub tau_imag: f64,
    pub terms_used: usize,
    /// Estimate of the truncation error of the underlying series.
    pub tail_bound: f64,
}

fn check_positive(t: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("theta modulus must satisfy t > 0, got {t}")));
    }
    Ok(())
}

/// Direct q-series evaluation at tau = i t. Accurate for t not too small;
/// used standalone as the dual route in identity checks.
pub fn theta_constants_direct(t: f64) -> Result<ThetaConstants> {
    check_positive(t)?;
    let pt = PI * t;

    // theta2: 2 sum_{n>=0} exp(-pi t (n+1/2)^2)
    let mut t2 = 0.0f64;
    let mut terms = 0usize;
    let mut tail = 0.0f64;
    for n in 0..1000 {
        let x = n as f64 + 0.5;
        let term = (-pt * x * x).exp();
        t2 += term;
        terms += 1;
        if term < SERIES_TOL * t2.max(f64::MIN_POSITIVE) {
            tail = term;
            break;
        }
    }
    t2 *= 2.0;

    // theta3 and theta4 share the same magnitudes with alternating signs.
    let mut s3 = 0.0f64;
    let mut s4 = 0.0f64;
    for n in 1..1000 {
        let nf = n as f64;
        let term = (-pt * nf * nf).exp();
        s3 += term;
        s4 += if n % 2 == 0 { term } else { -term };
        terms += 1;
        if term < SERIES_TOL {
            tail = tail.max(term);
            break;
        }
    }
    let t3 = 1.0 + 2.0 * s3;
    let t4 = 1.0 + 2.0 * s4;

    Ok(ThetaConstants { t2, t3, t4, tau_imag: t, terms_used: terms, tail_bound: tail })
}

/// Theta constants at tau = i t with automatic series selection.
///
/// For t >= 1 the direct series is used; for t < 1 the transformed series
/// (tau -> -1/tau) is used, which swaps theta2 and theta4.
pub fn theta_constants(t: f64) -> Result<ThetaConstants> {
    check_positive(t)?;
    if t >= 1.0 {
        theta_constants_direct(t)
    } else {
        let inner = theta_constants_direct(1.0 / t)?;
        let scale = 1.0 / t.sqrt();
        Ok(ThetaConstants {
            t2: scale * inner.t4,
            t3: scale * inner.t3,
            t4: scale * inner.t2,
            tau_imag: t,
            terms_used: inner.terms_used,
            tail_bound: scale * inner.tail_bound,
        })
    }
}

/// Recover `(k, k')` from the nome via the theta-constant representation
/// k = theta2^2/theta3^2, k' = theta4^2/theta3^2.
pub fn nome_to_k(q: f64) -> Result<(f64, f64)> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::Domain(format!("nome must lie in (0,1), got {q}")));
    }
    let t = -q.ln() / PI;
    let th = theta_constants(t)?;
    let k = (th.t2 / th.t3).powi(2);
    let kprime = (th.t4 / th.t3).powi(2);
    Ok((k, kprime))
}

/// Residuals of the two q-product identities
///
/// ```text
/// prod_{m>=0} (1 + q^{2m+1}) = (16 q / (k^2 k'^2))^{1/24}
/// prod_{m>=1} (1 + q^{2m})   = (k^2 / (16 q k'))^{1/12}
/// ```
///
/// with `k, k'` recovered from the nome. Both residuals should sit at the
/// double-precision floor for any q in (0,1).
pub fn product_identity_residuals(q: f64) -> Result<(f64, f64)> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::Domain(format!("nome must lie in (0,1), got {q}")));
    }
    let (k, kprime) = nome_to_k(q)?;

    let mut p_odd = 1.0f64;
    let mut m = 0u32;
    loop {
        let factor = q.powi(2 * m as i32 + 1);
        p_odd *= 1.0 + factor;
        if factor < SERIES_TOL || m > 10_000 {
            break;
        }
        m += 1;
    }
    let mut p_even = 1.0f64;
    let mut m = 1u32;
    loop {
        let factor = q.powi(2 * m as i32);
        p_even *= 1.0 + factor;
        if factor < SERIES_TOL || m > 10_000 {
            break;
        }
        m += 1;
    }

    let rhs1 = (16.0 * q / (k * k * kprime * kprime)).powf(1.0 / 24.0);
    let rhs2 = (k * k / (16.0 * q * kprime)).powf(1.0 / 12.0);
    Ok(((p_odd - rhs1).abs(), (p_even - rhs2).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_t_limits() {
        // q -> 0: theta3, theta4 -> 1, theta2 -> 0
        let th = theta_constants(50.0).unwrap();
        assert!((th.t3 - 1.0).abs() < 1e-15);
        assert!((th.t4 - 1.0).abs() < 1e-15);
        assert!(th.t2 < 1e-15);
    }

    #[test]
    fn self_dual_point() {
        // tau = i is fixed under tau -> -1/tau, so theta2 = theta4 there.
        let th = theta_constants(1.0).unwrap();
        assert!((th.t2 - th.t4).abs() < 1e-15 * th.t3);
    }

    #[test]
    fn transformed_matches_long_direct_series() {
        let auto = theta_constants(0.1).unwrap();
        let direct = theta_constants_direct(0.1).unwrap();
        assert!((auto.t2 - direct.t2).abs() < 1e-12);
        assert!((auto.t3 - direct.t3).abs() < 1e-12);
        assert!((auto.t4 - direct.t4).abs() < 1e-12);
    }

    #[test]
    fn switch_continuity_at_crossover() {
        // just below the crossover both routes are well-conditioned and must
        // agree at the same argument
        let t = 1.0 - 1e-9;
        let auto = theta_constants(t).unwrap();
        let direct = theta_constants_direct(t).unwrap();
        assert!((auto.t2 - direct.t2).abs() < 1e-13);
        assert!((auto.t3 - direct.t3).abs() < 1e-13);
        assert!((auto.t4 - direct.t4).abs() < 1e-13);
    }

    #[test]
    fn jacobi_quartic_identity() {
        for t in [0.05, 0.1, 0.3, 0.7, 1.0, 2.0, 5.0, 20.0] {
            let th = theta_constants(t).unwrap();
            let lhs = th.t3.powi(4);
            let rhs = th.t2.powi(4) + th.t4.powi(4);
            assert!((lhs - rhs).abs() < 1e-13 * lhs, "t={t}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn nonvanishing_on_grid() {
        let mut t = 0.05;
        while t <= 20.0 {
            let th = theta_constants(t).unwrap();
            assert!(th.t2 > 0.0 && th.t3 > 0.0 && th.t4 > 0.0, "vanishing at t={t}");
            t *= 1.5;
        }
    }

    #[test]
    fn nome_to_k_self_dual() {
        let (k, kp) = nome_to_k((-PI).exp()).unwrap();
        let r = 1.0 / 2.0f64.sqrt();
        assert!((k - r).abs() < 1e-14);
        assert!((kp - r).abs() < 1e-14);
    }

    #[test]
    fn nome_to_k_small_q() {
        let (k, kp) = nome_to_k(1e-8).unwrap();
        assert!(k < 1e-3);
        assert!((kp - 1.0).abs() < 1e-7);
    }

    #[test]
    fn nome_to_k_rejects_out_of_range() {
        assert!(nome_to_k(0.0).is_err());
        assert!(nome_to_k(1.0).is_err());
    }

    #[test]
    fn product_identities() {
        let (r1, r2) = product_identity_residuals((-PI).exp()).unwrap();
        assert!(r1 < 1e-13, "r1 = {r1}");
        assert!(r2 < 1e-13, "r2 = {r2}");
        let (r1, r2) = product_identity_residuals(0.01).unwrap();
        assert!(r1 < 1e-14, "r1 = {r1}");
        assert!(r2 < 1e-14, "r2 = {r2}");
    }

    #[test]
    fn rejects_nonpositive_modulus() {
        assert!(theta_constants(0.0).is_err());
        assert!(theta_constants(-1.0).is_err());
        assert!(theta_constants(f64::NAN).is_err());
    }
}
