//! The elliptic lambda function on the imaginary axis, the derived
//! automorphic combinations f and g, Landen's transformation, and Klein's
//! absolute invariant computed by two independent routes.

use crate::error::{Error, Result};
use crate::theta::theta_constants;
use std::f64::consts::PI;

/// Relative truncation threshold for the Eisenstein q-series.
const SERIES_TOL: f64 = 1e-18;
/// Term budget for the Eisenstein series before giving up.
const MAX_EISENSTEIN_TERMS: usize = 1_000_000;

/// Modular function values at tau = i t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModularValues {
    /// lambda(tau) = theta2^4 / theta3^4.
    pub lambda: f64,
    /// 1 - lambda(tau), computed independently as theta4^4 / theta3^4.
    pub one_minus_lambda: f64,
    /// f(tau) = lambda (1 - lambda).
    pub f: f64,
    /// g(tau) = lambda^2 / (1 - lambda).
    pub g: f64,
    /// Klein's absolute invariant J(tau).
    pub j: f64,
}

/// lambda(i t) = (theta2/theta3)^4.
pub fn lambda_modular(t: f64) -> Result<f64> {
    let th = theta_constants(t)?;
    Ok((th.t2 / th.t3).powi(4))
}

/// All modular values at tau = i t, with 1 - lambda evaluated through the
/// theta4 route rather than by subtraction.
pub fn modular_values(t: f64) -> Result<ModularValues> {
    let th = theta_constants(t)?;
    let lambda = (th.t2 / th.t3).powi(4);
    let one_minus = (th.t4 / th.t3).powi(4);
    let f = lambda * one_minus;
    let g = lambda * lambda / one_minus;
    let num = 1.0 - lambda + lambda * lambda;
    let j = (4.0 / 27.0) * num.powi(3) / (lambda * lambda * one_minus * one_minus);
    Ok(ModularValues { lambda, one_minus_lambda: one_minus, f, g, j })
}

/// f(i t) = lambda(1-lambda) and g(i t) = lambda^2/(1-lambda).
pub fn f_and_g(t: f64) -> Result<(f64, f64)> {
    let v = modular_values(t)?;
    Ok((v.f, v.g))
}

/// One Landen step: lambda(tau) -> lambda(2 tau).
pub fn landen_step(lambda: f64) -> Result<f64> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::Domain(format!("lambda must lie in (0,1), got {lambda}")));
    }
    let s = (1.0 - lambda).sqrt();
    let r = (1.0 - s) / (1.0 + s);
    Ok(r * r)
}

/// Klein's absolute invariant through the lambda route.
pub fn klein_j(t: f64) -> Result<f64> {
    Ok(modular_values(t)?.j)
}

fn divisor_sigma(n: u64, power: u32) -> u64 {
    let mut sum = 0u64;
    for d in 1..=n {
        if n % d == 0 {
            sum += d.pow(power);
        }
    }
    sum
}

/// Klein's invariant through the Ramanujan-Eisenstein series
/// `J = E4^3 / (E4^3 - E6^2)` with
/// `E4 = 1 + 240 sum sigma3(n) q^{2n}`, `E6 = 1 - 504 sum sigma5(n) q^{2n}`,
/// `q = e^{-pi t}`. Divisor sums are evaluated by direct enumeration.
pub fn klein_j_eisenstein(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("modulus must satisfy t > 0, got {t}")));
    }
    let q2 = (-2.0 * PI * t).exp();
    let mut e4 = 1.0f64;
    let mut e6 = 1.0f64;
    let mut qn = 1.0f64;
    let mut converged = false;
    for n in 1..=MAX_EISENSTEIN_TERMS {
        qn *= q2;
        let t4 = 240.0 * divisor_sigma(n as u64, 3) as f64 * qn;
        let t6 = 504.0 * divisor_sigma(n as u64, 5) as f64 * qn;
        e4 += t4;
        e6 -= t6;
        if t4 < SERIES_TOL * e4 && t6 < SERIES_TOL * e6.abs() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Convergence(format!(
            "Eisenstein series needs more than {MAX_EISENSTEIN_TERMS} terms at t = {t}; \
             map through J(-1/tau) = J(tau) first"
        )));
    }
    let e4c = e4 * e4 * e4;
    Ok(e4c / (e4c - e6 * e6))
}

/// Residual of the Schwarzian differential equation for lambda along the
/// imaginary axis, evaluated by 4th-order central differences in t.
///
/// With tau = i t and the standard Schwarzian
/// `{f, z} = f'''/f' - (3/2)(f''/f')^2`, lambda satisfies
///
/// ```text
/// {lambda, tau} = -(lambda'(tau))^2
///     * [ 1/(2 lambda^2) + 1/(2 (1-lambda)^2) + 1/(2 lambda (1-lambda)) ]
/// ```
///
/// The derivatives with respect to tau pick up powers of -i from the chain
/// rule; on the imaginary axis everything collapses to real arithmetic.
pub fn schwarzian_residual(t: f64, step: f64) -> Result<f64> {
    if !(t > 0.0) || !(step > 0.0) || step * 3.0 >= t {
        return Err(Error::Domain(format!("need 0 < 3*step < t, got t={t}, step={step}")));
    }
    let mut samples = [0.0f64; 7];
    for (i, s) in samples.iter_mut().enumerate() {
        *s = lambda_modular(t + (i as f64 - 3.0) * step)?;
    }
    let [fm3, fm2, fm1, f0, fp1, fp2, fp3] = samples;

    // 4th-order central stencils for d/dt, d2/dt2, d3/dt3
    let d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * step);
    let d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * step * step);
    let d3 = (fm3 - 8.0 * fm2 + 13.0 * fm1 - 13.0 * fp1 + 8.0 * fp2 - fp3)
        / (8.0 * step * step * step);

    // {lambda, tau} with tau = i t: d/dtau = -i d/dt, so
    // lambda'''/lambda' = -d3/d1 and (lambda''/lambda')^2 = -(d2/d1)^2.
    let schwarzian = -d3 / d1 + 1.5 * (d2 / d1) * (d2 / d1);
    // (lambda'(tau))^2 = (-i d1)^2 = -d1^2
    let lam = f0;
    let rational = 0.5 / (lam * lam) + 0.5 / ((1.0 - lam) * (1.0 - lam))
        + 0.5 / (lam * (1.0 - lam));
    let rhs = d1 * d1 * rational;
    Ok((schwarzian - rhs).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_at_fixed_point() {
        // tau = i is the fixed point of lambda(-1/tau) = 1 - lambda(tau)
        assert!((lambda_modular(1.0).unwrap() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn lambda_decays_at_large_t() {
        assert!(lambda_modular(30.0).unwrap() < 1e-35);
    }

    #[test]
    fn lambda_at_2i_matches_landen_of_half() {
        // lambda(2i) = ((1-k')/(1+k'))^2 with k' = 1/sqrt(2)
        let r = 1.0 / 2.0f64.sqrt();
        let expected = ((1.0 - r) / (1.0 + r)).powi(2);
        assert!((lambda_modular(2.0).unwrap() - expected).abs() < 1e-14);
    }

    #[test]
    fn lambda_splits_to_one() {
        for t in [0.2, 0.5, 1.0, 3.0] {
            let v = modular_values(t).unwrap();
            assert!((v.lambda + v.one_minus_lambda - 1.0).abs() < 1e-14);
            assert!(v.lambda > 0.0 && v.lambda < 1.0);
        }
    }

    #[test]
    fn f_and_g_at_fixed_point() {
        let (f, g) = f_and_g(1.0).unwrap();
        assert!((f - 0.25).abs() < 1e-14);
        assert!((g - 0.5).abs() < 1e-14);
    }

    #[test]
    fn f_invariant_under_inversion() {
        for t in [0.3, 0.5, 2.0] {
            let (f_lo, _) = f_and_g(t).unwrap();
            let (f_hi, _) = f_and_g(1.0 / t).unwrap();
            assert!((f_lo - f_hi).abs() < 1e-12, "t={t}");
        }
    }

    #[test]
    fn g_inversion_relation() {
        // g(-1/tau) = f(tau)/g(tau) on the imaginary axis
        for t in [0.3, 0.5, 2.0] {
            let (f, g) = f_and_g(t).unwrap();
            let (_, g_inv) = f_and_g(1.0 / t).unwrap();
            assert!((g_inv - f / g).abs() < 1e-11, "t={t}: {g_inv} vs {}", f / g);
        }
    }

    #[test]
    fn landen_step_algebra() {
        let r = 1.0 / 2.0f64.sqrt();
        let expected = ((1.0 - r) / (1.0 + r)).powi(2);
        assert!((landen_step(0.5).unwrap() - expected).abs() < 1e-16);
        // small-lambda Taylor limit: lambda(2tau) ~ lambda^2/16
        let l = 1e-6;
        let stepped = landen_step(l).unwrap();
        assert!((stepped / (l * l / 16.0) - 1.0).abs() < 1e-5);
    }

    #[test]
    fn landen_step_matches_theta_route() {
        let l = lambda_modular(0.7).unwrap();
        let direct = lambda_modular(1.4).unwrap();
        assert!((landen_step(l).unwrap() - direct).abs() < 1e-12);
    }

    #[test]
    fn landen_composition() {
        for t in [0.4, 0.9] {
            let mut l = lambda_modular(t).unwrap();
            for n in 1..=4 {
                l = landen_step(l).unwrap();
                let direct = lambda_modular(t * (1 << n) as f64).unwrap();
                assert!((l - direct).abs() < 1e-10, "t={t}, n={n}");
            }
        }
    }

    #[test]
    fn landen_rejects_out_of_range() {
        assert!(landen_step(0.0).is_err());
        assert!(landen_step(1.0).is_err());
    }

    #[test]
    fn klein_j_at_i() {
        assert!((klein_j(1.0).unwrap() - 1.0).abs() < 1e-13);
        assert!((klein_j_eisenstein(1.0).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn klein_j_modular_invariance() {
        let a = klein_j(2.0).unwrap();
        let b = klein_j(0.5).unwrap();
        assert!((a - b).abs() < 1e-11 * a.abs().max(1.0));
    }

    #[test]
    fn klein_j_two_routes_agree() {
        for t in [1.0, 2.0, 3.0] {
            let a = klein_j(t).unwrap();
            let b = klein_j_eisenstein(t).unwrap();
            assert!((a - b).abs() < 1e-10 * a.abs().max(1.0), "t={t}: {a} vs {b}");
        }
    }

    #[test]
    fn klein_j_at_least_one_on_axis() {
        for t in [0.3, 0.7, 1.0, 1.5, 4.0] {
            assert!(klein_j(t).unwrap() >= 1.0 - 1e-13);
        }
    }

    #[test]
    fn divisor_sums() {
        assert_eq!(divisor_sigma(6, 3), 1 + 8 + 27 + 216);
        assert_eq!(divisor_sigma(1, 5), 1);
        assert_eq!(divisor_sigma(4, 3), 1 + 8 + 64);
    }

    #[test]
    fn lambda_monotone_decreasing() {
        let mut prev = f64::INFINITY;
        let mut t = 0.1;
        while t <= 10.0 {
            let l = lambda_modular(t).unwrap();
            assert!(l < prev, "lambda not decreasing at t={t}");
            prev = l;
            t += 0.1;
        }
    }

    #[test]
    fn schwarzian_residual_small() {
        assert!(schwarzian_residual(1.0, 1e-3).unwrap() < 1e-6);
        assert!(schwarzian_residual(1.5, 1e-3).unwrap() < 1e-6);
    }

    #[test]
    fn schwarzian_fourth_order_convergence() {
        // In the truncation-dominated regime halving the step shrinks the
        // residual by roughly 2^4.
        let coarse = schwarzian_residual(1.0, 0.08).unwrap();
        let fine = schwarzian_residual(1.0, 0.04).unwrap();
        let ratio = coarse / fine;
        assert!((8.0..32.0).contains(&ratio), "ratio = {ratio}");
    }
}
