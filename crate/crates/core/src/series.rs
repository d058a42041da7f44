//! Independent ground truth: direct summation of the convergent eigenvalue
//! series for the Renyi and von Neumann entropies.
//!
//! The limiting spectrum of the reduced density matrix factorizes over
//! two-level modes with eigenvalue asymmetry
//!
//! ```text
//! lambda_m = tanh((m + (1-sigma)/2) pi tau0),   m in Z,
//! ```
//!
//! where sigma = 0 selects the half-integer spectrum of the h > 2 phase and
//! sigma = 1 the integer spectrum of the h < 2 phase. This module never
//! touches the theta-function route; it is the oracle against which the
//! closed forms are checked.

use crate::elliptic::{modulus_data, PhasePoint, Region};
use crate::entropy::{Method, RenyiResult};
use crate::error::{Error, Result};

/// Hard cap on the summation window.
const MAX_TERMS: usize = 1_000_000;

/// Default tail tolerance.
pub const DEFAULT_TOL: f64 = 1e-13;

/// An explicit window of eigenvalue asymmetries, used by the folding checks.
#[derive(Debug, Clone)]
pub struct EigenvalueSpectrum {
    pub tau0: f64,
    /// Branch selector: 0 for h > 2, 1 for h < 2.
    pub sigma: u8,
    /// lambda_m for m = -half_window ..= half_window, in order.
    pub lambdas: Vec<f64>,
}

impl EigenvalueSpectrum {
    pub fn new(tau0: f64, sigma: u8, half_window: usize) -> Self {
        let offset = (1.0 - sigma as f64) / 2.0;
        let lambdas = (-(half_window as i64)..=half_window as i64)
            .map(|m| ((m as f64 + offset) * std::f64::consts::PI * tau0).tanh())
            .collect();
        EigenvalueSpectrum { tau0, sigma, lambdas }
    }
}

fn sigma_for(region: Region) -> Result<u8> {
    match region {
        Region::Case2 => Ok(0),
        Region::Case1a | Region::Case1b => Ok(1),
        other => Err(Error::Domain(format!(
            "series oracle requires a bulk region, got {}",
            other.as_str()
        ))),
    }
}

/// Per-mode Renyi summand, cancellation-safe for large x:
/// `ln[((1+lambda)/2)^alpha + ((1-lambda)/2)^alpha]` with
/// `(1+lambda)/2 = 1/(1+e^{-x})`, written as
/// `ln(1 + e^{-alpha x}) - alpha ln(1 + e^{-x})`.
fn renyi_term(x: f64, alpha: f64) -> f64 {
    (-alpha * x).exp().ln_1p() - alpha * (-x).exp().ln_1p()
}

/// Per-mode binary entropy with p = 1/(1+e^{-x}):
/// `H(p) = ln(1+e^{-x}) + x e^{-x}/(1+e^{-x})`.
fn binary_entropy_term(x: f64) -> f64 {
    let e = (-x).exp();
    e.ln_1p() + x * e / (1.0 + e)
}

/// Renyi entropy by direct series summation at an explicit `(tau0, sigma)`.
///
/// Exposed separately so degenerate moduli (large tau0 near the factorizing
/// line) can be probed without constructing a phase point.
pub fn renyi_series_raw(tau0: f64, sigma: u8, alpha: f64, tol: f64) -> Result<(f64, f64)> {
    if !(alpha > 0.0) || alpha == 1.0 {
        return Err(Error::Domain(format!("order must satisfy alpha > 0, alpha != 1, got {alpha}")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let eps = std::f64::consts::PI * tau0;
    let prefactor = 1.0 / (1.0 - alpha);

    let mut sum = 0.0f64;
    let mut tail = f64::INFINITY;
    let m_start: usize = if sigma == 0 { 0 } else { 1 };
    let mut converged = false;
    for m in m_start..MAX_TERMS {
        let x = if sigma == 0 { (2 * m + 1) as f64 * eps } else { (2 * m) as f64 * eps };
        sum += renyi_term(x, alpha);
        // geometric tail bound from the e^{-alpha x} and alpha e^{-x} decay
        let next_x = x + 2.0 * eps;
        let r_a = (-2.0 * alpha * eps).exp();
        let r_1 = (-2.0 * eps).exp();
        tail = ((-alpha * next_x).exp() / (1.0 - r_a) + alpha * (-next_x).exp() / (1.0 - r_1))
            * 2.0
            * prefactor.abs();
        if tail < tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Convergence(format!(
            "eigenvalue series did not reach tol={tol} within {MAX_TERMS} terms (tau0={tau0})"
        )));
    }
    let mut value = 2.0 * prefactor * sum;
    if sigma == 1 {
        // the m = 0 mode is maximally mixed: ln(2 * 2^{-alpha})/(1-alpha) = ln 2
        value += std::f64::consts::LN_2;
    }
    Ok((value, tail))
}

/// Renyi entropy of a bulk phase point by direct series summation.
pub fn renyi_series(point: &PhasePoint, alpha: f64, tol: f64) -> Result<RenyiResult> {
    let sigma = sigma_for(point.region)?;
    let data = modulus_data(point)?;
    let (value, tail) = renyi_series_raw(data.tau0, sigma, alpha, tol)?;
    Ok(RenyiResult { value, method: Method::Series, alpha, point: *point, tol_attained: tail })
}

/// Von Neumann entropy by direct series summation at explicit `(tau0, sigma)`.
pub fn von_neumann_series_raw(tau0: f64, sigma: u8, tol: f64) -> Result<(f64, f64)> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let eps = std::f64::consts::PI * tau0;
    let mut sum = 0.0f64;
    let mut tail = f64::INFINITY;
    let m_start: usize = if sigma == 0 { 0 } else { 1 };
    let mut converged = false;
    for m in m_start..MAX_TERMS {
        let x = if sigma == 0 { (2 * m + 1) as f64 * eps } else { (2 * m) as f64 * eps };
        sum += binary_entropy_term(x);
        let next_x = x + 2.0 * eps;
        // H(p) ~ (1 + x) e^{-x} for large x
        tail = 2.0 * (1.0 + next_x) * (-next_x).exp() / (1.0 - (-2.0 * eps).exp());
        if tail < tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Convergence(format!(
            "eigenvalue series did not reach tol={tol} within {MAX_TERMS} terms (tau0={tau0})"
        )));
    }
    let mut value = 2.0 * sum;
    if sigma == 1 {
        value += std::f64::consts::LN_2; // H(1/2) from the m = 0 mode
    }
    Ok((value, tail))
}

/// Von Neumann entropy of a bulk phase point by direct series summation.
pub fn von_neumann_series(point: &PhasePoint, tol: f64) -> Result<RenyiResult> {
    let sigma = sigma_for(point.region)?;
    let data = modulus_data(point)?;
    let (value, tail) = von_neumann_series_raw(data.tau0, sigma, tol)?;
    Ok(RenyiResult { value, method: Method::Series, alpha: 1.0, point: *point, tol_attained: tail })
}
