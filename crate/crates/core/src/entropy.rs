//! Closed-form large-block Renyi entropy of the XY chain, the von Neumann
//! limit, the asymptotic estimates, the alpha-inversion symmetry and the
//! alpha = 2^n elementary ladder.
//!
//! All entropies are in nats. The closed forms evaluate theta constants at
//! tau = alpha * i * tau0; the small-Im-tau regime is handled automatically
//! by the transformed theta series.

use crate::elliptic::{modulus_data, EllipticData, PhasePoint, Region};
use crate::error::{Error, Result};
use crate::modular::f_and_g;
use crate::theta::theta_constants;
use std::f64::consts::{LN_2, PI};

/// Band around alpha = 1 routed to the von Neumann closed form to avoid
/// catastrophic cancellation in 1/(1-alpha).
const ALPHA_ONE_BAND: f64 = 1e-6;

/// Validity guard for the small-alpha estimate.
const SMALL_ALPHA_GUARD: f64 = 0.2;

/// How an entropy value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Series,
    AsymptoticLargeAlpha,
    AsymptoticSmallAlpha,
    CriticalEstimate,
    XxEstimate,
    Factorizing,
    VonNeumann,
    LandenLadder,
    AlphaInversion,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "ClosedForm",
            Method::Series => "Series",
            Method::AsymptoticLargeAlpha => "AsymptoticLargeAlpha",
            Method::AsymptoticSmallAlpha => "AsymptoticSmallAlpha",
            Method::CriticalEstimate => "CriticalEstimate",
            Method::XxEstimate => "XXEstimate",
            Method::Factorizing => "Factorizing",
            Method::VonNeumann => "VonNeumann",
            Method::LandenLadder => "LandenLadder",
            Method::AlphaInversion => "AlphaInversion",
        }
    }
}

/// An entropy value with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenyiResult {
    pub value: f64,
    pub method: Method,
    pub alpha: f64,
    pub point: PhasePoint,
    pub tol_attained: f64,
}

/// The elliptic parameter pair attached to the scaled nome q^alpha.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaModulus {
    pub alpha: f64,
    pub q_alpha: f64,
    pub k_alpha: f64,
    pub kprime_alpha: f64,
}

/// k(q^alpha) and its complement, through the theta-constant representation
/// at tau = alpha i tau0.
pub fn alpha_modulus(data: &EllipticData, alpha: f64) -> Result<AlphaModulus> {
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!("order must be positive, got {alpha}")));
    }
    let th = theta_constants(alpha * data.tau0)?;
    Ok(AlphaModulus {
        alpha,
        q_alpha: (-alpha * data.eps).exp(),
        k_alpha: (th.t2 / th.t3).powi(2),
        kprime_alpha: (th.t4 / th.t3).powi(2),
    })
}

fn require_not_critical(point: &PhasePoint) -> Result<()> {
    match point.region {
        Region::CriticalField | Region::CriticalXx => Err(Error::CriticalPoint(format!(
            "entropy closed forms degenerate on the {} line",
            point.region.as_str()
        ))),
        _ => Ok(()),
    }
}

fn factorizing_result(point: &PhasePoint, alpha: f64) -> RenyiResult {
    RenyiResult { value: LN_2, method: Method::Factorizing, alpha, point: *point, tol_attained: 0.0 }
}

/// Closed-form Renyi entropy.
///
/// For h > 2:
/// `S = (1/6)(a/(1-a)) ln(k k') - (1/3)(1/(1-a)) ln(theta2 theta4 / theta3^2) + (1/3) ln 2`,
/// for h < 2:
/// `S = (1/6)(a/(1-a)) ln(k'/k^2) + (1/3)(1/(1-a)) ln(theta2^2/(theta3 theta4)) + (1/3) ln 2`,
/// with the theta constants at tau = alpha i tau0. The factorizing line
/// short-circuits to ln 2; orders within 1e-6 of 1 route to the von Neumann
/// closed form.
pub fn renyi_closed_form(point: &PhasePoint, alpha: f64) -> Result<RenyiResult> {
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!("order must be positive, got {alpha}")));
    }
    require_not_critical(point)?;
    if point.region == Region::FactorizingLine {
        return Ok(factorizing_result(point, alpha));
    }
    if (alpha - 1.0).abs() <= ALPHA_ONE_BAND {
        return von_neumann(point);
    }
    let d = modulus_data(point)?;
    let th = theta_constants(alpha * d.tau0)?;
    let pre = 1.0 / (1.0 - alpha);
    let value = match point.region {
        Region::Case2 => {
            (alpha * pre / 6.0) * (d.k * d.kprime).ln()
                - (pre / 3.0) * (th.t2 * th.t4 / (th.t3 * th.t3)).ln()
                + LN_2 / 3.0
        }
        _ => {
            (alpha * pre / 6.0) * (d.kprime / (d.k * d.k)).ln()
                + (pre / 3.0) * (th.t2 * th.t2 / (th.t3 * th.t4)).ln()
                + LN_2 / 3.0
        }
    };
    Ok(RenyiResult {
        value,
        method: Method::ClosedForm,
        alpha,
        point: *point,
        tol_attained: 1e-13,
    })
}

/// Closed-form von Neumann entropy (the alpha -> 1 limit).
///
/// For h > 2: `S = (1/6)[ln(4/(k k')) + (k^2 - k'^2) 2 I(k) I(k') / pi]`,
/// for h < 2: `S = (1/6)[ln(4 k^2 / k') + (2 - k^2) 2 I(k) I(k') / pi]`.
pub fn von_neumann(point: &PhasePoint) -> Result<RenyiResult> {
    require_not_critical(point)?;
    if point.region == Region::FactorizingLine {
        return Ok(factorizing_result(point, 1.0));
    }
    let d = modulus_data(point)?;
    let ii = 2.0 * d.ik * d.ikprime / PI;
    let value = match point.region {
        Region::Case2 => {
            ((4.0 / (d.k * d.kprime)).ln() + (d.k * d.k - d.kprime * d.kprime) * ii) / 6.0
        }
        _ => ((4.0 * d.k * d.k / d.kprime).ln() + (2.0 - d.k * d.k) * ii) / 6.0,
    };
    Ok(RenyiResult {
        value,
        method: Method::VonNeumann,
        alpha: 1.0,
        point: *point,
        tol_attained: 1e-14,
    })
}

/// The alpha -> infinity limit: the single-copy entanglement -ln p_max.
///
/// For h > 2: `S = -(1/6) ln(k k'/4) - (pi/12) I(k')/I(k)`,
/// for h < 2: `S = -(1/6) ln(k'/(4 k^2)) + (pi/6) I(k')/I(k)`.
pub fn large_alpha_limit(point: &PhasePoint) -> Result<RenyiResult> {
    require_not_critical(point)?;
    if point.region == Region::FactorizingLine {
        return Ok(factorizing_result(point, f64::INFINITY));
    }
    let d = modulus_data(point)?;
    let value = match point.region {
        Region::Case2 => -(d.k * d.kprime / 4.0).ln() / 6.0 - PI * d.tau0 / 12.0,
        _ => -(d.kprime / (4.0 * d.k * d.k)).ln() / 6.0 + PI * d.tau0 / 6.0,
    };
    Ok(RenyiResult {
        value,
        method: Method::AsymptoticLargeAlpha,
        alpha: f64::INFINITY,
        point: *point,
        tol_attained: 1e-14,
    })
}

/// The large-alpha asymptotic with the exact alpha/(1-alpha) prefactor
/// retained; its error against the closed form is O(e^{-alpha pi tau0}).
pub fn large_alpha_estimate(point: &PhasePoint, alpha: f64) -> Result<RenyiResult> {
    if !(alpha > 1.0) {
        return Err(Error::Guard(format!("large-alpha estimate needs alpha > 1, got {alpha}")));
    }
    require_not_critical(point)?;
    if point.region == Region::FactorizingLine {
        return Ok(factorizing_result(point, alpha));
    }
    let d = modulus_data(point)?;
    let pre = alpha / (1.0 - alpha);
    let value = match point.region {
        Region::Case2 => pre * ((d.k * d.kprime / 4.0).ln() / 6.0 + PI * d.tau0 / 12.0),
        _ => {
            pre * ((d.kprime / (4.0 * d.k * d.k)).ln() / 6.0 - PI * d.tau0 / 6.0)
                + LN_2 / (1.0 - alpha)
        }
    };
    Ok(RenyiResult {
        value,
        method: Method::AsymptoticLargeAlpha,
        alpha,
        point: *point,
        tol_attained: (-alpha * d.eps).exp() / alpha,
    })
}

/// Leading small-alpha estimate `S ~ ((1+alpha)/alpha)(pi/12) I(k)/I(k')`,
/// valid for alpha tau0 << 1.
pub fn small_alpha_estimate(point: &PhasePoint, alpha: f64) -> Result<RenyiResult> {
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!("order must be positive, got {alpha}")));
    }
    require_not_critical(point)?;
    if point.region == Region::FactorizingLine {
        return Err(Error::Guard(
            "small-alpha estimate diverges off the factorizing line but the line itself \
             is alpha-independent; no estimate applies"
                .into(),
        ));
    }
    let d = modulus_data(point)?;
    if alpha * d.tau0 >= SMALL_ALPHA_GUARD {
        return Err(Error::Guard(format!(
            "small-alpha estimate requires alpha*tau0 < {SMALL_ALPHA_GUARD}, got {}",
            alpha * d.tau0
        )));
    }
    let value = (1.0 + alpha) / alpha * (PI / 12.0) * d.ik / d.ikprime;
    Ok(RenyiResult {
        value,
        method: Method::AsymptoticSmallAlpha,
        alpha,
        point: *point,
        tol_attained: alpha,
    })
}

/// Critical-magnetic-field estimate
/// `S ~ ((1+alpha)/alpha)(-(1/12) ln|2-h| + (1/6) ln 4 gamma)` for h near 2.
pub fn critical_field_estimate(gamma: f64, h: f64, alpha: f64) -> Result<f64> {
    if !(gamma > 0.0) || !(alpha > 0.0) {
        return Err(Error::Domain(format!(
            "critical-field estimate needs gamma > 0 and alpha > 0, got gamma={gamma}, alpha={alpha}"
        )));
    }
    let gap = (h - 2.0).abs();
    if gap == 0.0 || gap >= 0.5 {
        return Err(Error::Domain(format!(
            "critical-field estimate requires 0 < |h-2| < 0.5, got |h-2| = {gap}"
        )));
    }
    Ok((1.0 + alpha) / alpha * (-gap.ln() / 12.0 + (4.0 * gamma).ln() / 6.0))
}

/// XX-model-limit estimate
/// `S ~ ((1+alpha)/alpha)(-(1/6) ln gamma + (1/12) ln(4-h^2) + (1/6) ln 2)`
/// for small anisotropy at h < 2.
pub fn xx_limit_estimate(gamma: f64, h: f64, alpha: f64) -> Result<f64> {
    if !(gamma > 0.0) || !(alpha > 0.0) {
        return Err(Error::Domain(format!(
            "XX-limit estimate needs gamma > 0 and alpha > 0, got gamma={gamma}, alpha={alpha}"
        )));
    }
    if gamma >= 0.5 {
        return Err(Error::Domain(format!(
            "XX-limit estimate requires small anisotropy gamma < 0.5, got {gamma}"
        )));
    }
    if !(h >= 0.0) || h * h >= 4.0 * (1.0 - gamma * gamma) {
        return Err(Error::Domain(format!(
            "XX-limit estimate requires 0 <= h < 2 sqrt(1-gamma^2), got h = {h}"
        )));
    }
    Ok((1.0 + alpha) / alpha
        * (-gamma.ln() / 6.0 + (4.0 - h * h).ln() / 12.0 + LN_2 / 6.0))
}

/// Entropy at the inverted order alpha' = 1/(alpha tau0^2), obtained from
/// S(alpha) through the modular symmetry of the theta ratios.
///
/// For h > 2:
/// `S(a') = [a t^2/(a t^2 - 1)](1-a) S(a) + (1/6)[(1 - a^2 t^2)/(a t^2 - 1)] ln(k k'/4)`
/// with t = tau0. For h < 2 the transformation of g picks up the modular
/// function f, and the relation reads
/// `S(a') = [a t^2 (a-1)/(a t^2 - 1)] S(a)
///        + [(1 + a^2 t^2)/(6(a t^2 - 1))] ln(k'/(4 k^2))
///        + [2 a t^2/(3(a t^2 - 1))] ln 2
///        + [a t^2/(12(a t^2 - 1))] ln f(alpha i tau0)`.
pub fn alpha_inversion(point: &PhasePoint, alpha: f64) -> Result<RenyiResult> {
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!("order must be positive, got {alpha}")));
    }
    require_not_critical(point)?;
    if point.region == Region::FactorizingLine {
        return Err(Error::Domain(
            "alpha inversion is undefined on the factorizing line (tau0 infinite)".into(),
        ));
    }
    let d = modulus_data(point)?;
    let at2 = alpha * d.tau0 * d.tau0;
    if (at2 - 1.0).abs() < 1e-10 {
        return Err(Error::Singularity(format!(
            "alpha tau0^2 = {at2} sits at the fixed point of the inversion"
        )));
    }
    let s_alpha = renyi_closed_form(point, alpha)?.value;
    let alpha_prime = 1.0 / at2;
    let a2t2 = alpha * alpha * d.tau0 * d.tau0;
    let den = at2 - 1.0;
    let value = match point.region {
        Region::Case2 => {
            at2 / den * (1.0 - alpha) * s_alpha
                + (1.0 - a2t2) / den * (d.k * d.kprime / 4.0).ln() / 6.0
        }
        _ => {
            let (f, _) = f_and_g(alpha * d.tau0)?;
            at2 * (alpha - 1.0) / den * s_alpha
                + (1.0 + a2t2) / (6.0 * den) * (d.kprime / (4.0 * d.k * d.k)).ln()
                + 2.0 * at2 * LN_2 / (3.0 * den)
                + at2 / (12.0 * den) * f.ln()
        }
    };
    Ok(RenyiResult {
        value,
        method: Method::AlphaInversion,
        alpha: alpha_prime,
        point: *point,
        tol_attained: 1e-12,
    })
}

/// Renyi entropy at alpha = 2^n without any theta evaluation: the Landen
/// transformation expresses k(q^{2^n}) algebraically in (k, k').
///
/// n = 1 uses the printed elementary formulas; n > 1 iterates
/// `k -> (1-k')/(1+k')`, `k' -> 2 sqrt(k')/(1+k')`.
pub fn landen_ladder(point: &PhasePoint, n: u32) -> Result<RenyiResult> {
    if !(1..=8).contains(&n) {
        return Err(Error::Guard(format!("ladder exponent must satisfy 1 <= n <= 8, got {n}")));
    }
    require_not_critical(point)?;
    let alpha = (1u32 << n) as f64;
    if point.region == Region::FactorizingLine {
        return Ok(factorizing_result(point, alpha));
    }
    let d = modulus_data(point)?;
    let (k, kp) = (d.k, d.kprime);
    let value = if n == 1 {
        match point.region {
            Region::Case2 => {
                -(k * k * kp.powf(1.5) * (1.0 + kp) * (1.0 + kp) / (1.0 - kp)).ln() / 6.0
                    + LN_2 / 2.0
            }
            _ => {
                -((kp.powf(1.5) / k.powi(4)) * (1.0 - kp) * (1.0 - kp) / (1.0 + kp)).ln() / 6.0
                    + LN_2 / 2.0
            }
        }
    } else {
        let mut ka = k;
        let mut kpa = kp;
        for _ in 0..n {
            // (1-k')/(1+k') written as k^2/(1+k')^2 to stay accurate as
            // k' -> 1 under the iteration
            let next = (ka / (1.0 + kpa)).powi(2);
            kpa = 2.0 * kpa.sqrt() / (1.0 + kpa);
            ka = next;
        }
        let pre = 1.0 / (1.0 - alpha);
        match point.region {
            Region::Case2 => {
                (alpha * pre / 6.0) * (k * kp).ln() - (pre / 6.0) * (ka * kpa).ln() + LN_2 / 3.0
            }
            _ => {
                (alpha * pre / 6.0) * (kp / (k * k)).ln() + (pre / 6.0) * (ka * ka / kpa).ln()
                    + LN_2 / 3.0
            }
        }
    };
    Ok(RenyiResult {
        value,
        method: Method::LandenLadder,
        alpha,
        point: *point,
        tol_attained: 1e-13,
    })
}
