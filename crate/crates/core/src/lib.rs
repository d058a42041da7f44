//! Exact large-block entanglement entropies of the XY spin chain.
//!
//! The ground-state Renyi entropy of a half-infinite block is an elliptic
//! function of the couplings: each point of the phase diagram carries a
//! modulus k, and the entropy at order alpha is built from Jacobi theta
//! constants at tau = alpha i I(k')/I(k). This crate implements the phase
//! classification, the elliptic/theta/modular toolchain, the closed-form
//! entropies with their limits and symmetries, and an independent spectral
//! series that serves as ground truth for everything else.

pub mod elliptic;
pub mod entropy;
pub mod error;
pub mod modular;
pub mod series;
pub mod theta;

pub use elliptic::{
    classify_region, complete_elliptic_k, elliptic_parameter, modulus_data, EllipticData,
    PhasePoint, Region,
};
pub use entropy::{
    alpha_inversion, alpha_modulus, critical_field_estimate, landen_ladder, large_alpha_estimate,
    large_alpha_limit, renyi_closed_form, small_alpha_estimate, von_neumann, xx_limit_estimate,
    AlphaModulus, Method, RenyiResult,
};
pub use error::{Error, Result};
pub use modular::{
    f_and_g, klein_j, klein_j_eisenstein, lambda_modular, landen_step, modular_values,
    schwarzian_residual, ModularValues,
};
pub use series::{
    renyi_series, renyi_series_raw, von_neumann_series, von_neumann_series_raw, EigenvalueSpectrum,
};
pub use theta::{nome_to_k, product_identity_residuals, theta_constants, ThetaConstants};
