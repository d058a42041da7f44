//! Shared oracles for the integration suites, deliberately independent of
//! the library's own evaluation routes.

/// Complete elliptic integral of the first kind by adaptive Simpson
/// quadrature over `theta in [0, pi/2]` of `1/sqrt(1 - k^2 sin^2 theta)`.
/// No AGM anywhere in this path.
pub fn elliptic_k_quadrature(k: f64) -> f64 {
    assert!((0.0..1.0).contains(&k));
    let f = |theta: f64| {
        let s = theta.sin();
        1.0 / (1.0 - k * k * s * s).sqrt()
    };
    adaptive_simpson(&f, 0.0, std::f64::consts::FRAC_PI_2, 1e-13, 40)
}

fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let whole = simpson(f, a, b);
    recurse(f, a, b, whole, tol, depth)
}

fn recurse(f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let left = simpson(f, a, m);
    let right = simpson(f, m, b);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        recurse(f, a, m, left, 0.5 * tol, depth - 1)
            + recurse(f, m, b, right, 0.5 * tol, depth - 1)
    }
}

/// Least-squares slope of y against x.
pub fn fit_slope(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(&a, &b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|&a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

/// The h and gamma values used by the cross-check grids.
pub const GRID_H: [f64; 6] = [0.5, 1.2, 1.9, 2.5, 3.0, 5.0];
pub const GRID_GAMMA: [f64; 3] = [0.25, 0.5, 1.0];
pub const GRID_ALPHA: [f64; 6] = [0.3, 0.5, 2.0, 3.0, 7.0, 10.0];
