//! Verification suites: identity residuals and oracle cross-checks, each
//! family reported against a declared tolerance.

use std::f64::consts::PI;
use xy_entropy::{
    alpha_inversion, complete_elliptic_k, klein_j, klein_j_eisenstein, lambda_modular,
    landen_ladder, landen_step, modulus_data, product_identity_residuals, renyi_closed_form,
    renyi_series, schwarzian_residual, theta_constants, von_neumann, von_neumann_series,
    PhasePoint,
};

const GRID_H: [f64; 6] = [0.5, 1.2, 1.9, 2.5, 3.0, 5.0];
const GRID_GAMMA: [f64; 3] = [0.25, 0.5, 1.0];
const GRID_ALPHA: [f64; 6] = [0.3, 0.5, 2.0, 3.0, 7.0, 10.0];

/// One family of checks: its worst residual against a declared tolerance.
pub struct Family {
    pub name: &'static str,
    pub checks: usize,
    pub max_residual: f64,
    pub tolerance: f64,
}

impl Family {
    pub fn passed(&self) -> bool {
        self.max_residual <= self.tolerance
    }
}

pub struct VerifyReport {
    pub suite: String,
    pub families: Vec<Family>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(Family::passed)
    }

    pub fn print(&self) {
        println!("suite: {}", self.suite);
        for f in &self.families {
            println!(
                "  [{}] {:<38} checks={:<4} max residual {:.3e} (tol {:.1e})",
                if f.passed() { "PASS" } else { "FAIL" },
                f.name,
                f.checks,
                f.max_residual,
                f.tolerance
            );
        }
        println!("result: {}", if self.passed() { "PASS" } else { "FAIL" });
    }
}

/// Quadrature route for I(k), independent of the AGM.
fn elliptic_k_quadrature(k: f64) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
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
    let f = move |theta: f64| {
        let s = theta.sin();
        1.0 / (1.0 - k * k * s * s).sqrt()
    };
    let b = std::f64::consts::FRAC_PI_2;
    recurse(&f, 0.0, b, simpson(&f, 0.0, b), 1e-13, 40)
}

fn bulk_grid() -> Vec<PhasePoint> {
    let mut points = Vec::new();
    for h in GRID_H {
        for g in GRID_GAMMA {
            let p = PhasePoint::new(h, g).expect("grid point in domain");
            if p.region.is_bulk() {
                points.push(p);
            }
        }
    }
    points
}

pub fn suite_elliptic() -> Vec<Family> {
    let mut agm_worst = 0.0f64;
    let mut agm_checks = 0;
    for k in [0.001, 0.05, 0.3, 1.0 / 2.0f64.sqrt(), 0.9, 0.999] {
        let agm = complete_elliptic_k(k).expect("k in range");
        let quad = elliptic_k_quadrature(k);
        agm_worst = agm_worst.max((agm - quad).abs() / agm);
        agm_checks += 1;
    }

    let mut id_worst = 0.0f64;
    let mut id_checks = 0;
    for p in bulk_grid() {
        let d = modulus_data(&p).expect("bulk point");
        id_worst = id_worst.max((d.k * d.k + d.kprime * d.kprime - 1.0).abs());
        id_checks += 1;
    }

    vec![
        Family {
            name: "I(k) AGM vs quadrature (relative)",
            checks: agm_checks,
            max_residual: agm_worst,
            tolerance: 1e-12,
        },
        Family {
            name: "k^2 + k'^2 = 1 on grid",
            checks: id_checks,
            max_residual: id_worst,
            tolerance: 1e-14,
        },
    ]
}

pub fn suite_theta() -> Vec<Family> {
    let mut quartic_worst = 0.0f64;
    let mut dual_worst = 0.0f64;
    let mut checks = 0;
    for t in [0.05, 0.1, 0.3, 0.7, 1.0, 2.0, 5.0, 20.0] {
        let th = theta_constants(t).expect("t > 0");
        let lhs = th.t3.powi(4);
        quartic_worst = quartic_worst.max((lhs - th.t2.powi(4) - th.t4.powi(4)).abs() / lhs);
        if (0.3..1.0).contains(&t) {
            let direct = xy_entropy::theta::theta_constants_direct(t).expect("t > 0");
            dual_worst = dual_worst
                .max((th.t2 - direct.t2).abs())
                .max((th.t3 - direct.t3).abs())
                .max((th.t4 - direct.t4).abs());
        }
        checks += 1;
    }

    let mut product_worst = 0.0f64;
    let mut product_checks = 0;
    for q in [0.005, 0.01, 0.04, (-PI).exp()] {
        let (r1, r2) = product_identity_residuals(q).expect("q in range");
        product_worst = product_worst.max(r1).max(r2);
        product_checks += 2;
    }

    vec![
        Family {
            name: "theta3^4 = theta2^4 + theta4^4 (relative)",
            checks,
            max_residual: quartic_worst,
            tolerance: 1e-13,
        },
        Family {
            name: "direct vs transformed series",
            checks: 3,
            max_residual: dual_worst,
            tolerance: 1e-12,
        },
        Family {
            name: "q-product identities",
            checks: product_checks,
            max_residual: product_worst,
            tolerance: 1e-13,
        },
    ]
}

pub fn suite_modular() -> Vec<Family> {
    let lambda_i = (lambda_modular(1.0).expect("t > 0") - 0.5).abs();
    let j_i = (klein_j(1.0).expect("t > 0") - 1.0).abs();

    let mut landen_worst = 0.0f64;
    let mut landen_checks = 0;
    for t in [0.3, 0.7, 1.2, 2.0] {
        let l = lambda_modular(t).expect("t > 0");
        let doubled = lambda_modular(2.0 * t).expect("t > 0");
        landen_worst = landen_worst.max((landen_step(l).expect("lambda in range") - doubled).abs());
        landen_checks += 1;
    }

    let mut j_worst = 0.0f64;
    let mut j_checks = 0;
    for t in [1.0, 2.0, 3.0] {
        let a = klein_j(t).expect("t > 0");
        let b = klein_j_eisenstein(t).expect("t > 0");
        j_worst = j_worst.max((a - b).abs() / a.abs().max(1.0));
        j_checks += 1;
    }

    let mut schwarz_worst = 0.0f64;
    for t in [1.0, 1.5] {
        schwarz_worst = schwarz_worst.max(schwarzian_residual(t, 1e-3).expect("valid step"));
    }

    vec![
        Family {
            name: "lambda(i) = 1/2 and J(i) = 1",
            checks: 2,
            max_residual: lambda_i.max(j_i),
            tolerance: 1e-13,
        },
        Family {
            name: "Landen doubling",
            checks: landen_checks,
            max_residual: landen_worst,
            tolerance: 1e-11,
        },
        Family {
            name: "Klein J: lambda vs Eisenstein route",
            checks: j_checks,
            max_residual: j_worst,
            tolerance: 1e-10,
        },
        Family {
            name: "Schwarzian equation residual",
            checks: 2,
            max_residual: schwarz_worst,
            tolerance: 1e-6,
        },
    ]
}

pub fn suite_entropy(oracle_tol: f64) -> Vec<Family> {
    let mut oracle_worst = 0.0f64;
    let mut oracle_checks = 0;
    for p in bulk_grid() {
        for alpha in GRID_ALPHA {
            let closed = renyi_closed_form(&p, alpha).expect("bulk point").value;
            let series = renyi_series(&p, alpha, 1e-13).expect("bulk point").value;
            oracle_worst = oracle_worst.max((closed - series).abs());
            oracle_checks += 1;
        }
    }

    let mut vn_worst = 0.0f64;
    let mut vn_checks = 0;
    for p in bulk_grid() {
        let closed = von_neumann(&p).expect("bulk point").value;
        let series = von_neumann_series(&p, 1e-13).expect("bulk point").value;
        vn_worst = vn_worst.max((closed - series).abs());
        vn_checks += 1;
    }

    let mut inv_worst = 0.0f64;
    let mut inv_checks = 0;
    for p in bulk_grid() {
        let d = modulus_data(&p).expect("bulk point");
        for alpha in GRID_ALPHA {
            if (alpha * d.tau0 * d.tau0 - 1.0).abs() < 0.05 {
                continue;
            }
            let inv = alpha_inversion(&p, alpha).expect("off the fixed point");
            let direct = renyi_closed_form(&p, inv.alpha).expect("bulk point").value;
            inv_worst = inv_worst.max((inv.value - direct).abs());
            inv_checks += 1;
        }
    }

    let mut ladder_worst = 0.0f64;
    let mut ladder_checks = 0;
    for (h, g) in [(3.0, 1.0), (5.0, 0.25), (0.5, 0.5), (1.9, 1.0)] {
        let p = PhasePoint::new(h, g).expect("grid point");
        for n in 1..=3u32 {
            let ladder = landen_ladder(&p, n).expect("bulk point");
            let closed = renyi_closed_form(&p, ladder.alpha).expect("bulk point").value;
            ladder_worst = ladder_worst.max((ladder.value - closed).abs());
            ladder_checks += 1;
        }
    }

    vec![
        Family {
            name: "closed form vs eigenvalue series",
            checks: oracle_checks,
            max_residual: oracle_worst,
            tolerance: oracle_tol,
        },
        Family {
            name: "von Neumann vs series",
            checks: vn_checks,
            max_residual: vn_worst,
            tolerance: oracle_tol,
        },
        Family {
            name: "alpha-inversion symmetry",
            checks: inv_checks,
            max_residual: inv_worst,
            tolerance: 1e-9,
        },
        Family {
            name: "Landen ladder vs theta route",
            checks: ladder_checks,
            max_residual: ladder_worst,
            tolerance: 1e-11,
        },
    ]
}

pub fn run_suite(name: &str, oracle_tol: f64) -> Option<VerifyReport> {
    let families = match name {
        "elliptic" => suite_elliptic(),
        "theta" => suite_theta(),
        "modular" => suite_modular(),
        "entropy" => suite_entropy(oracle_tol),
        "all" => {
            let mut all = suite_elliptic();
            all.extend(suite_theta());
            all.extend(suite_modular());
            all.extend(suite_entropy(oracle_tol));
            all
        }
        _ => return None,
    };
    Some(VerifyReport { suite: name.to_string(), families })
}
