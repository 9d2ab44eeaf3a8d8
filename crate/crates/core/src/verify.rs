//! Self-verification suites, each checking one module against an
//! independent route to the same quantity.

use num_complex::Complex64;

use crate::damping::DampingMode;
use crate::dispersion::{
    ode_residual, solve_velocity, velocity_nondissipative, velocity_unstressed, DispersionInput,
};
use crate::presets;
use crate::special::{find_roots_of, frequency_equation};
use crate::sweep::run_sweep;

/// First three positive zeros of `J2`, tabulated to double precision.
pub const J2_ZEROS: [f64; 3] = [
    5.135_622_301_840_683,
    8.417_244_140_399_865,
    11.619_841_172_149_059,
];

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub trait VerificationSuite {
    fn name(&self) -> &'static str;

    fn run(&self) -> SuiteReport;
}

fn report(name: &'static str, failures: Vec<String>, checked: usize) -> SuiteReport {
    let passed = failures.is_empty();
    let detail = if passed {
        format!("{checked} checks")
    } else {
        format!(
            "{} of {checked} checks failed; first: {}",
            failures.len(),
            failures[0]
        )
    };
    SuiteReport {
        name,
        passed,
        detail,
    }
}

/// Roots of a frequency function against the tabulated zeros of `J2`.
pub struct ModeRootSuite {
    frequency: Box<dyn Fn(f64) -> f64>,
}

impl ModeRootSuite {
    pub fn new() -> Self {
        Self::with_frequency(|xi| frequency_equation(xi).unwrap_or(f64::NAN))
    }

    /// Runs the suite against an arbitrary frequency function.
    pub fn with_frequency(frequency: impl Fn(f64) -> f64 + 'static) -> Self {
        Self {
            frequency: Box::new(frequency),
        }
    }
}

impl Default for ModeRootSuite {
    fn default() -> Self {
        Self::new()
    }
}

impl VerificationSuite for ModeRootSuite {
    fn name(&self) -> &'static str {
        "mode roots vs J2 zeros"
    }

    fn run(&self) -> SuiteReport {
        let roots = match find_roots_of(&self.frequency, J2_ZEROS.len(), 20.0) {
            Ok(r) => r,
            Err(e) => return report(self.name(), vec![e.to_string()], 1),
        };
        let mut failures = Vec::new();
        for (root, zero) in roots.iter().zip(J2_ZEROS) {
            if (root.xi - zero).abs() > 1e-9 {
                failures.push(format!("root {} = {} vs {}", root.index, root.xi, zero));
            }
            let residual = (self.frequency)(root.xi).abs();
            if residual.is_nan() || residual > 1e-10 {
                failures.push(format!("|f| = {residual:e} at root {}", root.index));
            }
        }
        report(self.name(), failures, 2 * J2_ZEROS.len())
    }
}

/// Closed-form undamped and unstressed velocities against the solver.
pub struct LimitingCaseSuite;

impl VerificationSuite for LimitingCaseSuite {
    fn name(&self) -> &'static str {
        "limiting cases (undamped, unstressed)"
    }

    fn run(&self) -> SuiteReport {
        let mut failures = Vec::new();
        let mut checked = 0;
        for i in 0..=38 {
            let ka = 0.5 + 0.25 * i as f64;
            for j in 0..=10 {
                let lambda = 0.5 + 0.1 * j as f64;
                for xi in [0.0, presets::XI_FIRST, presets::XI_SECOND] {
                    let input = DispersionInput::new(ka, lambda, 0.0, xi);
                    let solved = solve_velocity(&input).map(|s| s.c_over_beta);
                    let closed = velocity_nondissipative(&input);
                    checked += 1;
                    match (solved, closed) {
                        (Ok(c), Ok(v)) if (c - v).norm() <= 1e-13 => {}
                        (s, v) => failures
                            .push(format!("ka={ka} lambda={lambda} xi={xi}: {s:?} vs {v:?}")),
                    }
                    if j == 5 {
                        // lambda = 1.0 after rounding; use the exact value.
                        let input = DispersionInput::new(ka, 1.0, 0.0, xi);
                        let solved = solve_velocity(&input).map(|s| s.c_over_beta);
                        let kolsky = velocity_unstressed(&input);
                        checked += 1;
                        match (solved, kolsky) {
                            (Ok(c), Ok(u)) if (c - u).norm() <= 1e-13 => {}
                            (s, u) => {
                                failures.push(format!("unstressed ka={ka} xi={xi}: {s:?} vs {u:?}"))
                            }
                        }
                    }
                }
            }
        }
        report(self.name(), failures, checked)
    }
}

/// Residual of every solution on the built-in figure grids.
pub struct QuadraticResidualSuite;

impl VerificationSuite for QuadraticResidualSuite {
    fn name(&self) -> &'static str {
        "quadratic residual on figure grids"
    }

    fn run(&self) -> SuiteReport {
        let mut failures = Vec::new();
        let mut checked = 0;
        for spec in presets::builtin_presets() {
            for input in spec.inputs() {
                checked += 1;
                match solve_velocity(&input) {
                    Ok(s) if s.quadratic_residual() <= s.residual_tolerance() => {}
                    Ok(s) => failures.push(format!(
                        "{} ka={}: residual {:e}",
                        spec.label,
                        input.ka,
                        s.quadratic_residual()
                    )),
                    Err(e) => failures.push(e.to_string()),
                }
            }
        }
        report(self.name(), failures, checked)
    }
}

/// In the dimensionally consistent mode, solved velocities map back to `xi`.
pub struct EtaClosureSuite;

impl VerificationSuite for EtaClosureSuite {
    fn name(&self) -> &'static str {
        "eta closure (consistent damping)"
    }

    fn run(&self) -> SuiteReport {
        let mut failures = Vec::new();
        let mut checked = 0;
        for mut spec in presets::builtin_presets() {
            spec.damping_mode = DampingMode::DimensionallyConsistent;
            // Fig. 1 already sweeps damping; give the prestress grids some too.
            if spec.deltas == [0.0] {
                spec.deltas = presets::FIG1_DELTAS.to_vec();
                spec.deltas.insert(0, 0.0);
            }
            for input in spec.inputs() {
                checked += 1;
                match solve_velocity(&input) {
                    Ok(s) if (s.eta_a - input.xi).norm() <= 1e-10 => {}
                    Ok(s) => failures.push(format!(
                        "{} ka={} lambda={} delta={}: eta a = {}",
                        spec.label, input.ka, input.lambda, input.delta_hat, s.eta_a
                    )),
                    Err(e) => failures.push(e.to_string()),
                }
            }
        }
        report(self.name(), failures, checked)
    }
}

/// Finite-difference residual of the radial Bessel equation.
pub struct OdeResidualSuite;

impl VerificationSuite for OdeResidualSuite {
    fn name(&self) -> &'static str {
        "mode-shape ODE residual"
    }

    fn run(&self) -> SuiteReport {
        let mut failures = Vec::new();
        let etas = [1.0, J2_ZEROS[0], J2_ZEROS[1]];
        for eta in etas {
            match ode_residual(Complex64::new(eta, 0.0), 256) {
                Ok(r) if r <= 1e-6 => {}
                other => failures.push(format!("eta a = {eta}: {other:?}")),
            }
        }
        report(self.name(), failures, etas.len())
    }
}

/// Sweep engine self-audit on the built-in presets.
pub struct SweepAuditSuite;

impl VerificationSuite for SweepAuditSuite {
    fn name(&self) -> &'static str {
        "sweep self-audit on presets"
    }

    fn run(&self) -> SuiteReport {
        let specs = presets::builtin_presets();
        let failures = specs
            .iter()
            .filter_map(|s| run_sweep(s).err().map(|e| e.to_string()))
            .collect();
        report(self.name(), failures, specs.len())
    }
}

/// The suites run by `torwave verify`, in order.
pub fn standard_suites() -> Vec<Box<dyn VerificationSuite>> {
    vec![
        Box::new(ModeRootSuite::new()),
        Box::new(LimitingCaseSuite),
        Box::new(QuadraticResidualSuite),
        Box::new(EtaClosureSuite),
        Box::new(OdeResidualSuite),
        Box::new(SweepAuditSuite),
    ]
}

pub fn run_suites(suites: &[Box<dyn VerificationSuite>]) -> Vec<SuiteReport> {
    suites.iter().map(|s| s.run()).collect()
}
