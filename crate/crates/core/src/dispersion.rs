//! Complex dispersion relation for torsional modes.
//!
//! For a mode root `xi`, the normalised velocity `c/beta` solves
//!
//! ```text
//! (c/beta)^2 - (c/beta) I - R = 0,
//! R = (xi/ka)^2 / lambda + lambda^2,   I = -i b,
//! ```
//!
//! with `b` supplied by the selected [`DampingLaw`](crate::DampingLaw). The
//! propagating root is `c/beta = (I + sqrt(Omega)) / 2`, `Omega = I^2 + 4R`.

use num_complex::Complex64;

use crate::damping::DampingMode;
use crate::special::{bessel_j, bessel_j1_prime};
use crate::{Error, Result, DEFAULT_RHO_NUM};

/// One point of the dispersion relation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionInput {
    pub ka: f64,
    pub lambda: f64,
    /// Damping parameter; its meaning depends on `damping_mode`.
    pub delta_hat: f64,
    /// Bare density number used by the paper-literal law.
    pub rho_num: f64,
    /// Mode root, or 0 for the fundamental mode.
    pub xi: f64,
    pub damping_mode: DampingMode,
}

impl DispersionInput {
    /// Paper-literal input with `rho_num = 2.15`.
    pub fn new(ka: f64, lambda: f64, delta_hat: f64, xi: f64) -> Self {
        Self {
            ka,
            lambda,
            delta_hat,
            rho_num: DEFAULT_RHO_NUM,
            xi,
            damping_mode: DampingMode::PaperLiteral,
        }
    }

    pub fn with_mode(mut self, mode: DampingMode) -> Self {
        self.damping_mode = mode;
        self
    }

    pub fn with_rho(mut self, rho_num: f64) -> Self {
        self.rho_num = rho_num;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let checks: [(&'static str, f64, bool); 5] = [
            ("ka", self.ka, self.ka > 0.0),
            ("lambda", self.lambda, self.lambda > 0.0),
            ("delta", self.delta_hat, self.delta_hat >= 0.0),
            ("rho", self.rho_num, self.rho_num > 0.0),
            ("xi", self.xi, self.xi >= 0.0),
        ];
        for (name, value, ok) in checks {
            if !(ok && value.is_finite()) {
                let bound = match name {
                    "delta" | "xi" => "must be finite and non-negative",
                    _ => "must be finite and positive",
                };
                return Err(Error::InvalidParameter {
                    name,
                    reason: format!("{bound}, got {value}"),
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// `Re(c/beta) > 0`.
    Propagating,
    /// `Re(c/beta) = 0`: overdamped, purely imaginary velocity.
    Evanescent,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Propagating => "propagating",
            Classification::Evanescent => "evanescent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionSolution {
    /// Root with `Re >= 0`: real part is the phase velocity, imaginary part
    /// the damping velocity, both in units of `beta`.
    pub c_over_beta: Complex64,
    pub i: Complex64,
    pub r: f64,
    pub omega: Complex64,
    /// `eta a` recovered from the modal wavenumber relation.
    pub eta_a: Complex64,
    pub classification: Classification,
}

impl DispersionSolution {
    /// The discarded root `(I - sqrt(Omega)) / 2`.
    pub fn other_root(&self) -> Complex64 {
        self.i - self.c_over_beta
    }

    /// `|(c/beta)^2 - (c/beta) I - R|`.
    pub fn quadratic_residual(&self) -> f64 {
        quadratic_residual(self.c_over_beta, self.i, self.r)
    }

    pub fn residual_tolerance(&self) -> f64 {
        1e-12 * self.r.max(1.0)
    }
}

pub fn quadratic_residual(c: Complex64, i: Complex64, r: f64) -> f64 {
    (c * c - c * i - r).norm()
}

/// The imaginary coefficient `I = -i b`.
pub fn build_i(input: &DispersionInput) -> Complex64 {
    let rate = input
        .damping_mode
        .law()
        .rate(input.delta_hat, input.rho_num, input.ka);
    Complex64::new(0.0, -rate)
}

/// `R = (xi/ka)^2 / lambda + lambda^2`.
pub fn build_r(input: &DispersionInput) -> f64 {
    let lambda_sq = input.lambda * input.lambda;
    if input.xi == 0.0 {
        return lambda_sq;
    }
    let ratio = input.xi / input.ka;
    ratio * ratio / input.lambda + lambda_sq
}

/// Solves the velocity quadratic, keeping the root with `Re(c/beta) >= 0`.
pub fn solve_velocity(input: &DispersionInput) -> Result<DispersionSolution> {
    input.validate()?;
    let i = build_i(input);
    let r = build_r(input);
    // I is purely imaginary, so Omega = 4R - b^2 is real.
    let omega = 4.0 * r - i.im * i.im;
    let c_over_beta = if omega >= 0.0 {
        Complex64::new(0.5 * omega.sqrt(), 0.5 * i.im)
    } else {
        Complex64::new(0.0, 0.5 * (i.im + (-omega).sqrt()))
    };
    let classification = if c_over_beta.re > 0.0 {
        Classification::Propagating
    } else {
        Classification::Evanescent
    };
    Ok(DispersionSolution {
        c_over_beta,
        i,
        r,
        omega: Complex64::new(omega, 0.0),
        eta_a: eta_from_c(input, c_over_beta),
        classification,
    })
}

/// Undamped velocity `sqrt(R)`; requires `delta_hat = 0`.
pub fn velocity_nondissipative(input: &DispersionInput) -> Result<f64> {
    input.validate()?;
    if input.delta_hat != 0.0 {
        return Err(Error::InvalidParameter {
            name: "delta",
            reason: format!(
                "non-dissipative velocity needs delta = 0, got {}",
                input.delta_hat
            ),
        });
    }
    Ok(build_r(input).sqrt())
}

/// Velocity of the unstressed cylinder; requires `lambda = 1`.
///
/// Undamped this is `sqrt((xi/ka)^2 + 1)`; with damping it is the general
/// solution at `lambda = 1`.
pub fn velocity_unstressed(input: &DispersionInput) -> Result<Complex64> {
    input.validate()?;
    if input.lambda != 1.0 {
        return Err(Error::InvalidParameter {
            name: "lambda",
            reason: format!("unstressed velocity needs lambda = 1, got {}", input.lambda),
        });
    }
    if input.delta_hat == 0.0 {
        let ratio = input.xi / input.ka;
        return Ok(Complex64::new((ratio * ratio + 1.0).sqrt(), 0.0));
    }
    solve_velocity(input).map(|s| s.c_over_beta)
}

/// `eta a` for a given velocity, principal branch (`Re >= 0`).
///
/// `(eta a)^2 = (ka)^2 lambda [(c/beta)^2 - lambda^2 - (c/beta) I]`, i.e. the
/// modal relation with the damping term written through the same `I` the
/// solver uses, so solved velocities map back onto `xi`.
pub fn eta_from_c(input: &DispersionInput, c_over_beta: Complex64) -> Complex64 {
    let i = build_i(input);
    let lambda = input.lambda;
    let bracket = c_over_beta * c_over_beta - lambda * lambda - c_over_beta * i;
    (input.ka * input.ka * lambda * bracket).sqrt()
}

/// Radial displacement `A J1(eta a * r/a)` of the mode.
pub fn mode_shape(eta_a: Complex64, r_over_a: f64, amplitude: Complex64) -> Result<Complex64> {
    if !(0.0..=1.0).contains(&r_over_a) {
        return Err(Error::Domain {
            quantity: "r/a",
            value: r_over_a,
            supported: "[0, 1]",
        });
    }
    Ok(amplitude * bessel_j(1, eta_a * r_over_a)?)
}

/// Residual of `s^2 V'' + s V' + ((eta a)^2 s^2 - 1) V = 0` on a uniform grid
/// of `n_points` over `s = r/a in [0, 1]`, with fourth-order central
/// differences of [`mode_shape`]. Returns the maximum over interior points
/// divided by the maximum `|V|` on the grid.
pub fn ode_residual(eta_a: Complex64, n_points: usize) -> Result<f64> {
    if n_points < 16 {
        return Err(Error::InvalidParameter {
            name: "n_points",
            reason: format!("need at least 16 grid points, got {n_points}"),
        });
    }
    let last = (n_points - 1) as f64;
    let h = 1.0 / last;
    let one = Complex64::new(1.0, 0.0);
    let values = (0..n_points)
        .map(|k| mode_shape(eta_a, k as f64 / last, one))
        .collect::<Result<Vec<_>>>()?;
    let scale = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Ok(0.0);
    }

    let eta_sq = eta_a * eta_a;
    let mut worst = 0.0_f64;
    for k in 2..n_points - 2 {
        let s = k as f64 / last;
        let [m2, m1, v, p1, p2] = [
            values[k - 2],
            values[k - 1],
            values[k],
            values[k + 1],
            values[k + 2],
        ];
        let d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
        let d2 = (-m2 + 16.0 * m1 - 30.0 * v + 16.0 * p1 - p2) / (12.0 * h * h);
        let residual = s * s * d2 + s * d1 + (eta_sq * s * s - 1.0) * v;
        worst = worst.max(residual.norm());
    }
    Ok(worst / scale)
}

/// Radial profile `V(r) = A J1(eta r)`; the second-kind term is excluded so
/// the displacement stays finite on the axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeShape {
    pub amplitude: Complex64,
    pub eta_a: Complex64,
}

impl ModeShape {
    pub fn new(eta_a: Complex64, amplitude: Complex64) -> Self {
        Self { amplitude, eta_a }
    }

    pub fn evaluate(&self, r_over_a: f64) -> Result<Complex64> {
        mode_shape(self.eta_a, r_over_a, self.amplitude)
    }

    /// `|eta a J1'(eta a) - J1(eta a)|`, the shear traction on `r = a` up to
    /// the factor `mu A / a`.
    pub fn boundary_traction_residual(&self) -> Result<f64> {
        let z = self.eta_a;
        Ok((z * bessel_j1_prime(z)? - bessel_j(1, z)?).norm())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const XI1: f64 = 5.135_622_301_840_683;
    const XI2: f64 = 8.417_244_140_399_865;

    fn consistent(ka: f64, lambda: f64, delta: f64, xi: f64) -> DispersionInput {
        DispersionInput::new(ka, lambda, delta, xi).with_mode(DampingMode::DimensionallyConsistent)
    }

    #[test]
    fn imaginary_coefficient() {
        assert_eq!(
            build_i(&DispersionInput::new(1.0, 1.0, 0.0, XI1)).norm(),
            0.0
        );
        let literal = build_i(&DispersionInput::new(1.0, 1.0, 0.1, 5.136));
        assert_eq!(literal.re, 0.0);
        assert!((literal.im + 0.046_511_627_906_976_744).abs() < 1e-15);
        assert_eq!(
            build_i(&consistent(2.0, 1.0, 0.1, 5.136)),
            Complex64::new(0.0, -0.05)
        );
    }

    #[test]
    fn real_coefficient() {
        assert_eq!(build_r(&DispersionInput::new(3.0, 1.0, 0.0, 0.0)), 1.0);
        assert_eq!(build_r(&DispersionInput::new(5.136, 1.0, 0.0, 5.136)), 2.0);
        // 5.136^2 = 26.378496; / 0.8 = 32.97312; + 0.64
        let r = build_r(&DispersionInput::new(1.0, 0.8, 0.0, 5.136));
        assert!((r - 33.61312).abs() < 1e-12, "{r}");
    }

    #[test]
    fn undamped_closed_forms() {
        for ka in [0.1, 1.0, 7.5] {
            let s = solve_velocity(&DispersionInput::new(ka, 1.0, 0.0, 0.0)).unwrap();
            assert_eq!(s.c_over_beta, Complex64::new(1.0, 0.0));
        }
        let s = solve_velocity(&DispersionInput::new(5.136, 1.0, 0.0, 5.136)).unwrap();
        assert!((s.c_over_beta.re - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!(s.c_over_beta.im, 0.0);
        assert_eq!(s.classification, Classification::Propagating);
    }

    #[test]
    fn damped_paper_literal_point() {
        // R = 27.378496, b = 0.1/2.15, Omega = 4R - b^2 (40-digit reference).
        let s = solve_velocity(&DispersionInput::new(1.0, 1.0, 0.1, 5.136)).unwrap();
        assert!((s.r - 27.378_496).abs() < 1e-12);
        assert!((s.omega.re - 109.511_820_668_469_44).abs() < 1e-11);
        assert!((s.c_over_beta.re - 5.232_394_783_186_506).abs() < 1e-12);
        assert!((s.c_over_beta.im + 0.023_255_813_953_488_372).abs() < 1e-15);
        assert!(s.quadratic_residual() <= s.residual_tolerance());
        // Independent quadratic formula on the other root.
        let b = 0.1 / 2.15;
        let other = -0.5 * (4.0 * s.r - b * b).sqrt();
        assert!((s.other_root().re - other).abs() < 1e-12);
        assert!(quadratic_residual(s.other_root(), s.i, s.r) <= s.residual_tolerance());
    }

    #[test]
    fn overdamped_is_evanescent() {
        // b = 10 / 0.5 = 20 > 2 sqrt(R) = 2 at xi = 0, lambda = 1.
        let s = solve_velocity(&consistent(0.5, 1.0, 10.0, 0.0)).unwrap();
        assert_eq!(s.classification, Classification::Evanescent);
        assert_eq!(s.c_over_beta.re, 0.0);
        assert!(s.c_over_beta.im < 0.0);
        assert!(s.omega.re < 0.0);
        assert!(s.quadratic_residual() <= s.residual_tolerance());
    }

    #[test]
    fn invalid_inputs() {
        assert!(solve_velocity(&DispersionInput::new(0.0, 1.0, 0.0, 0.0)).is_err());
        assert!(solve_velocity(&DispersionInput::new(1.0, -1.0, 0.0, 0.0)).is_err());
        assert!(solve_velocity(&DispersionInput::new(1.0, 1.0, -0.1, 0.0)).is_err());
        assert!(solve_velocity(&DispersionInput::new(1.0, 1.0, 0.0, -1.0)).is_err());
        assert!(solve_velocity(&DispersionInput::new(1.0, 1.0, 0.0, 0.0).with_rho(0.0)).is_err());
        let err = solve_velocity(&DispersionInput::new(1.0, f64::NAN, 0.0, 0.0)).unwrap_err();
        assert!(err.to_string().contains("lambda"), "{err}");
    }

    #[test]
    fn limiting_cases() {
        let v = velocity_nondissipative(&DispersionInput::new(5.136, 0.8, 0.0, 5.136)).unwrap();
        assert!((v - 1.89_f64.sqrt()).abs() < 1e-15);
        assert!((v - 1.374_772_708_486_752).abs() < 1e-12);
        assert_eq!(
            velocity_nondissipative(&DispersionInput::new(2.0, 1.0, 0.0, 0.0)).unwrap(),
            1.0
        );
        assert!(velocity_nondissipative(&DispersionInput::new(2.0, 1.0, 0.1, 0.0)).is_err());

        let u = velocity_unstressed(&DispersionInput::new(2.0, 1.0, 0.0, 5.136)).unwrap();
        assert!((u.re - 7.594_624_f64.sqrt()).abs() < 1e-15);
        assert!((u.re - 2.755_834).abs() < 1e-6);
        let u = velocity_unstressed(&DispersionInput::new(8.418, 1.0, 0.0, 8.418)).unwrap();
        assert!((u.re - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert!(velocity_unstressed(&DispersionInput::new(2.0, 0.9, 0.0, 0.0)).is_err());
        let damped = DispersionInput::new(2.0, 1.0, 0.1, 5.136);
        assert_eq!(
            velocity_unstressed(&damped).unwrap(),
            solve_velocity(&damped).unwrap().c_over_beta
        );
    }

    #[test]
    fn fundamental_mode_is_lambda() {
        let s = solve_velocity(&DispersionInput::new(2.0, 0.8, 0.0, 0.0)).unwrap();
        assert!((s.c_over_beta - 0.8).norm() < 1e-15);
        assert_eq!(s.r, 0.8 * 0.8);
    }

    #[test]
    fn eta_closure() {
        let input = DispersionInput::new(1.7, 1.0, 0.0, XI1);
        let c = velocity_unstressed(&input).unwrap();
        assert!((eta_from_c(&input, c) - XI1).norm() < 1e-12);

        let input = DispersionInput::new(3.0, 0.8, 0.0, 5.136);
        let c = Complex64::new(velocity_nondissipative(&input).unwrap(), 0.0);
        assert!((eta_from_c(&input, c) - 5.136).norm() < 1e-10);

        for &ka in &[0.5, 1.0, 2.5] {
            for &xi in &[0.0, XI1, XI2] {
                let input = consistent(ka, 0.9, 0.1, xi);
                let s = solve_velocity(&input).unwrap();
                if xi == 0.0 {
                    // sqrt near zero amplifies rounding; compare squares.
                    assert!((s.eta_a * s.eta_a).norm() < 1e-14, "ka={ka}: {}", s.eta_a);
                } else {
                    assert!(
                        (s.eta_a - xi).norm() < 1e-10,
                        "ka={ka} xi={xi}: {}",
                        s.eta_a
                    );
                }
            }
        }
    }

    #[test]
    fn mode_shape_values() {
        let one = Complex64::new(1.0, 0.0);
        assert_eq!(
            mode_shape(Complex64::new(7.0, 1.0), 0.0, one)
                .unwrap()
                .norm(),
            0.0
        );
        let v = mode_shape(Complex64::new(5.135_622_3, 0.0), 1.0, one).unwrap();
        assert!((v.re + 0.339_668_742_651_990_1).abs() < 1e-12, "{v}");
        let eta = Complex64::new(4.2, 0.3);
        let a = Complex64::new(0.7, -1.1);
        assert_eq!(
            mode_shape(eta, 0.6, 2.0 * a).unwrap(),
            2.0 * mode_shape(eta, 0.6, a).unwrap()
        );
        assert!(mode_shape(eta, 1.0001, a).is_err());
        assert!(mode_shape(eta, -0.1, a).is_err());
    }

    #[test]
    fn traction_free_at_mode_roots() {
        for xi in [XI1, XI2] {
            let shape = ModeShape::new(Complex64::new(xi, 0.0), Complex64::new(1.0, 0.0));
            assert!(shape.boundary_traction_residual().unwrap() <= 1e-8);
            assert_eq!(shape.evaluate(0.0).unwrap().norm(), 0.0);
        }
        let off = ModeShape::new(Complex64::new(4.0, 0.0), Complex64::new(1.0, 0.0));
        assert!(off.boundary_traction_residual().unwrap() > 1e-2);
    }

    #[test]
    fn ode_residual_small_and_fourth_order() {
        for eta in [1.0, XI1, XI2] {
            let r = ode_residual(Complex64::new(eta, 0.0), 256).unwrap();
            assert!(r <= 1e-6, "eta a = {eta}: {r:e}");
        }
        let eta = Complex64::new(XI1, 0.0);
        let coarse = ode_residual(eta, 32).unwrap();
        let fine = ode_residual(eta, 63).unwrap();
        // h halves from 1/31 to 1/62; fourth order gives a ratio near 16.
        assert!(coarse / fine > 10.0, "ratio {}", coarse / fine);
        assert!(ode_residual(eta, 15).is_err());
    }
}
