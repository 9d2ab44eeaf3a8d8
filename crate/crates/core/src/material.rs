//! Material constants and prestress algebra of the incompressible cylinder.

use crate::{Error, Result};

/// Physical constants of the cylinder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialModel {
    mu: f64,
    rho: f64,
    gamma: f64,
    radius: f64,
}

impl MaterialModel {
    /// `mu` shear modulus, `rho` density, `gamma` coefficient of the
    /// velocity-proportional damping term, `radius` the cylinder radius `a`.
    pub fn new(mu: f64, rho: f64, gamma: f64, radius: f64) -> Result<Self> {
        positive("mu", mu)?;
        positive("rho", rho)?;
        positive("radius", radius)?;
        if !(gamma.is_finite() && gamma >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "gamma",
                reason: format!("must be finite and non-negative, got {gamma}"),
            });
        }
        Ok(Self {
            mu,
            rho,
            gamma,
            radius,
        })
    }

    /// Unit material: `mu = rho = a = 1`, no damping.
    pub fn unit() -> Self {
        Self {
            mu: 1.0,
            rho: 1.0,
            gamma: 0.0,
            radius: 1.0,
        }
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Shear speed of the unstressed medium, `sqrt(mu / rho)`.
    pub fn beta(&self) -> f64 {
        (self.mu / self.rho).sqrt()
    }

    /// Damping parameter `delta = gamma * a`.
    pub fn delta(&self) -> f64 {
        self.gamma * self.radius
    }

    /// `gamma a / (rho beta)`, the dimensionless damping consumed by the
    /// dimensionally consistent damping law.
    pub fn dimensionless_damping(&self) -> f64 {
        self.delta() / (self.rho * self.beta())
    }

    /// Dimensionless wavenumber `k a` for a physical wavenumber `k`.
    pub fn ka(&self, k: f64) -> f64 {
        k * self.radius
    }
}

/// State of uniform axial prestress described by the axial extension ratio.
///
/// Compression is positive: `lambda < 1` gives `P > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrestressState {
    lambda: f64,
    lambda_r: f64,
    lambda_theta: f64,
    lambda_z: f64,
    initial_stress: f64,
    q1: f64,
    q2: f64,
}

impl PrestressState {
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Extension-ratio triple `(lambda_r, lambda_theta, lambda_z)`.
    pub fn extension_ratios(&self) -> (f64, f64, f64) {
        (self.lambda_r, self.lambda_theta, self.lambda_z)
    }

    /// Initial axial stress `P`, compression positive.
    pub fn initial_stress(&self) -> f64 {
        self.initial_stress
    }

    /// Incremental coefficient governing `s_r_theta`.
    pub fn q1(&self) -> f64 {
        self.q1
    }

    /// Incremental coefficient governing `s_theta_z`.
    pub fn q2(&self) -> f64 {
        self.q2
    }

    pub fn is_compressed(&self) -> bool {
        self.initial_stress > 0.0
    }
}

/// Builds the prestress state for axial extension ratio `lambda`.
///
/// Incompressibility with transverse isotropy gives
/// `lambda_r^2 = lambda_theta^2 = 1/lambda`, `lambda_z = lambda`.
pub fn prestress_from_lambda(model: &MaterialModel, lambda: f64) -> Result<PrestressState> {
    positive("lambda", lambda)?;
    let mu = model.mu();
    let transverse_sq = 1.0 / lambda;
    let transverse = transverse_sq.sqrt();
    Ok(PrestressState {
        lambda,
        lambda_r: transverse,
        lambda_theta: transverse,
        lambda_z: lambda,
        initial_stress: mu / lambda * (1.0 - lambda * lambda * lambda),
        q1: 0.5 * mu * (transverse_sq + transverse_sq),
        q2: 0.5 * mu * (transverse_sq + lambda * lambda),
    })
}

/// Inverts `P = (mu / lambda)(1 - lambda^3)` for the unique positive root of
/// `lambda^3 + (P/mu) lambda - 1 = 0`.
///
/// Safeguarded Newton from `lambda = 1`, falling back to bisection whenever a
/// step leaves the current bracket.
pub fn lambda_from_prestress(model: &MaterialModel, initial_stress: f64) -> Result<f64> {
    if !initial_stress.is_finite() {
        return Err(Error::InvalidParameter {
            name: "initial stress",
            reason: format!("must be finite, got {initial_stress}"),
        });
    }
    let p = initial_stress / model.mu();
    let g = |l: f64| (l * l + p) * l - 1.0;
    let dg = |l: f64| 3.0 * l * l + p;

    // g(0) = -1 and g grows without bound, so [0, hi] brackets the root once
    // g(hi) > 0.
    let mut lo = 0.0_f64;
    let mut hi = 1.0_f64;
    while g(hi) <= 0.0 {
        lo = hi;
        hi *= 2.0;
    }

    let mut x = 1.0_f64.clamp(lo, hi);
    for _ in 0..200 {
        let gx = g(x);
        if gx == 0.0 {
            return Ok(x);
        }
        if gx < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let slope = dg(x);
        let newton = x - gx / slope;
        let next = if slope > 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - x).abs() <= 4.0 * f64::EPSILON * x || hi - lo <= 4.0 * f64::EPSILON * hi {
            return Ok(next);
        }
        x = next;
    }
    Ok(x)
}

fn positive(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            quantity: name,
            value,
            supported: "(0, inf)",
        })
    }
}
