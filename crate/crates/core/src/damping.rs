//! Damping laws.
//!
//! The velocity quadratic `(c/beta)^2 - (c/beta) I - R = 0` carries damping
//! only through the purely imaginary coefficient `I = -i b`. Two laws for `b`
//! are provided, each behind [`DampingLaw`] and registered by name so the CLI
//! can pick one at runtime:
//!
//! * `paper-literal`: `b = delta / (rho_num * ka)`, the printed formula with
//!   `beta = a = 1`. Used for figure reproduction.
//! * `consistent`: `b = delta_hat / ka` with `delta_hat = gamma a / (rho beta)`,
//!   which is exactly what the modal wavenumber relation reduces to.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

pub trait DampingLaw: Send + Sync {
    /// Registry key, also the `--mode` value on the command line.
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Magnitude `b >= 0` of `I = -i b` at dimensionless wavenumber `ka`.
    fn rate(&self, delta_hat: f64, rho_num: f64, ka: f64) -> f64;
}

struct PaperLiteral;

impl DampingLaw for PaperLiteral {
    fn name(&self) -> &'static str {
        "paper-literal"
    }

    fn description(&self) -> &'static str {
        "I = -i delta / (rho_num ka), beta = a = 1"
    }

    fn rate(&self, delta_hat: f64, rho_num: f64, ka: f64) -> f64 {
        delta_hat / (rho_num * ka)
    }
}

struct DimensionallyConsistent;

impl DampingLaw for DimensionallyConsistent {
    fn name(&self) -> &'static str {
        "consistent"
    }

    fn description(&self) -> &'static str {
        "I = -i delta_hat / ka, delta_hat = gamma a / (rho beta)"
    }

    fn rate(&self, delta_hat: f64, _rho_num: f64, ka: f64) -> f64 {
        delta_hat / ka
    }
}

static PAPER_LITERAL: PaperLiteral = PaperLiteral;
static CONSISTENT: DimensionallyConsistent = DimensionallyConsistent;

static REGISTRY: [(DampingMode, &dyn DampingLaw); 2] = [
    (DampingMode::PaperLiteral, &PAPER_LITERAL),
    (DampingMode::DimensionallyConsistent, &CONSISTENT),
];

/// Selector for a registered [`DampingLaw`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DampingMode {
    #[default]
    PaperLiteral,
    DimensionallyConsistent,
}

impl DampingMode {
    pub fn law(self) -> &'static dyn DampingLaw {
        REGISTRY
            .iter()
            .find(|(mode, _)| *mode == self)
            .map(|(_, law)| *law)
            .expect("every mode is registered")
    }

    pub fn name(self) -> &'static str {
        self.law().name()
    }

    /// Looks a mode up by its registered name.
    pub fn from_name(name: &str) -> Result<Self> {
        REGISTRY
            .iter()
            .find(|(_, law)| law.name() == name)
            .map(|(mode, _)| *mode)
            .ok_or_else(|| Error::UnknownDampingMode(name.to_owned()))
    }
}

impl fmt::Display for DampingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DampingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_name(s)
    }
}

/// All registered laws, in registration order.
pub fn registered() -> impl Iterator<Item = &'static dyn DampingLaw> {
    REGISTRY.iter().map(|(_, law)| *law)
}
