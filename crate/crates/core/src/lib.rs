//! Torsional waves in an initially stressed, dissipative, incompressible
//! elastic cylinder.
//!
//! The crate is organised bottom-up:
//!
//! * [`special`]: Bessel functions `J0`, `J1`, `J2` and the mode-root finder
//!   for the stress-free frequency equation.
//! * [`material`]: prestress algebra (extension ratios, initial stress,
//!   incremental shear coefficients).
//! * [`damping`]: the interchangeable damping laws that turn a damping
//!   parameter into the imaginary coefficient of the velocity quadratic.
//! * [`dispersion`]: the complex velocity quadratic, its limiting cases and
//!   the radial mode shape.
//! * [`sweep`] and [`presets`]: deterministic parameter grids and the
//!   built-in figure presets.
//! * [`verify`]: self-check suites run by `torwave verify`.
//!
//! Everything is nondimensional: lengths in units of the radius `a`, speeds
//! in units of the unstressed shear speed `beta`, stresses in units of `mu`.

pub mod damping;
pub mod dispersion;
pub mod material;
pub mod presets;
pub mod special;
pub mod sweep;
pub mod verify;

pub use damping::{DampingLaw, DampingMode};
pub use dispersion::{
    solve_velocity, Classification, DispersionInput, DispersionSolution, ModeShape,
};
pub use material::{MaterialModel, PrestressState};
pub use special::ModeRoot;
pub use sweep::{run_sweep, CurveRow, CurveTable, SweepSpec};

/// Density number used by the paper-literal damping law.
pub const DEFAULT_RHO_NUM: f64 = 2.15;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{quantity} = {value} is outside the supported range {supported}")]
    Domain {
        quantity: &'static str,
        value: f64,
        supported: &'static str,
    },
    #[error("Bessel order {0} is not supported (orders 0, 1, 2 only)")]
    UnsupportedOrder(u32),
    #[error("invalid {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error(
        "insufficient scan range: requested {requested} roots but only {found} found in (0, {scan_max}]"
    )]
    InsufficientScanRange {
        requested: usize,
        found: usize,
        scan_max: f64,
    },
    #[error("unknown damping mode `{0}`")]
    UnknownDampingMode(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error(
        "sweep self-audit failed at ka={ka}, lambda={lambda}, delta={delta}, xi={xi}: {reason}"
    )]
    AuditFailed {
        ka: f64,
        lambda: f64,
        delta: f64,
        xi: f64,
        reason: String,
    },
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

pub type Result<T> = std::result::Result<T, Error>;
