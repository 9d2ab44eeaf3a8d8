//! Built-in figure presets, registered by name.
//!
//! Each preset knows its sweep grid and how its curves are drawn: which
//! quantity goes on the vertical axis and which parameter tells the curves
//! apart.

use crate::damping::DampingMode;
use crate::sweep::{CurveRow, SweepSpec};
use crate::{Error, Result, DEFAULT_RHO_NUM};

pub const KA_START: f64 = 0.5;
pub const KA_STOP: f64 = 3.0;
pub const KA_STEP: f64 = 0.05;

/// First two roots of the frequency equation as quoted to three decimals.
pub const XI_FIRST: f64 = 5.136;
pub const XI_SECOND: f64 = 8.418;

pub const FIG1_DELTAS: [f64; 4] = [0.05, 0.1, 0.15, 0.2];
pub const PRESTRESS_LAMBDAS: [f64; 4] = [0.7, 0.8, 0.9, 1.0];

/// Quantity plotted on a figure's vertical axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Plotted {
    PhaseVelocity,
    DampingVelocity,
}

impl Plotted {
    pub fn value(self, row: &CurveRow) -> f64 {
        match self {
            Plotted::PhaseVelocity => row.c_over_beta.re,
            Plotted::DampingVelocity => row.c_over_beta.im.abs(),
        }
    }

    pub fn axis_label(self) -> &'static str {
        match self {
            Plotted::PhaseVelocity => "Re(c/β)",
            Plotted::DampingVelocity => "|Im(c/β)| (damping velocity)",
        }
    }
}

/// Parameter that distinguishes the curves of a figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKey {
    Delta,
    Lambda,
}

impl CurveKey {
    pub fn legend(self, row: &CurveRow) -> String {
        match self {
            CurveKey::Delta => format!("δ = {}", row.delta),
            CurveKey::Lambda => format!("λ = {}", row.lambda),
        }
    }
}

pub trait FigurePreset: Send + Sync {
    /// Registry key, e.g. `fig2`.
    fn name(&self) -> &'static str;

    fn title(&self) -> &'static str;

    fn spec(&self) -> SweepSpec;

    fn plotted(&self) -> Plotted;

    fn curve_key(&self) -> CurveKey;
}

fn preset_ka_grid() -> Vec<f64> {
    SweepSpec::linear_grid(KA_START, KA_STOP, KA_STEP).expect("static grid is valid")
}

struct DampingStudy;

impl FigurePreset for DampingStudy {
    fn name(&self) -> &'static str {
        "fig1"
    }

    fn title(&self) -> &'static str {
        "Damping velocity versus ka for several damping parameters (ξ = 5.136, λ = 1)"
    }

    fn spec(&self) -> SweepSpec {
        SweepSpec {
            label: self.name().into(),
            ka_grid: preset_ka_grid(),
            lambdas: vec![1.0],
            deltas: FIG1_DELTAS.to_vec(),
            xis: vec![XI_FIRST],
            damping_mode: DampingMode::PaperLiteral,
            rho_num: DEFAULT_RHO_NUM,
        }
    }

    fn plotted(&self) -> Plotted {
        Plotted::DampingVelocity
    }

    fn curve_key(&self) -> CurveKey {
        CurveKey::Delta
    }
}

struct PrestressStudy {
    name: &'static str,
    title: &'static str,
    xi: f64,
}

impl FigurePreset for PrestressStudy {
    fn name(&self) -> &'static str {
        self.name
    }

    fn title(&self) -> &'static str {
        self.title
    }

    fn spec(&self) -> SweepSpec {
        SweepSpec {
            label: self.name.into(),
            ka_grid: preset_ka_grid(),
            lambdas: PRESTRESS_LAMBDAS.to_vec(),
            deltas: vec![0.0],
            xis: vec![self.xi],
            damping_mode: DampingMode::PaperLiteral,
            rho_num: DEFAULT_RHO_NUM,
        }
    }

    fn plotted(&self) -> Plotted {
        Plotted::PhaseVelocity
    }

    fn curve_key(&self) -> CurveKey {
        CurveKey::Lambda
    }
}

static FIG1: DampingStudy = DampingStudy;
static FIG2: PrestressStudy = PrestressStudy {
    name: "fig2",
    title: "Phase velocity versus ka for several extension ratios (ξ = 5.136)",
    xi: XI_FIRST,
};
static FIG3: PrestressStudy = PrestressStudy {
    name: "fig3",
    title: "Phase velocity versus ka for several extension ratios (ξ = 8.418)",
    xi: XI_SECOND,
};

static REGISTRY: [&dyn FigurePreset; 3] = [&FIG1, &FIG2, &FIG3];

pub fn registered() -> impl Iterator<Item = &'static dyn FigurePreset> {
    REGISTRY.iter().copied()
}

pub fn lookup(name: &str) -> Result<&'static dyn FigurePreset> {
    registered()
        .find(|p| p.name() == name)
        .ok_or_else(|| Error::UnknownPreset(name.to_owned()))
}

/// Sweep specs of every built-in preset.
pub fn builtin_presets() -> Vec<SweepSpec> {
    registered().map(|p| p.spec()).collect()
}
