//! Deterministic parameter sweeps over the dispersion relation.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::damping::DampingMode;
use crate::dispersion::{solve_velocity, Classification, DispersionInput, DispersionSolution};
use crate::{Error, Result, DEFAULT_RHO_NUM};

/// Cartesian grid of dispersion inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub label: String,
    pub ka_grid: Vec<f64>,
    pub lambdas: Vec<f64>,
    pub deltas: Vec<f64>,
    pub xis: Vec<f64>,
    pub damping_mode: DampingMode,
    pub rho_num: f64,
}

impl SweepSpec {
    pub fn new(label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            ka_grid: Vec::new(),
            lambdas: vec![1.0],
            deltas: vec![0.0],
            xis: vec![0.0],
            damping_mode: DampingMode::PaperLiteral,
            rho_num: DEFAULT_RHO_NUM,
        }
    }

    /// `start, start + step, ...` up to and including `stop` (within 1e-9 of a
    /// step). Points are computed as `start + i * step` so they do not drift.
    pub fn linear_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
        if !(start.is_finite()
            && stop.is_finite()
            && step.is_finite()
            && step > 0.0
            && stop >= start)
        {
            return Err(Error::InvalidParameter {
                name: "ka range",
                reason: format!(
                    "need finite start <= stop and step > 0, got {start}..{stop} step {step}"
                ),
            });
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
        Ok((0..count).map(|i| start + i as f64 * step).collect())
    }

    /// Sorts and deduplicates every parameter list.
    pub fn canonicalize(mut self) -> Self {
        for list in [
            &mut self.ka_grid,
            &mut self.lambdas,
            &mut self.deltas,
            &mut self.xis,
        ] {
            list.sort_by(f64::total_cmp);
            list.dedup();
        }
        self
    }

    pub fn len(&self) -> usize {
        self.ka_grid.len() * self.lambdas.len() * self.deltas.len() * self.xis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn validate(&self) -> Result<()> {
        let lists: [(&'static str, &[f64]); 4] = [
            ("ka grid", &self.ka_grid),
            ("lambda list", &self.lambdas),
            ("delta list", &self.deltas),
            ("xi list", &self.xis),
        ];
        for (name, list) in lists {
            if list.is_empty() {
                return Err(Error::InvalidParameter {
                    name,
                    reason: "must not be empty".into(),
                });
            }
            if list
                .windows(2)
                .any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less))
            {
                return Err(Error::InvalidParameter {
                    name,
                    reason: "must be strictly increasing".into(),
                });
            }
        }
        // Every grid point obeys the same per-point checks.
        for input in self.inputs() {
            input.validate()?;
        }
        Ok(())
    }

    /// Grid points in canonical `(xi, lambda, delta, ka)` order.
    pub fn inputs(&self) -> impl Iterator<Item = DispersionInput> + '_ {
        self.xis.iter().flat_map(move |&xi| {
            self.lambdas.iter().flat_map(move |&lambda| {
                self.deltas.iter().flat_map(move |&delta| {
                    self.ka_grid.iter().map(move |&ka| DispersionInput {
                        ka,
                        lambda,
                        delta_hat: delta,
                        rho_num: self.rho_num,
                        xi,
                        damping_mode: self.damping_mode,
                    })
                })
            })
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRow {
    pub ka: f64,
    pub lambda: f64,
    pub delta: f64,
    pub xi: f64,
    pub c_over_beta: Complex64,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveTable {
    pub spec: SweepSpec,
    pub rows: Vec<CurveRow>,
    pub provenance: String,
}

impl CurveTable {
    /// Rows sharing every parameter except `ka`, in canonical order.
    pub fn curves(&self) -> impl Iterator<Item = &[CurveRow]> {
        self.rows.chunks(self.spec.ka_grid.len())
    }
}

/// Evaluates `spec` serially.
pub fn run_sweep(spec: &SweepSpec) -> Result<CurveTable> {
    run_sweep_with_jobs(spec, 1)
}

/// Evaluates `spec` on `jobs` worker threads. The result does not depend on
/// `jobs`: points are independent and collected in grid order.
pub fn run_sweep_with_jobs(spec: &SweepSpec, jobs: usize) -> Result<CurveTable> {
    spec.validate()?;
    let inputs: Vec<DispersionInput> = spec.inputs().collect();
    let solved: Vec<Result<DispersionSolution>> = if jobs <= 1 {
        inputs.iter().map(solve_velocity).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?;
        pool.install(|| inputs.par_iter().map(solve_velocity).collect())
    };

    let mut rows = Vec::with_capacity(inputs.len());
    for (input, solution) in inputs.iter().zip(solved) {
        let solution = solution?;
        audit(input, &solution)?;
        rows.push(CurveRow {
            ka: input.ka,
            lambda: input.lambda,
            delta: input.delta_hat,
            xi: input.xi,
            c_over_beta: solution.c_over_beta,
            classification: solution.classification,
        });
    }

    Ok(CurveTable {
        provenance: provenance(spec),
        spec: spec.clone(),
        rows,
    })
}

fn audit(input: &DispersionInput, solution: &DispersionSolution) -> Result<()> {
    let fail = |reason: String| Error::AuditFailed {
        ka: input.ka,
        lambda: input.lambda,
        delta: input.delta_hat,
        xi: input.xi,
        reason,
    };
    let c = solution.c_over_beta;
    if !(c.re.is_finite() && c.im.is_finite()) {
        return Err(fail(format!("non-finite velocity {c}")));
    }
    let residual = solution.quadratic_residual();
    if residual > solution.residual_tolerance() {
        return Err(fail(format!("quadratic residual {residual:e}")));
    }
    Ok(())
}

fn provenance(spec: &SweepSpec) -> String {
    let ka = &spec.ka_grid;
    format!(
        "torwave {} | preset={} | mode={} | rho_num={} | ka=[{}..{}] n={} | lambdas={:?} | deltas={:?} | xis={:?}",
        env!("CARGO_PKG_VERSION"),
        spec.label,
        spec.damping_mode,
        spec.rho_num,
        ka.first().copied().unwrap_or(f64::NAN),
        ka.last().copied().unwrap_or(f64::NAN),
        ka.len(),
        spec.lambdas,
        spec.deltas,
        spec.xis,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> SweepSpec {
        SweepSpec {
            ka_grid: SweepSpec::linear_grid(0.5, 3.0, 0.25).unwrap(),
            lambdas: vec![0.8, 1.0],
            deltas: vec![0.0, 0.1],
            xis: vec![0.0, 5.136],
            ..SweepSpec::new("test")
        }
    }

    #[test]
    fn single_point() {
        let spec = SweepSpec {
            ka_grid: vec![1.0],
            ..SweepSpec::new("one")
        };
        let table = run_sweep(&spec).unwrap();
        assert_eq!(table.rows.len(), 1);
        assert_eq!(table.rows[0].c_over_beta, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn linear_grid_hits_endpoint() {
        let grid = SweepSpec::linear_grid(0.5, 3.0, 0.05).unwrap();
        assert_eq!(grid.len(), 51);
        assert_eq!(grid[0], 0.5);
        assert!((grid[50] - 3.0).abs() < 1e-12);
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
        assert!(SweepSpec::linear_grid(1.0, 0.5, 0.1).is_err());
        assert!(SweepSpec::linear_grid(0.5, 1.0, 0.0).is_err());
    }

    #[test]
    fn canonical_order() {
        let table = run_sweep(&spec()).unwrap();
        assert_eq!(table.rows.len(), spec().len());
        let key = |r: &CurveRow| (r.xi, r.lambda, r.delta, r.ka);
        assert!(table
            .rows
            .windows(2)
            .all(|w| key(&w[0]).partial_cmp(&key(&w[1])) == Some(std::cmp::Ordering::Less)));
        assert_eq!(table.curves().count(), 8);
        assert!(table.provenance.contains("mode=paper-literal"));
    }

    #[test]
    fn parallel_matches_serial() {
        let serial = run_sweep(&spec()).unwrap();
        for jobs in [2, 3, 8] {
            assert_eq!(run_sweep_with_jobs(&spec(), jobs).unwrap(), serial);
        }
    }

    #[test]
    fn rejects_bad_specs() {
        let mut s = spec();
        s.ka_grid = vec![1.0, 1.0];
        assert!(run_sweep(&s).is_err());
        let mut s = spec();
        s.deltas.clear();
        assert!(run_sweep(&s).is_err());
        let mut s = spec();
        s.lambdas = vec![-1.0, 1.0];
        assert!(run_sweep(&s).is_err());
    }

    #[test]
    fn canonicalize_sorts_and_dedups() {
        let s = SweepSpec {
            ka_grid: vec![2.0, 1.0, 2.0],
            lambdas: vec![1.0, 0.7],
            ..SweepSpec::new("x")
        }
        .canonicalize();
        assert_eq!(s.ka_grid, [1.0, 2.0]);
        assert_eq!(s.lambdas, [0.7, 1.0]);
        assert!(s.validate().is_ok());
    }
}
