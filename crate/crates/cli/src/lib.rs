//! Front end for `torwave`: subcommand dispatch, CSV/SVG emission and the
//! stable exit-code contract.

pub mod args;
pub mod format;
pub mod svg;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::Parser;

use torwave_core::dispersion::solve_velocity;
use torwave_core::presets::{self, FigurePreset, Plotted};
use torwave_core::special::find_mode_roots;
use torwave_core::sweep::{run_sweep_with_jobs, SweepSpec};
use torwave_core::verify::{run_suites, standard_suites};
use torwave_core::{CurveTable, DampingMode, DispersionInput};

use args::{
    resolve_jobs, Cli, Command, FiguresArgs, OutputFormat, RootsArgs, SweepArgs, VelocityArgs,
};
use format::{format_sig, write_csv};
use svg::{Chart, Series};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Validation = 1,
    Io = 2,
    Verification = 3,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        source: std::io::Error,
    },
    #[error("{0} verification suite(s) failed")]
    Verification(usize),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Validation(_) => ExitCode::Validation,
            CliError::Io { .. } => ExitCode::Io,
            CliError::Verification(_) => ExitCode::Verification,
        }
    }
}

impl From<torwave_core::Error> for CliError {
    fn from(e: torwave_core::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

fn io_error(context: impl Into<String>) -> impl FnOnce(std::io::Error) -> CliError {
    let context = context.into();
    move |source| CliError::Io { context, source }
}

/// Parses `argv` (including the program name) and runs it.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    ExitCode::Success
                }
                _ => ExitCode::Validation,
            };
        }
    };
    match resolve_command(cli).and_then(|command| execute(&command, out, err)) {
        Ok(()) => ExitCode::Success,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn resolve_command(cli: Cli) -> Result<Command, CliError> {
    match (cli.config, cli.command) {
        (Some(_), Some(_)) => Err(CliError::Validation(
            "--config already names the subcommand; pass one or the other".into(),
        )),
        (Some(path), None) => load_config(&path),
        (None, Some(command)) => Ok(command),
        (None, None) => Err(CliError::Validation(
            "no subcommand given (roots, velocity, sweep, figures, verify)".into(),
        )),
    }
}

/// Reads a JSON run configuration: `{"command": "<subcommand>", <flags>...}`.
pub fn load_config(path: &Path) -> Result<Command, CliError> {
    let text = fs::read_to_string(path).map_err(io_error(format!("reading {}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Validation(format!("invalid config {}: {e}", path.display())))
}

pub fn execute(
    command: &Command,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    match command {
        Command::Roots(a) => cmd_roots(a, out),
        Command::Velocity(a) => cmd_velocity(a, out),
        Command::Sweep(a) => cmd_sweep(a, out, err),
        Command::Figures(a) => cmd_figures(a, out),
        Command::Verify => cmd_verify(out),
    }
}

fn stdout_error(e: std::io::Error) -> CliError {
    CliError::Io {
        context: "writing standard output".into(),
        source: e,
    }
}

pub fn cmd_roots(args: &RootsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let roots = find_mode_roots(args.count, args.scan_max).map_err(|e| match e {
        torwave_core::Error::InsufficientScanRange { .. } => {
            CliError::Validation(format!("{e}; raise --scan-max to find {}", args.count))
        }
        other => other.into(),
    })?;
    writeln!(out, "index,xi,residual").map_err(stdout_error)?;
    for root in roots {
        let residual = torwave_core::special::frequency_equation(root.xi)?.abs();
        writeln!(
            out,
            "{},{},{:.3e}",
            root.index,
            format_sig(root.xi, 12),
            residual
        )
        .map_err(stdout_error)?;
    }
    Ok(())
}

fn damping_mode(name: &str) -> Result<DampingMode, CliError> {
    DampingMode::from_name(name).map_err(|_| {
        let known: Vec<_> = torwave_core::damping::registered()
            .map(|l| l.name())
            .collect();
        CliError::Validation(format!(
            "unknown --mode `{name}` (expected one of: {})",
            known.join(", ")
        ))
    })
}

pub fn cmd_velocity(args: &VelocityArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let input = DispersionInput::new(args.ka, args.lambda, args.delta, args.xi)
        .with_mode(damping_mode(&args.mode)?)
        .with_rho(args.rho);
    let solution = solve_velocity(&input)?;
    writeln!(
        out,
        "re_c_over_beta,im_c_over_beta,classification,quadratic_residual"
    )
    .map_err(stdout_error)?;
    writeln!(
        out,
        "{},{},{},{}",
        format::csv_value(solution.c_over_beta.re),
        format::csv_value(solution.c_over_beta.im),
        solution.classification.as_str(),
        format::csv_value(solution.quadratic_residual())
    )
    .map_err(stdout_error)
}

fn sweep_spec(args: &SweepArgs) -> Result<SweepSpec, CliError> {
    if let Some(name) = &args.preset {
        let mut spec = presets::lookup(name)?.spec();
        spec.label = name.clone();
        return Ok(spec);
    }
    let ka_grid = match &args.ka {
        Some(list) => list.clone(),
        None => SweepSpec::linear_grid(args.ka_min, args.ka_max, args.ka_step)?,
    };
    let spec = SweepSpec {
        label: args.label.clone(),
        ka_grid,
        lambdas: args.lambda.clone(),
        deltas: args.delta.clone(),
        xis: args.xi.clone(),
        damping_mode: damping_mode(&args.mode)?,
        rho_num: args.rho,
    }
    .canonicalize();
    spec.validate()?;
    Ok(spec)
}

fn check_jobs(jobs: usize) -> Result<(), CliError> {
    if jobs == 0 {
        return Err(CliError::Validation("--jobs must be at least 1".into()));
    }
    Ok(())
}

pub fn cmd_sweep(
    args: &SweepArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let spec = sweep_spec(args)?;
    if let Some(jobs) = args.jobs {
        check_jobs(jobs)?;
    }
    if args.format == OutputFormat::CsvSvg && args.output.is_none() {
        return Err(CliError::Validation(
            "--format csv+svg needs --output".into(),
        ));
    }
    let table = run_sweep_with_jobs(&spec, resolve_jobs(args.jobs))?;
    match &args.output {
        None => write_csv(&table, &mut *out).map_err(stdout_error)?,
        Some(path) => {
            write_file(path, |w| write_csv(&table, w))?;
            if args.format == OutputFormat::CsvSvg {
                let chart = match args.preset.as_deref().map(presets::lookup) {
                    Some(preset) => preset_chart(preset?, &table),
                    None => sweep_chart(&table),
                };
                let svg_path = path.with_extension("svg");
                write_file(&svg_path, |w| w.write_all(chart.render().as_bytes()))?;
            }
            let _ = writeln!(
                err,
                "{}: {} rows ({})",
                path.display(),
                table.rows.len(),
                table.provenance
            );
        }
    }
    Ok(())
}

fn write_file(
    path: &Path,
    body: impl FnOnce(&mut std::io::BufWriter<fs::File>) -> std::io::Result<()>,
) -> Result<(), CliError> {
    let context = format!("writing {}", path.display());
    let file = fs::File::create(path).map_err(io_error(context.clone()))?;
    let mut writer = std::io::BufWriter::new(file);
    body(&mut writer).map_err(io_error(context.clone()))?;
    writer.flush().map_err(io_error(context))
}

fn series_points(rows: &[torwave_core::CurveRow], plotted: Plotted) -> Vec<(f64, f64)> {
    rows.iter().map(|r| (r.ka, plotted.value(r))).collect()
}

/// Chart for a built-in figure: one curve per value of its curve parameter.
pub fn preset_chart(preset: &dyn FigurePreset, table: &CurveTable) -> Chart {
    let plotted = preset.plotted();
    Chart {
        title: preset.title().to_owned(),
        x_label: "ka".into(),
        y_label: plotted.axis_label().into(),
        description: table.provenance.clone(),
        series: table
            .curves()
            .map(|rows| Series {
                label: preset.curve_key().legend(&rows[0]),
                points: series_points(rows, plotted),
            })
            .collect(),
    }
}

fn sweep_chart(table: &CurveTable) -> Chart {
    Chart {
        title: format!("Phase velocity versus ka ({})", table.spec.label),
        x_label: "ka".into(),
        y_label: Plotted::PhaseVelocity.axis_label().into(),
        description: table.provenance.clone(),
        series: table
            .curves()
            .map(|rows| {
                let r = &rows[0];
                Series {
                    label: format!("ξ={} λ={} δ={}", r.xi, r.lambda, r.delta),
                    points: series_points(rows, Plotted::PhaseVelocity),
                }
            })
            .collect(),
    }
}

/// Writes `figN.csv` and `figN.svg` for one preset; returns the CSV path.
pub fn write_figure(
    preset: &dyn FigurePreset,
    out_dir: &Path,
    jobs: usize,
) -> Result<(PathBuf, CurveTable), CliError> {
    let table = run_sweep_with_jobs(&preset.spec(), jobs)?;
    let csv_path = out_dir.join(format!("{}.csv", preset.name()));
    write_file(&csv_path, |w| write_csv(&table, w))?;
    let svg_path = out_dir.join(format!("{}.svg", preset.name()));
    let chart = preset_chart(preset, &table);
    write_file(&svg_path, |w| w.write_all(chart.render().as_bytes()))?;
    Ok((csv_path, table))
}

pub fn cmd_figures(args: &FiguresArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let selected: Vec<&dyn FigurePreset> = match args.which {
        Some(n @ 1..=3) => vec![presets::lookup(&format!("fig{n}"))?],
        Some(n) => {
            return Err(CliError::Validation(format!(
                "--which must be 1, 2 or 3, got {n}"
            )));
        }
        None => presets::registered().collect(),
    };
    if let Some(jobs) = args.jobs {
        check_jobs(jobs)?;
    }
    fs::create_dir_all(&args.out_dir)
        .map_err(io_error(format!("creating {}", args.out_dir.display())))?;
    let jobs = resolve_jobs(args.jobs);
    for preset in selected {
        let (path, table) = write_figure(preset, &args.out_dir, jobs)?;
        writeln!(
            out,
            "wrote {} ({} rows) and {}.svg",
            path.display(),
            table.rows.len(),
            preset.name()
        )
        .map_err(stdout_error)?;
    }
    Ok(())
}

pub fn cmd_verify(out: &mut dyn Write) -> Result<(), CliError> {
    let reports = run_suites(&standard_suites());
    let mut failed = 0;
    for report in &reports {
        let status = if report.passed { "PASS" } else { "FAIL" };
        if !report.passed {
            failed += 1;
        }
        writeln!(out, "{status} {} ({})", report.name, report.detail).map_err(stdout_error)?;
    }
    if failed > 0 {
        return Err(CliError::Verification(failed));
    }
    Ok(())
}
