//! Command-line front end: parses commands, runs the verification suites and
//! experiments, and emits deterministic reports.
//!
//! Exit codes: 0 on success, 1 when a check that is expected to pass fails,
//! 2 on usage, parse, or I/O errors. An inequality violation in
//! `bell-sim --mode independent` is the expected finding and is asserted by a
//! `gt`-kind check, so its occurrence exits 0 and its absence exits 1.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bell::{
    bell3_evaluate, bell3_index_identity_residual, chsh_evaluate, cross_correlation, form_compare,
    independent_runs_bell3, independent_runs_chsh, lhv_common_run, AngleConfig, BellError,
    CorrelationRow, ExperimentOutcome, InequalityReport,
};
use crate::counterfactual::{enumerate_assignments, ghz_product_constraints, scan_summary};
use crate::dataset::{load_datasets, render_datasets, DatasetError};
use crate::demos::{polarizer_cascade, rotate_sequence, PolarizerStack, Rotation3, RotationAxis};
use crate::ghz::{
    basis_expand, eigen_relations, ghz_state, verify_operator_identities, ObservableLabel,
};
use crate::linalg::IDENTITY_TOL;
use crate::measurement::{outcome_statistics, MeasureError, Protocol, ProtocolSpec, RNG_ALGORITHM};
use crate::pauli::Axis;
use crate::report::{fmt_real, Check, Report, ReportTable};

/// Master seed used when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 42;
/// Default trials for measurement statistics.
pub const DEFAULT_MEASURE_TRIALS: u64 = 10_000;
/// Default trials per run for correlation estimation.
pub const DEFAULT_CORRELATION_TRIALS: u64 = 100_000;

#[derive(Debug, Parser)]
#[command(
    name = "ghzbell",
    version,
    about = "GHZ operator algebra and Bell-type inequality experiments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Master seed for randomized commands (default 42).
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Trial count (defaults: 10000 for measure, 100000 for bell-sim).
    #[arg(long, global = true)]
    pub trials: Option<u64>,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify operator identities, eigenvalue relations, and the
    /// product-basis expansion of the GHZ state.
    VerifyGhz,
    /// Exhaustively scan the 64 local hidden-value assignments.
    ScanCounterfactuals,
    /// Run a measurement sequence over many trials, e.g.
    /// --sequence A1,A2,A1. A token may override the mode: A1:spin.
    Measure {
        /// Comma-separated observable labels (A1..A4), optional :mode suffix.
        #[arg(long)]
        sequence: String,
        /// Default protocol for steps without a suffix.
        #[arg(long, value_enum, default_value_t = MeasureMode::Product)]
        mode: MeasureMode,
    },
    /// Evaluate inequality forms on a CSV file of common-index ±1 columns.
    BellAudit {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = AuditForm::Bell3)]
        form: AuditForm,
    },
    /// Sample singlet pairs (independent runs) or the hidden-direction model
    /// (one common run) and evaluate the inequality.
    BellSim {
        /// Comma-separated analyzer angles in degrees: three for the
        /// three-dataset form, four (a, a2, b, b2) for the CHSH form.
        #[arg(long)]
        angles: String,
        #[arg(long, value_enum, default_value_t = SimMode::Independent)]
        mode: SimMode,
        /// Also write the labeled datasets as CSV for re-auditing.
        #[arg(long, value_name = "FILE")]
        dump: Option<PathBuf>,
    },
    /// Classical non-commutation demos.
    Demo {
        #[arg(long, value_enum)]
        which: DemoKind,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureMode {
    Product,
    Spin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AuditForm {
    Bell3,
    Chsh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SimMode {
    Independent,
    LhvCommon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DemoKind {
    Rotations,
    Polarizers,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    #[error(transparent)]
    Bell(#[from] BellError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error("cannot write '{path}': {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Runs the command and returns the finished report.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    match &cli.command {
        Command::VerifyGhz => Ok(verify_ghz_report(seed)),
        Command::ScanCounterfactuals => Ok(scan_report(seed)),
        Command::Measure { sequence, mode } => {
            let trials = cli.trials.unwrap_or(DEFAULT_MEASURE_TRIALS);
            measure_report(sequence, *mode, trials, seed)
        }
        Command::BellAudit { input, form } => audit_report(input, *form, seed),
        Command::BellSim { angles, mode, dump } => {
            let trials = cli.trials.unwrap_or(DEFAULT_CORRELATION_TRIALS);
            sim_report(angles, *mode, trials, seed, dump.as_deref())
        }
        Command::Demo { which } => Ok(demo_report(*which, seed)),
    }
}

/// Runs the command, writes the rendered report, and maps the outcome to the
/// process exit code.
pub fn execute(cli: &Cli) -> i32 {
    match run(cli) {
        Ok(report) => {
            let text = report.render();
            if let Some(path) = &cli.out {
                if let Err(source) = fs::write(path, &text) {
                    eprintln!("error: cannot write '{}': {source}", path.display());
                    return 2;
                }
            } else {
                print!("{text}");
            }
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn axis_triple_name(axes: [Axis; 3]) -> String {
    format!("({},{},{})", axes[0], axes[1], axes[2])
}

fn verify_ghz_report(seed: u64) -> Report {
    let mut report = Report::new("verify-ghz", seed, RNG_ALGORITHM);
    let tol = IDENTITY_TOL;

    for identity in verify_operator_identities(tol) {
        report
            .checks
            .push(Check::eq(identity.name, identity.residual, 0.0, tol));
    }
    for relation in eigen_relations(tol) {
        report.checks.push(Check::eq(
            format!("eigenvalue {}", relation.label),
            relation.lambda,
            relation.label.ghz_eigenvalue(),
            tol,
        ));
        report.checks.push(Check::eq(
            format!("eigen-residual {}", relation.label),
            relation.residual,
            0.0,
            tol,
        ));
    }

    let psi = ghz_state();
    let axes = [Axis::X, Axis::Y, Axis::Y];
    let terms = basis_expand(&psi, axes);
    let nonzero: Vec<_> = terms.iter().filter(|t| t.amplitude.norm() > tol).collect();
    let name = axis_triple_name(axes);
    report.checks.push(Check::eq(
        format!("expansion{name} nonzero terms"),
        nonzero.len() as f64,
        4.0,
        0.0,
    ));
    let magnitude_dev = nonzero
        .iter()
        .map(|t| (t.amplitude.norm() - 0.5).abs())
        .fold(0.0, f64::max);
    report.checks.push(Check::eq(
        format!("expansion{name} magnitude deviation from 1/2"),
        magnitude_dev,
        0.0,
        tol,
    ));
    let odd_terms = nonzero.iter().filter(|t| t.sign_product() != 1).count();
    report.checks.push(Check::eq(
        format!("expansion{name} odd-parity terms"),
        odd_terms as f64,
        0.0,
        0.0,
    ));
    let total: f64 = terms.iter().map(|t| t.amplitude.norm_sqr()).sum();
    report.checks.push(Check::eq(
        format!("expansion{name} normalization"),
        total,
        1.0,
        tol,
    ));

    let xxx = basis_expand(&psi, [Axis::X, Axis::X, Axis::X]);
    let parity: f64 = xxx
        .iter()
        .map(|t| t.sign_product() as f64 * t.amplitude.norm_sqr())
        .sum();
    report
        .checks
        .push(Check::eq("A4 expectation on GHZ state", parity, -1.0, tol));

    report
}

fn scan_report(seed: u64) -> Report {
    let mut report = Report::new("scan-counterfactuals", seed, RNG_ALGORITHM);
    let summary = scan_summary();
    report
        .checks
        .push(Check::eq("assignments enumerated", 64.0, 64.0, 0.0));
    report.checks.push(Check::eq(
        "satisfying the three product constraints",
        summary.satisfying_products as f64,
        8.0,
        0.0,
    ));
    report.checks.push(Check::eq(
        "also satisfying m_x1*m_x2*m_x3 = -1",
        summary.satisfying_with_all_x as f64,
        0.0,
        0.0,
    ));
    report.checks.push(Check::eq(
        "all-x product forced to +1 on every satisfying assignment",
        if summary.forced_all_x_positive {
            1.0
        } else {
            0.0
        },
        1.0,
        0.0,
    ));
    report.checks.push(Check::eq(
        "constraint-product identity holds on all 64 assignments",
        if summary.product_identity_holds {
            1.0
        } else {
            0.0
        },
        1.0,
        0.0,
    ));

    let constraints = ghz_product_constraints();
    let mut table = ReportTable::new(
        "satisfying-assignments",
        &["m_x1", "m_y1", "m_x2", "m_y2", "m_x3", "m_y3"],
    );
    for a in enumerate_assignments() {
        if crate::counterfactual::check_constraints(&a, &constraints) {
            table.push_row(
                vec![a.m_x[0], a.m_y[0], a.m_x[1], a.m_y[1], a.m_x[2], a.m_y[2]]
                    .into_iter()
                    .map(|v| v.to_string())
                    .collect(),
            );
        }
    }
    report.tables.push(table);
    report
}

fn parse_sequence(
    sequence: &str,
    default_mode: MeasureMode,
) -> Result<Vec<(ObservableLabel, Protocol)>, CliError> {
    let default_protocol = match default_mode {
        MeasureMode::Product => Protocol::ProductRevealing,
        MeasureMode::Spin => Protocol::spin_revealing(),
    };
    let mut steps = Vec::new();
    for token in sequence.split(',') {
        let token = token.trim();
        let (label_str, protocol) = match token.split_once(':') {
            None => (token, default_protocol),
            Some((l, "product")) => (l, Protocol::ProductRevealing),
            Some((l, "spin")) => (l, Protocol::spin_revealing()),
            Some((_, other)) => {
                return Err(CliError::Usage(format!(
                    "unknown step mode '{other}' in '{token}' (expected product or spin)"
                )))
            }
        };
        let label: ObservableLabel = label_str.parse().map_err(CliError::Usage)?;
        steps.push((label, protocol));
    }
    if steps.is_empty() {
        return Err(CliError::Usage(
            "sequence must name at least one observable".into(),
        ));
    }
    Ok(steps)
}

fn sequence_echo(steps: &[(ObservableLabel, Protocol)]) -> String {
    steps
        .iter()
        .map(|(label, protocol)| {
            let mode = if protocol.is_spin_revealing() {
                "spin"
            } else {
                "product"
            };
            format!("{label}:{mode}")
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn measure_report(
    sequence: &str,
    mode: MeasureMode,
    trials: u64,
    seed: u64,
) -> Result<Report, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let steps = parse_sequence(sequence, mode)?;
    let echo = format!(
        "measure --sequence {} --trials {trials} --seed {seed}",
        sequence_echo(&steps)
    );
    let spec = ProtocolSpec {
        steps,
        trials,
        seed,
    };
    let stats = outcome_statistics(&spec)?;

    let mut report = Report::new(echo, seed, RNG_ALGORITHM);
    let mut step_table = ReportTable::new(
        "step-frequencies",
        &["step", "label", "protocol", "freq_plus", "freq_minus"],
    );
    for (idx, step) in stats.steps.iter().enumerate() {
        let plus = stats.plus_frequency(idx);
        step_table.push_row(vec![
            (idx + 1).to_string(),
            step.label.to_string(),
            step.protocol.to_string(),
            fmt_real(plus),
            fmt_real(1.0 - plus),
        ]);
    }
    report.tables.push(step_table);

    let mut joint_table = ReportTable::new("joint-products", &["products", "count", "frequency"]);
    for (tuple, count) in &stats.joint_counts {
        let key = tuple
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        joint_table.push_row(vec![
            key,
            count.to_string(),
            fmt_real(*count as f64 / stats.trials as f64),
        ]);
    }
    report.tables.push(joint_table);
    Ok(report)
}

fn audit_report(input: &Path, form: AuditForm, seed: u64) -> Result<Report, CliError> {
    let datasets = load_datasets(input)?;
    let form_name = match form {
        AuditForm::Bell3 => "bell3",
        AuditForm::Chsh => "chsh",
    };
    let echo = format!("bell-audit --input {} --form {form_name}", input.display());
    let mut report = Report::new(echo, seed, RNG_ALGORITHM);

    match form {
        AuditForm::Bell3 => {
            if datasets.len() < 3 {
                return Err(CliError::Usage(format!(
                    "bell3 needs at least 3 columns, file has {}",
                    datasets.len()
                )));
            }
            let mut max_residual = 0i64;
            for i in 0..datasets.len() {
                for j in (i + 1)..datasets.len() {
                    for k in (j + 1)..datasets.len() {
                        let (a, b, c) = (&datasets[i], &datasets[j], &datasets[k]);
                        let eval = bell3_evaluate(a, b, c)?;
                        report.checks.push(Check::le(
                            format!("bell3({},{},{})", a.label(), b.label(), c.label()),
                            eval.lhs,
                            eval.rhs,
                            eval.tolerance,
                        ));
                        max_residual = max_residual.max(bell3_index_identity_residual(a, b, c)?);
                    }
                }
            }
            report.checks.push(Check::eq(
                "per-index identity residual",
                max_residual as f64,
                0.0,
                0.0,
            ));
        }
        AuditForm::Chsh => {
            if datasets.len() < 4 {
                return Err(CliError::Usage(format!(
                    "chsh needs at least 4 columns, file has {}",
                    datasets.len()
                )));
            }
            for i in 0..datasets.len() {
                for j in (i + 1)..datasets.len() {
                    for k in (j + 1)..datasets.len() {
                        for l in (k + 1)..datasets.len() {
                            let (a, a2, b, b2) =
                                (&datasets[i], &datasets[j], &datasets[k], &datasets[l]);
                            let eval = chsh_evaluate(a, a2, b, b2)?;
                            report.checks.push(Check::le(
                                format!(
                                    "chsh({},{},{},{})",
                                    a.label(),
                                    a2.label(),
                                    b.label(),
                                    b2.label()
                                ),
                                eval.lhs,
                                eval.rhs,
                                eval.tolerance,
                            ));
                        }
                    }
                }
            }
        }
    }

    let mut rows = Vec::new();
    for i in 0..datasets.len() {
        for j in (i + 1)..datasets.len() {
            let est = cross_correlation(&datasets[i], &datasets[j])?;
            rows.push((
                format!("{},{}", est.labels.0, est.labels.1),
                est.value,
                est.samples,
                est.std_error,
            ));
        }
    }
    rows.sort_by(|x, y| x.0.cmp(&y.0));
    let mut table = ReportTable::new("correlations", &["pair", "value", "samples", "std_error"]);
    for (pair, value, samples, std_error) in rows {
        table.push_row(vec![
            pair,
            fmt_real(value),
            samples.to_string(),
            fmt_real(std_error),
        ]);
    }
    report.tables.push(table);
    Ok(report)
}

fn parse_angles(angles: &str) -> Result<Vec<f64>, CliError> {
    let mut out = Vec::new();
    for token in angles.split(',') {
        let token = token.trim();
        let value: f64 = token
            .parse()
            .map_err(|_| CliError::Usage(format!("'{token}' is not a valid angle in degrees")))?;
        if !value.is_finite() {
            return Err(CliError::Usage(format!("angle '{token}' must be finite")));
        }
        out.push(value);
    }
    Ok(out)
}

fn angles_echo(angles: &[f64]) -> String {
    angles
        .iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn inputs_table(inequality: &InequalityReport) -> ReportTable {
    let mut table = ReportTable::new(
        "inequality-inputs",
        &["pair", "value", "samples", "std_error"],
    );
    let mut rows: Vec<_> = inequality
        .inputs
        .iter()
        .map(|est| {
            (
                format!("{},{}", est.labels.0, est.labels.1),
                est.value,
                est.samples,
                est.std_error,
            )
        })
        .collect();
    rows.sort_by(|x, y| x.0.cmp(&y.0));
    for (pair, value, samples, std_error) in rows {
        table.push_row(vec![
            pair,
            fmt_real(value),
            samples.to_string(),
            fmt_real(std_error),
        ]);
    }
    table
}

fn correlation_table(rows: &[CorrelationRow]) -> ReportTable {
    let mut table = ReportTable::new(
        "correlations",
        &["pair", "delta_deg", "value", "samples", "std_error"],
    );
    let mut sorted: Vec<&CorrelationRow> = rows.iter().collect();
    sorted.sort_by(|x, y| (&x.pair.0, &x.pair.1).cmp(&(&y.pair.0, &y.pair.1)));
    for row in sorted {
        table.push_row(vec![
            format!("{},{}", row.pair.0, row.pair.1),
            fmt_real(row.delta_deg),
            fmt_real(row.value),
            row.samples.to_string(),
            fmt_real(row.std_error),
        ]);
    }
    table
}

fn push_form_note(report: &mut Report, rows: &[CorrelationRow]) {
    match form_compare(rows) {
        Ok(cmp) => {
            let mut note = String::new();
            let _ = write!(
                note,
                "form-compare: closest={} cosine_dev={} linear_dev={}",
                cmp.closest,
                fmt_real(cmp.cosine_max_dev),
                fmt_real(cmp.linear_max_dev)
            );
            report.notes.push(note);
        }
        Err(_) => {
            report
                .notes
                .push("form-compare: skipped (needs 3 distinct angle separations)".to_string());
        }
    }
}

fn sim_report(
    angles: &str,
    mode: SimMode,
    trials: u64,
    seed: u64,
    dump: Option<&std::path::Path>,
) -> Result<Report, CliError> {
    let angles = parse_angles(angles)?;
    let config = AngleConfig {
        angles_deg: angles.clone(),
        trials,
        seed,
    };
    let mode_name = match mode {
        SimMode::Independent => "independent",
        SimMode::LhvCommon => "lhv-common",
    };
    let echo = format!(
        "bell-sim --angles {} --mode {mode_name} --trials {trials} --seed {seed}",
        angles_echo(&angles)
    );

    let outcome: ExperimentOutcome = match mode {
        SimMode::Independent => match angles.len() {
            3 => independent_runs_bell3(&config)?,
            4 => independent_runs_chsh(&config)?,
            n => {
                return Err(CliError::Usage(format!(
                    "independent mode takes 3 angles (bell3) or 4 angles (chsh), got {n}"
                )))
            }
        },
        SimMode::LhvCommon => {
            if angles.len() != 3 {
                return Err(CliError::Usage(format!(
                    "lhv-common mode takes exactly 3 angles, got {}",
                    angles.len()
                )));
            }
            lhv_common_run(&config)?
        }
    };

    let mut report = Report::new(echo, seed, RNG_ALGORITHM);
    let ineq = &outcome.inequality;
    if outcome.expect_violation {
        report.checks.push(Check::gt(
            format!("{} violated (expected)", ineq.form),
            ineq.lhs,
            ineq.rhs,
            ineq.tolerance,
        ));
        report.notes.push(format!(
            "finding: violated={} (expected) - each correlation is estimated from an \
             independent run, not from common-index data",
            !ineq.satisfied
        ));
    } else {
        report.checks.push(Check::le(
            format!("{} satisfied", ineq.form),
            ineq.lhs,
            ineq.rhs,
            ineq.tolerance,
        ));
    }

    report.tables.push(inputs_table(ineq));
    report.tables.push(correlation_table(&outcome.table));
    push_form_note(&mut report, &outcome.table);

    if let Some(path) = dump {
        let text = render_datasets(&outcome.datasets);
        fs::write(path, text).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        })?;
    }
    Ok(report)
}

fn demo_report(which: DemoKind, seed: u64) -> Report {
    match which {
        DemoKind::Rotations => {
            let mut report = Report::new("demo --which rotations", seed, RNG_ALGORITHM);
            let rx = Rotation3::new(RotationAxis::X, 90.0);
            let ry = Rotation3::new(RotationAxis::Y, 90.0);
            let z_hat = [0.0, 0.0, 1.0];
            let xy = rotate_sequence(&[rx, ry], z_hat);
            let yx = rotate_sequence(&[ry, rx], z_hat);
            let max_diff =
                |a: [f64; 3], b: [f64; 3]| (0..3).map(|k| (a[k] - b[k]).abs()).fold(0.0, f64::max);
            report.checks.push(Check::eq(
                "Rx(90) then Ry(90) sends z-hat to (0,-1,0)",
                max_diff(xy, [0.0, -1.0, 0.0]),
                0.0,
                IDENTITY_TOL,
            ));
            report.checks.push(Check::eq(
                "Ry(90) then Rx(90) sends z-hat to (1,0,0)",
                max_diff(yx, [1.0, 0.0, 0.0]),
                0.0,
                IDENTITY_TOL,
            ));
            report.checks.push(Check::gt(
                "the two orders disagree",
                max_diff(xy, yx),
                0.0,
                IDENTITY_TOL,
            ));
            let round_trip = rotate_sequence(
                &[rx, Rotation3::new(RotationAxis::X, -90.0)],
                [0.3, -1.2, 2.5],
            );
            report.checks.push(Check::eq(
                "Rx(90) then Rx(-90) restores the input",
                max_diff(round_trip, [0.3, -1.2, 2.5]),
                0.0,
                IDENTITY_TOL,
            ));

            let mut table = ReportTable::new("orientations", &["sequence", "x", "y", "z"]);
            table.push_row(vec![
                "Rx(90),Ry(90) on (0,0,1)".into(),
                fmt_real(xy[0]),
                fmt_real(xy[1]),
                fmt_real(xy[2]),
            ]);
            table.push_row(vec![
                "Ry(90),Rx(90) on (0,0,1)".into(),
                fmt_real(yx[0]),
                fmt_real(yx[1]),
                fmt_real(yx[2]),
            ]);
            report.tables.push(table);
            report
        }
        DemoKind::Polarizers => {
            let mut report = Report::new("demo --which polarizers", seed, RNG_ALGORITHM);
            let diagonal_first = polarizer_cascade(&PolarizerStack::new(0.0, vec![45.0, 90.0]));
            let crossed_first = polarizer_cascade(&PolarizerStack::new(0.0, vec![90.0, 45.0]));
            let aligned = polarizer_cascade(&PolarizerStack::new(0.0, vec![0.0]));
            report.checks.push(Check::eq(
                "45 then 90 from 0-degree beam transmits 1/4",
                diagonal_first,
                0.25,
                0.0,
            ));
            report.checks.push(Check::eq(
                "90 then 45 from 0-degree beam transmits 0",
                crossed_first,
                0.0,
                0.0,
            ));
            report.checks.push(Check::eq(
                "aligned polarizer transmits 1",
                aligned,
                1.0,
                0.0,
            ));
            report.checks.push(Check::gt(
                "insertion order changes the transmission",
                (diagonal_first - crossed_first).abs(),
                0.0,
                IDENTITY_TOL,
            ));

            let mut table = ReportTable::new("cascades", &["stages", "transmission"]);
            table.push_row(vec!["0 -> [45,90]".into(), fmt_real(diagonal_first)]);
            table.push_row(vec!["0 -> [90,45]".into(), fmt_real(crossed_first)]);
            table.push_row(vec!["0 -> [0]".into(), fmt_real(aligned)]);
            report.tables.push(table);
            report
        }
    }
}
