//! `lct`: log canonical thresholds, multiplicities and threshold bounds
//! for monomial ideals, and certified lower bounds for polynomial ideals.
//!
//! Results go to stdout as JSON; a short human summary goes to stderr
//! unless `--json` is given, in which case stdout carries compact JSON only.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lct_core::bounds::bounds_report;
use lct_core::groebner::{certified_lct_lower_bound, FrontendConfig, GroebnerConfig};
use lct_core::multiplicities::{fit_multiplicities, validate_sequence, FitConfig, MultiplicitySequence};
use lct_core::rational::{parse_decimal, to_f64, to_text};
use lct_core::thresholds::{kiselman_lct, numeric_integrability_probe, ProbeConfig};
use lct_core::{ExtRational, MonomialIdeal};
use lct_tools::error::exit;
use lct_tools::format::{self, read_json, IdealFile, PolynomialFile, SequenceFile};
use lct_tools::frontend::{parallel_order_sweep, sweep_orders};
use lct_tools::random::{verify_random, RunConfig};
use lct_tools::report::{ideal_report, threshold_report};
use lct_tools::ToolError;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "lct", version, about = "Log canonical thresholds and multiplicity bounds of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for `verify-random`.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Compact JSON on stdout and no summary on stderr.
    #[arg(long, global = true)]
    json: bool,
    /// CSV instead of JSON for tabular output (`verify-random`, `mults`).
    #[arg(long, global = true)]
    csv: bool,
    /// Cap on Buchberger reduction steps.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_steps: u64,
    /// Probe grid points per axis.
    #[arg(long, global = true, default_value_t = 128)]
    probe_grid: usize,
    /// Probe ratio tolerance, in (0, 1).
    #[arg(long, global = true, default_value_t = 0.05)]
    probe_tolerance: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Threshold of a monomial ideal, by the primal and the dual LP.
    Lct { input: PathBuf },
    /// Threshold, multiplicities, bounds and every consistency check.
    Report { input: PathBuf },
    /// Mixed multiplicities and their inequality checks.
    Mults {
        input: PathBuf,
        /// Write the Hilbert table used by the fit as CSV.
        #[arg(long)]
        dump_table: Option<PathBuf>,
    },
    /// Bounds implied by a multiplicity sequence `{"e": [...]}`.
    Bounds {
        input: PathBuf,
        /// Threshold to compare against (overrides `"c"` in the file).
        #[arg(long)]
        c: Option<String>,
    },
    /// Random ideals and random points of D, all checked exactly.
    VerifyRandom {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 5)]
        max_degree: u32,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Also run the integrability probe at 0.9c and 1.1c.
        #[arg(long)]
        probe: bool,
    },
    /// Certified lower bound for a polynomial ideal via its initial ideal.
    GroebnerBound {
        input: PathBuf,
        /// Try lex and grevlex under every variable precedence as well.
        #[arg(long)]
        sweep: bool,
    },
    /// Numeric integrability check of `e^{-2c phi}`.
    Probe {
        input: PathBuf,
        /// Exponent, as a decimal or `p/q`.
        #[arg(long)]
        c: String,
    },
}

struct Output {
    json: bool,
}

impl Output {
    fn emit(&self, value: &Value) -> Result<(), ToolError> {
        let text = if self.json { serde_json::to_string(value) } else { serde_json::to_string_pretty(value) };
        let text = text.map_err(|e| ToolError::Format(e.to_string()))?;
        match writeln!(io::stdout().lock(), "{text}") {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                Err(ToolError::Io { path: PathBuf::from("<stdout>"), source: e })
            }
            _ => Ok(()),
        }
    }

    fn summary(&self, line: impl AsRef<str>) {
        if !self.json {
            eprintln!("{}", line.as_ref());
        }
    }
}

fn load_ideal(path: &Path) -> Result<MonomialIdeal, ToolError> {
    read_json::<IdealFile>(path)?.into_ideal()
}

fn probe_config(cli: &Cli) -> ProbeConfig {
    ProbeConfig { grid: cli.probe_grid, tolerance: cli.probe_tolerance, ..ProbeConfig::default() }
}

fn csv_error(e: csv::Error) -> ToolError {
    ToolError::Format(e.to_string())
}

fn run(cli: &Cli) -> Result<i32, ToolError> {
    let out = Output { json: cli.json };
    match &cli.command {
        Command::Lct { input } => {
            let ideal = load_ideal(input)?;
            let report = threshold_report(&ideal)?;
            let mut value = report.to_json();
            if let Value::Object(map) = &mut value {
                map.retain(|k, _| ["ideal", "certificate", "howald", "duality", "verdicts", "passes"].contains(&k.as_str()));
            }
            out.emit(&value)?;
            out.summary(format!("c = {} (dual {})", to_text(&report.certificate.c), to_text(&report.howald)));
            Ok(if report.passes() { exit::OK } else { exit::INVARIANT })
        }
        Command::Report { input } => {
            let ideal = load_ideal(input)?;
            let report = ideal_report(&ideal, &FitConfig::default())?;
            out.emit(&report.to_json())?;
            let main = report.bounds.as_ref().map(|b| b.main_bound.to_text()).unwrap_or_default();
            let tag = if report.sharp() { " (sharp)" } else { "" };
            out.summary(format!("c = {}, main bound = {main}{tag}", to_text(&report.certificate.c)));
            for v in report.failures() {
                out.summary(format!("FAILED {}: {}", v.name, v.detail));
            }
            Ok(if report.passes() { exit::OK } else { exit::INVARIANT })
        }
        Command::Mults { input, dump_table } => {
            let ideal = load_ideal(input)?;
            let (e, table) = fit_multiplicities(&ideal, &FitConfig::default())?;
            let validation = validate_sequence(&e);
            if let Some(path) = dump_table {
                let file = File::create(path).map_err(|source| ToolError::Io { path: path.clone(), source })?;
                format::hilbert_csv(&table, file).map_err(csv_error)?;
            }
            if cli.csv {
                format::hilbert_csv(&table, io::stdout().lock()).map_err(csv_error)?;
            } else {
                out.emit(&json!({
                    "ideal": format::ideal(&ideal),
                    "multiplicities": format::sequence(&e),
                    "table": {
                        "r_base": table.r_base,
                        "t_base": table.t_base,
                        "rows": table.values.len(),
                        "columns": table.values.first().map_or(0, Vec::len),
                    },
                    "validation": format::validation(&validation),
                }))?;
            }
            out.summary(format!("e = {:?}", e.values()));
            Ok(if validation.all_pass() { exit::OK } else { exit::INVARIANT })
        }
        Command::Bounds { input, c } => {
            let file: SequenceFile = read_json(input)?;
            let e = MultiplicitySequence::new(file.e)?;
            let c = match c.as_ref().or(file.c.as_ref()) {
                Some(text) => Some(parse_decimal(text)?),
                None => None,
            };
            let report = bounds_report(&e, c.as_ref())?;
            out.emit(&json!({ "multiplicities": format::sequence(&e), "bounds": format::bounds(&report) }))?;
            out.summary(format!("main bound = {}", report.main_bound));
            let mut ok = report.chain_ok();
            if let Some(c) = &c {
                let c_ext = ExtRational::Finite(c.clone());
                ok &= report.main_bound <= c_ext && report.skoda.contains(&c_ext);
            }
            Ok(if ok { exit::OK } else { exit::INVARIANT })
        }
        Command::VerifyRandom { dim, max_degree, count, probe } => {
            let mut config = RunConfig::new(cli.seed, *dim, *max_degree, *count);
            if *probe {
                config.probe = Some(probe_config(cli));
            }
            config.validate().map_err(ToolError::Format)?;
            let summary = verify_random(&config);
            if cli.csv {
                summary.write_csv(io::stdout().lock()).map_err(csv_error)?;
            } else {
                out.emit(&summary.to_json())?;
            }
            let slack = summary.min_slack().map(|s| to_text(&s)).unwrap_or_else(|| "-".into());
            out.summary(format!(
                "ideals: {} passed, {} failed, {} skipped ({} sharp, min slack {slack}); \
                 monotonicity {}/{}; derivative sign {}/{}",
                summary.passed(),
                summary.failed(),
                summary.skipped(),
                summary.sharp(),
                summary.monotonicity.passed,
                summary.monotonicity.passed + summary.monotonicity.failed,
                summary.derivative.passed,
                summary.derivative.passed + summary.derivative.failed,
            ));
            Ok(if summary.all_pass() { exit::OK } else { exit::INVARIANT })
        }
        Command::GroebnerBound { input, sweep } => {
            let file: PolynomialFile = read_json(input)?;
            let polys = file.polynomials()?;
            let order = file.order()?;
            let config = FrontendConfig {
                groebner: GroebnerConfig { max_reductions: cli.max_steps },
                fit: FitConfig::default(),
            };
            let (cert, tried) = if *sweep {
                let orders = sweep_orders(&order);
                (parallel_order_sweep(&polys, &orders, &config)?, orders.len())
            } else {
                (certified_lct_lower_bound(&polys, &order, &config)?, 1)
            };
            let mut value = format::lower_bound(&cert);
            value["orders_tried"] = json!(tried);
            out.emit(&value)?;
            out.summary(cert.guarantee());
            let consistent = cert.initial_main_bound.as_ref().is_none_or(|b| *b <= ExtRational::Finite(cert.c_initial.clone()));
            Ok(if consistent { exit::OK } else { exit::INVARIANT })
        }
        Command::Probe { input, c } => {
            let ideal = load_ideal(input)?;
            let c = parse_decimal(c)?;
            let report = numeric_integrability_probe(&ideal, &c, &probe_config(cli))?;
            let exact = kiselman_lct(&ideal)?.c;
            let gap = ((to_f64(&c) - to_f64(&exact)) / to_f64(&exact)).abs();
            let warning = (gap < 0.02).then(|| "c is within 2% of the exact threshold; the probe is unreliable here");
            let mut value = format::probe(&report);
            value["ideal"] = format::ideal(&ideal);
            value["c"] = format::rational(&c);
            value["c_exact"] = format::rational(&exact);
            value["relative_gap"] = json!(gap);
            value["warning"] = json!(warning);
            out.emit(&value)?;
            if let Some(w) = warning {
                eprintln!("warning: {w}");
            }
            out.summary(format!(
                "{} at c = {} (exact threshold {})",
                format::verdict_name(report.verdict),
                to_text(&c),
                to_text(&exact)
            ));
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = io::stdout().flush();
    ExitCode::from(code as u8)
}
