use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mmcorr::statespec::StateSpec;
use mmcorr::sweep::{run_sweep, SweepRow, SweepSpec};
use mmcorr::verify::{self, Tolerances, VerifyOptions};
use mmcorr::{full_report, Error, SearchConfig};

/// Correlation measures for two-qubit states.
#[derive(Parser)]
#[command(name = "mmcorr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every measure of one state as a JSON object.
    Measures {
        #[command(flatten)]
        input: Input,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Evaluate a one-parameter family and write CSV rows.
    Sweep {
        #[command(flatten)]
        input: Input,
        /// Write the table here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Run the built-in checks against exact values and the search oracles.
    Verify {
        /// Only run checks whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        #[command(flatten)]
        search: SearchArgs,
        /// Multiplies every tolerance; exercised by the test harness.
        #[arg(long, hide = true, default_value_t = 1.0)]
        tol_scale: f64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Read the record from a file.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Record given on the command line.
    #[arg(long)]
    inline: Option<String>,
}

#[derive(Args)]
struct SearchArgs {
    /// YAML or JSON file with search settings; flags below override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Coarse grid size, e.g. 64x128.
    #[arg(long, value_parser = parse_grid)]
    grid: Option<(usize, usize)>,
    /// Pattern-search step levels.
    #[arg(long)]
    refine: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected NTHETAxNPHI, got `{s}`"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((num(a)?, num(b)?))
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn io(path: &Path, e: io::Error) -> Self {
        Failure {
            code: 1,
            message: format!("{}: {e}", path.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) => 2,
            e if e.is_invalid_state() => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl SearchArgs {
    fn resolve(&self) -> Result<SearchConfig, Failure> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
                // JSON is a subset of the accepted YAML
                mmcorr::statespec::parse_yaml(&text)?
            }
            None => SearchConfig::default(),
        };
        if let Some(g) = self.grid {
            cfg.coarse_grid = g;
        }
        if let Some(r) = self.refine {
            cfg.refine_iters = r;
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        cfg.validate().map_err(|e| Failure::parse(e.to_string()))?;
        Ok(cfg)
    }
}

impl Input {
    fn text(&self) -> Result<String, Failure> {
        match (&self.spec, &self.inline) {
            (Some(path), _) => fs::read_to_string(path).map_err(|e| Failure::io(path, e)),
            (None, Some(s)) => Ok(s.clone()),
            (None, None) => Err(Failure::parse("one of --spec or --inline is required")),
        }
    }
}

fn emit(out: Option<&Path>, body: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, body).map_err(|e| Failure::io(path, e)),
        None => io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| Failure::io(Path::new("<stdout>"), e)),
    }
}

fn measures(input: &Input, out: Option<&Path>, search: &SearchArgs) -> Result<(), Failure> {
    let cfg = search.resolve()?;
    let rho = StateSpec::parse(&input.text()?)?.build()?;
    let report = full_report(&rho, &cfg)?;
    let mut body = serde_json::to_string_pretty(&report).expect("report serializes");
    body.push('\n');
    emit(out, &body)
}

const SWEEP_HEADER: [&str; 9] = [
    "param",
    "mmc",
    "correlation_distance",
    "negativity",
    "d1",
    "t1",
    "t2",
    "t3",
    "error",
];

fn sweep_csv(rows: &[SweepRow]) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SWEEP_HEADER).expect("in-memory write");
    for row in rows {
        let mut rec = vec![row.param.to_string()];
        match &row.outcome {
            Ok(r) => {
                let [t1, t2, t3] = r.singular_values;
                rec.extend(
                    [r.mmc, r.correlation_distance, r.negativity, r.d1, t1, t2, t3]
                        .map(|v| v.to_string()),
                );
                rec.push(String::new());
            }
            Err(msg) => {
                rec.extend(std::iter::repeat_n(String::new(), 7));
                rec.push(msg.clone());
            }
        }
        w.write_record(&rec).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

fn sweep(input: &Input, out: Option<&Path>, search: &SearchArgs) -> Result<(), Failure> {
    let cfg = search.resolve()?;
    let spec = SweepSpec::parse(&input.text()?)?;
    let rows = run_sweep(&spec, &cfg)?;
    let body = String::from_utf8(sweep_csv(&rows)).expect("ascii output");
    emit(out, &body)
}

fn verify_cmd(filter: Option<String>, search: &SearchArgs, tol_scale: f64) -> Result<(), Failure> {
    let cfg = search.resolve()?;
    if !(tol_scale >= 0.0) {
        return Err(Failure::parse(format!("--tol-scale {tol_scale} must be non-negative")));
    }
    let opts = VerifyOptions {
        search: cfg,
        sweep_search: SearchConfig {
            seed: cfg.seed,
            ..SearchConfig::minimal()
        },
        seed: cfg.seed,
        filter,
        tolerances: Tolerances::default().scaled(tol_scale),
    };
    let report = verify::run(&opts);
    let mut stdout = io::stdout().lock();
    for r in &report.results {
        let _ = writeln!(stdout, "{r}");
    }
    for o in &report.observations {
        let _ = writeln!(stdout, "{o}");
    }
    let failed = report.failures();
    let _ = writeln!(
        stdout,
        "{} checks, {} passed, {} failed",
        report.results.len(),
        report.results.len() - failed,
        failed
    );
    if report.results.is_empty() && report.observations.is_empty() {
        return Err(Failure::parse("no check matches the filter"));
    }
    if failed > 0 {
        return Err(Failure {
            code: 4,
            message: format!("{failed} check(s) failed"),
        });
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Measures { input, out, search } => measures(input, out.as_deref(), search),
        Command::Sweep { input, out, search } => sweep(input, out.as_deref(), search),
        Command::Verify {
            filter,
            search,
            tol_scale,
        } => verify_cmd(filter.clone(), search, *tol_scale),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("mmcorr: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
