//! `cubic-sums`: compute the cubic binomial sum `S_n = sum C(n,r)^3 2^r`,
//! its exact 3-adic valuation, and the closed-form prediction; inspect the
//! transformed summands; and run the exact verification suites.
//!
//! Exit codes: 0 all requested checks passed, 1 verification failure,
//! 2 usage error, 3 I/O error.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cubic_sums::report::{reports_to_csv, reports_to_json, sweep_to_csv, sweep_to_json};
use cubic_sums::{
    cubic_sum_direct, dominance_report, predicted_valuation, run_all, theorem_report, valuation,
    verify_central_product, verify_dominance, verify_macmahon, verify_subadditivity,
    verify_theorem, Prime, SuiteReport, VerifyConfig,
};

mod output;

#[derive(Parser)]
#[command(
    name = "cubic-sums",
    version,
    about = "Exact 3-adic valuation of the cubic binomial sum S_n = sum_{r=0..n} C(n,r)^3 2^r"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Theorem,
    Macmahon,
    Eq1,
    Dominance,
    Subadditivity,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Compute S_n, its exact 3-adic valuation, and the closed-form prediction
    Compute {
        /// n, an unbounded decimal natural
        n: BigUint,
        /// Report only the closed form; never materializes S_n, so any n works
        #[arg(long)]
        predicted_only: bool,
        /// Print big integers in full regardless of size
        #[arg(long)]
        full_integers: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Write output to PATH instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the transformed summands A_r with exact valuations and proof bounds
    Terms {
        /// n >= 1, decimal
        n: BigUint,
        /// Print big integers in full regardless of size
        #[arg(long)]
        full_integers: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exit 0 only if it reports zero failures
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Sweep start (theorem suite)
        #[arg(long)]
        from: Option<u64>,
        /// Sweep end, inclusive (theorem suite)
        #[arg(long)]
        to: Option<u64>,
        /// Upper bound on n (macmahon and dominance suites)
        #[arg(long)]
        n_max: Option<u64>,
        /// Upper bound on the weights x, y (macmahon suite)
        #[arg(long)]
        xy_max: Option<u64>,
        /// Upper bound on k (eq1 suite)
        #[arg(long)]
        k_max: Option<u64>,
        /// RNG seed for randomized suites (recorded in the report)
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads for the sweeps (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep predicted vs exact valuation, one row per n
    Sweep {
        /// Sweep start, >= 1
        from: BigUint,
        /// Sweep end, inclusive
        to: BigUint,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io { path: String, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io { path, source } => write!(f, "cannot write {path}: {source}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Compute {
            n,
            predicted_only,
            full_integers,
            format,
            out,
        } => cmd_compute(&n, predicted_only, full_integers, format, out.as_deref()),
        Command::Terms {
            n,
            full_integers,
            format,
            out,
        } => cmd_terms(&n, full_integers, format, out.as_deref()),
        Command::Verify {
            suite,
            from,
            to,
            n_max,
            xy_max,
            k_max,
            seed,
            jobs,
            format,
            out,
        } => {
            let mut config = VerifyConfig::default();
            if let Some(from) = from {
                config.theorem_from = from;
            }
            if let Some(to) = to {
                config.theorem_to = to;
            }
            if let Some(n_max) = n_max {
                config.macmahon_n_max = n_max;
                config.dominance_n_max = n_max;
                config.dominance_exact_cutoff = config.dominance_exact_cutoff.min(n_max);
            }
            if let Some(xy_max) = xy_max {
                config.macmahon_xy_max = xy_max;
            }
            if let Some(k_max) = k_max {
                config.eq1_k_max = k_max;
                config.eq1_exact_cutoff = config.eq1_exact_cutoff.min(k_max);
            }
            if let Some(seed) = seed {
                config.seed = seed;
            }
            cmd_verify(suite, &config, jobs, format, out.as_deref())
        }
        Command::Sweep {
            from,
            to,
            jobs,
            format,
            out,
        } => cmd_sweep(&from, &to, jobs, format, out.as_deref()),
    }
}

fn to_word(n: &BigUint, what: &str) -> Result<u64, CliError> {
    n.to_u64().ok_or_else(|| {
        CliError::Usage(format!(
            "{what} = {n} is too large for exact evaluation; use `compute --predicted-only`"
        ))
    })
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("building worker pool")
            .install(f),
        None => f(),
    }
}

fn write_output(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle
                .write_all(text.as_bytes())
                .and_then(|_| handle.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

fn cmd_compute(
    n: &BigUint,
    predicted_only: bool,
    full_integers: bool,
    format: Format,
    out: Option<&Path>,
) -> Result<bool, CliError> {
    let prediction = predicted_valuation(n);
    let exact = if predicted_only {
        None
    } else {
        let n_word = to_word(n, "n")?;
        let sum = cubic_sum_direct(n_word);
        let exact = valuation(&sum, Prime::THREE)
            .finite()
            .expect("S_n is a positive integer");
        Some((sum, exact))
    };
    let passed = exact
        .as_ref()
        .is_none_or(|(_, exact)| *exact == prediction.predicted);
    let text = match format {
        Format::Table => output::compute_table(&prediction, exact.as_ref(), full_integers),
        Format::Csv => output::compute_csv(&prediction, exact.as_ref(), full_integers),
        Format::Json => output::compute_json(&prediction, exact.as_ref(), full_integers),
    };
    write_output(&text, out)?;
    Ok(passed)
}

fn cmd_terms(
    n: &BigUint,
    full_integers: bool,
    format: Format,
    out: Option<&Path>,
) -> Result<bool, CliError> {
    let n_word = to_word(n, "n")?;
    let records = dominance_report(n_word).map_err(|err| CliError::Usage(err.to_string()))?;
    let text = match format {
        Format::Table => output::terms_table(&records, full_integers),
        Format::Csv => output::terms_csv(&records, full_integers),
        Format::Json => output::terms_json(n_word, &records, full_integers),
    };
    write_output(&text, out)?;
    Ok(true)
}

fn cmd_verify(
    suite: Suite,
    config: &VerifyConfig,
    jobs: Option<usize>,
    format: Format,
    out: Option<&Path>,
) -> Result<bool, CliError> {
    if matches!(suite, Suite::Theorem | Suite::All) {
        check_sweep_range(config.theorem_from, config.theorem_to)?;
    }
    let reports: Vec<SuiteReport> = with_pool(jobs, || match suite {
        Suite::Theorem => theorem_report(config.theorem_from, config.theorem_to)
            .map(|report| vec![report]),
        Suite::Macmahon => Ok(vec![verify_macmahon(
            config.macmahon_n_max,
            config.macmahon_xy_max,
        )]),
        Suite::Eq1 => Ok(vec![verify_central_product(
            config.eq1_k_max,
            config.eq1_exact_cutoff,
        )]),
        Suite::Dominance => Ok(vec![verify_dominance(
            config.dominance_n_max,
            config.dominance_exact_cutoff,
        )]),
        Suite::Subadditivity => Ok(vec![verify_subadditivity(
            config.subadditivity_trials,
            &config.subadditivity_magnitude,
            config.subadditivity_m_max,
            config.seed,
        )]),
        Suite::All => run_all(config),
    })
    .map_err(|err| CliError::Usage(err.to_string()))?;

    let text = match format {
        Format::Table => output::reports_table(&reports),
        Format::Csv => reports_to_csv(&reports),
        Format::Json => reports_to_json(&reports),
    };
    write_output(&text, out)?;
    Ok(reports.iter().all(SuiteReport::passed))
}

fn check_sweep_range(from: u64, to: u64) -> Result<(), CliError> {
    if from == 0 || from > to {
        return Err(CliError::Usage(format!(
            "invalid sweep range {from}..={to}; need 1 <= from <= to"
        )));
    }
    Ok(())
}

fn cmd_sweep(
    from: &BigUint,
    to: &BigUint,
    jobs: Option<usize>,
    format: Format,
    out: Option<&Path>,
) -> Result<bool, CliError> {
    let from = to_word(from, "from")?;
    let to = to_word(to, "to")?;
    check_sweep_range(from, to)?;
    let rows = with_pool(jobs, || verify_theorem(from, to))
        .map_err(|err| CliError::Usage(err.to_string()))?;
    let text = match format {
        Format::Table => output::sweep_table(&rows),
        Format::Csv => sweep_to_csv(&rows),
        Format::Json => sweep_to_json(&rows, from, to),
    };
    write_output(&text, out)?;
    Ok(rows.iter().all(|row| row.matched))
}
