//! Command-line front end for the `beurling` library.
//!
//! [`run`] parses arguments, dispatches to the library and renders a
//! [`ReportEnvelope`]. Exit codes: 0 success, 1 numerical failure (quadrature
//! or truncation not converged), 2 validation error, 3 inconclusive verdict
//! under `--strict`.

mod commands;
pub mod parse;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
pub use report::ReportEnvelope;

#[derive(Parser, Debug)]
#[command(name = "beurling", version, about = "Spectra of weighted Fourier algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Exit with code 3 when the verdict is inconclusive.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Worker threads for data-parallel sweeps (0 = all cores).
    #[arg(long, global = true, env = "BEURLING_JOBS", default_value_t = 1)]
    pub jobs: usize,
    /// Seed recorded in the report; every computation is deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Tolerance on |det| = 1 for SU(n) points.
    #[arg(long, global = true, default_value_t = 1e-3)]
    pub det_tol: f64,
    /// Half-width of the inconclusive band for numeric sweeps.
    #[arg(long, global = true, default_value_t = 1e-3)]
    pub band: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Semistandard tableaux of an SU(n) highest weight.
    Tableaux(commands::TableauxArgs),
    /// Norm of the holomorphically extended representation at a diagonal point.
    Norm(commands::NormArgs),
    /// Sub-multiplicativity and growth checks for a weight.
    WeightCheck(commands::WeightCheckArgs),
    /// Spectrum membership of a point of the complexified group.
    Spectrum(commands::SpectrumArgs),
    /// Tensor product and branching rules.
    Fusion(commands::FusionArgs),
    /// Truncated Heisenberg group Fourier transform of a Gaussian test function.
    Fourier(commands::FourierArgs),
    /// Quasianalyticity and Shilov radii of an abelian weight.
    Regularity(commands::RegularityArgs),
}

/// Exit code, standard output and standard error of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub(crate) enum Failure {
    Validation(String),
    Numerical(String),
}

impl From<beurling::Error> for Failure {
    fn from(e: beurling::Error) -> Self {
        use beurling::Error::*;
        match e {
            GridTooCoarse { .. } | WindowTooSmall { .. } => Failure::Numerical(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Validation(e)
    }
}

/// Parsed inputs and the result tree, plus whether the headline verdict is
/// inconclusive.
pub(crate) struct Computed {
    pub inputs: serde_json::Value,
    pub result: serde_json::Value,
    pub inconclusive: bool,
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.global.jobs).build() {
        Ok(p) => p,
        Err(e) => return failure(2, format!("cannot start worker pool: {e}")),
    };
    match pool.install(|| commands::dispatch(&cli)) {
        Ok(c) => {
            let env = ReportEnvelope::new(echo, c.inputs, c.result, cli.global.seed);
            let stdout = match cli.global.format {
                Format::Json => env.to_json(),
                Format::Csv => env.to_csv(),
            };
            let code = if cli.global.strict && c.inconclusive { 3 } else { 0 };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(Failure::Validation(m)) => failure(2, m),
        Err(Failure::Numerical(m)) => failure(1, m),
    }
}

fn failure(code: i32, message: String) -> Outcome {
    Outcome {
        code,
        stdout: String::new(),
        stderr: format!("error: {message}\n"),
    }
}
