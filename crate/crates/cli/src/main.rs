use clap::{Parser, Subcommand, ValueEnum};
use oddform_cli::error::CliError;
use oddform_cli::run::{cmd_extremize, cmd_pairing, cmd_ratio, OutputFormat};
use oddform_cli::solve::cmd_solve;
use oddform_cli::verify::{cmd_verify, VerifyConfig};
use oddform_core::analysis::{
    HillclimbParams, PairingParams, PairingVariant, RatioParams, DEFAULT_DENSITY,
    DEFAULT_OVERSAMPLE,
};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exterior calculus on the n-torus and on polynomial forms: exact identity
/// verification, odd-order Hodge system solving, and seeded ratio/pairing
/// experiment batches.
#[derive(Parser)]
#[command(name = "oddform", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Ls,
    Ll,
}

impl From<VariantArg> for PairingVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Ls => PairingVariant::LS,
            VariantArg::Ll => PairingVariant::LL,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the exact identity suites of both backends.
    Verify {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Largest form degree to test (default: n).
        #[arg(long)]
        max_q: Option<i64>,
        /// Largest order parameter m (operator order 2m+1).
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        /// Random draws per identity and degree; 0 is a vacuous pass.
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Solve a Hodge system from a JSON file; writes the solution form and
    /// a solve report.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Div-curl ratio batch: random systems, Sobolev-over-L¹ ratios.
    Ratio {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: i64,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 4)]
        bandwidth: i64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DENSITY)]
        density: f64,
        #[arg(long, default_value_t = DEFAULT_OVERSAMPLE)]
        oversample: u32,
    },
    /// Duality pairing batch: |⟨f,h⟩| against L¹×Lⁿ right-hand sides.
    Pairing {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: i64,
        #[arg(long, default_value_t = 4)]
        bandwidth: i64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Which right-hand side the CSV ratio column uses (both norms are
        /// always recorded).
        #[arg(long, value_enum, default_value_t = VariantArg::Ll)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DENSITY)]
        density: f64,
        #[arg(long, default_value_t = DEFAULT_OVERSAMPLE)]
        oversample: u32,
    },
    /// Hill-climb search for large div-curl ratios.
    Extremize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: i64,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        bandwidth: i64,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DENSITY)]
        density: f64,
        #[arg(long, default_value_t = DEFAULT_OVERSAMPLE)]
        oversample: u32,
    },
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Verify { n, max_q, max_m, trials, seed } => {
            let cfg = VerifyConfig {
                n,
                max_q: max_q.unwrap_or(n as i64),
                max_m,
                trials,
                seed,
            };
            cmd_verify(&cfg, &mut std::io::stdout().lock())
        }
        Command::Solve { input, output } => {
            cmd_solve(&input, &output)?;
            Ok(true)
        }
        Command::Ratio { n, q, m, bandwidth, trials, seed, format, output, density, oversample } => {
            let params = RatioParams { n, q, m, bandwidth, trials, seed, density, oversample };
            cmd_ratio(&params, format.into(), &output)?;
            Ok(true)
        }
        Command::Pairing {
            n,
            q,
            bandwidth,
            trials,
            seed,
            variant,
            format,
            output,
            density,
            oversample,
        } => {
            let params = PairingParams {
                n,
                q,
                bandwidth,
                trials,
                seed,
                variant: variant.into(),
                density,
                oversample,
            };
            cmd_pairing(&params, format.into(), &output)?;
            Ok(true)
        }
        Command::Extremize {
            n,
            q,
            m,
            bandwidth,
            steps,
            seed,
            format,
            output,
            density,
            oversample,
        } => {
            let params =
                HillclimbParams { n, q, m, bandwidth, steps, seed, density, oversample };
            cmd_extremize(&params, format.into(), &output)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
