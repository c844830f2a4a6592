use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qfragile::cli::{self, CliError, Format};

#[derive(Parser)]
#[command(name = "qfragile", version, about = "Fragility of multiqubit entanglement under particle loss")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Write results to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Numerical tolerance (negativity threshold, or oracle tolerance with --verify).
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// RNG seed for random-sweep.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Rescale non-normalized input states instead of rejecting them.
    #[arg(long, global = true)]
    renormalize: bool,
    /// Re-check results against independent computations.
    #[arg(long, global = true)]
    verify: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Per-qubit fragility, canonical form and GHZ-class operation.
    Analyze {
        state: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Majorana points, polygon test and symmetric fragile form.
    Majorana {
        state: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Determinant and negativity of the two-qubit reduction of the Dicke family.
    DickeSweep {
        #[arg(long = "n", value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long = "k", value_delimiter = ',', required = true)]
        k: Vec<usize>,
        #[arg(long, default_value_t = 0.0)]
        u_min: f64,
        #[arg(long, default_value_t = 3.0)]
        u_max: f64,
        #[arg(long, default_value_t = 0.05)]
        u_step: f64,
    },
    /// Fragility over the mu plane of the four-qubit family.
    MuScan {
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long, default_value_t = 201)]
        re_points: usize,
        #[arg(long, default_value_t = 201)]
        im_points: usize,
    },
    /// Certified robustness of Haar-random states against losing t qubits.
    RandomSweep {
        #[arg(long = "n")]
        n: usize,
        #[arg(long = "t", value_delimiter = ',', required = true)]
        t: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let g = &cli.global;
    let text = match cli.command {
        Command::Analyze { state, format } => {
            let s = cli::load(&state, g.renormalize)?;
            let out = cli::analyze(&s, format.into())?;
            if g.verify {
                cli::verify_analysis(&s, g.tolerance.unwrap_or(1e-8))?;
            }
            out
        }
        Command::Majorana { state, format } => {
            let s = cli::load(&state, g.renormalize)?;
            cli::majorana(&s, format.into())?
        }
        Command::DickeSweep { n, k, u_min, u_max, u_step } => cli::dicke_sweep(&cli::DickeSweep {
            n,
            k,
            u: cli::grid(u_min, u_max, u_step)?,
            verify: g.verify,
            verify_tolerance: g.tolerance.unwrap_or(cli::DEFAULT_VERIFY_TOL),
        })?,
        Command::MuScan { t, re_points, im_points } => cli::mu_scan(&cli::MuScan {
            t,
            re_points,
            im_points,
            threshold: g.tolerance.unwrap_or(cli::DEFAULT_WITNESS_TOL),
            ..Default::default()
        })?,
        Command::RandomSweep { n, t, samples } => cli::random_sweep(&cli::RandomSweep {
            n,
            t,
            samples,
            seed: g.seed,
            threshold: g.tolerance.unwrap_or(cli::DEFAULT_WITNESS_TOL),
        })?,
    };
    cli::emit(g.output.as_deref(), &text)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
