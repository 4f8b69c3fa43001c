mod commands;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bqalg::numeric::Backend;

use commands::CliError;

/// Biquaternion divisors of zero, idempotents and nilpotents.
///
/// Every command writes JSON lines to standard output. Expressions are read
/// from the positional arguments, or one per line from standard input when
/// none are given.
#[derive(Debug, Parser)]
#[command(name = "bqalg", version)]
struct Cli {
    /// Scalar backend; by default exact, or approx when the input has decimals.
    #[arg(long, global = true, value_enum)]
    backend: Option<BackendArg>,

    /// Zero-test epsilon for the approx backend (default 1e-9).
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    /// Treat every input as a JSON-form document instead of auto-detecting.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BackendArg {
    Exact,
    Approx,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Approx => Backend::Approx,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify each input and report the divisor-of-zero evidence.
    Classify { inputs: Vec<String> },
    /// Emit seeded random structured biquaternions.
    Generate {
        #[arg(value_enum, default_value = "zero-divisor")]
        kind: commands::Kind,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Apply an algebra operation.
    Compute {
        #[arg(value_enum)]
        op: commands::Op,
        operands: Vec<String>,
    },
    /// Decompose divisors of zero into scale * idempotent or a nilpotent normal form.
    Normalize { inputs: Vec<String> },
    /// Run a randomized theorem suite (`all` runs every suite).
    Verify {
        theorem: String,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn inputs_or_stdin(inputs: Vec<String>) -> Result<Vec<String>, CliError> {
    if !inputs.is_empty() {
        return Ok(inputs);
    }
    let mut lines = Vec::new();
    for line in io::stdin().lock().lines() {
        let line = line.map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        if !line.trim().is_empty() {
            lines.push(line);
        }
    }
    Ok(lines)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    let opts = commands::Options {
        backend: cli.backend.map(Backend::from),
        tolerance: cli.tolerance,
        json_input: cli.json,
    };
    match cli.command {
        Command::Classify { inputs } => commands::classify(&opts, &inputs_or_stdin(inputs)?, out),
        Command::Generate { kind, count, seed } => commands::generate(&opts, kind, count, seed, out),
        Command::Compute { op, operands } => commands::compute(&opts, op, &inputs_or_stdin(operands)?, out),
        Command::Normalize { inputs } => commands::normalize(&opts, &inputs_or_stdin(inputs)?, out),
        Command::Verify { theorem, trials, seed } => commands::verify(&theorem, trials, seed, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    if let Err(e) = out.flush() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
