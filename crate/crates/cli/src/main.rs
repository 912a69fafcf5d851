use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rootcert_cli::commands::{self, CliFailure, CmdOutput, MethodArg, PolynomialInput};

/// Certify whether all zeros of a rational-coefficient polynomial are real
/// and distinct, and realize certified inputs as orthogonal polynomial
/// sequences with recurrence, Jacobi matrix, and discrete measure.
#[derive(Parser)]
#[command(name = "rootcert", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodFlag {
    /// Derivative-Wronskian positivity criterion
    Chamberland,
    /// Classical Sturm root-count oracle
    Sturm,
    /// Run both and cross-check (default)
    Both,
}

impl From<MethodFlag> for MethodArg {
    fn from(m: MethodFlag) -> Self {
        match m {
            MethodFlag::Chamberland => MethodArg::Chamberland,
            MethodFlag::Sturm => MethodArg::Sturm,
            MethodFlag::Both => MethodArg::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide real-and-distinctness and emit a certificate.
    /// Exit codes: 0 = real and distinct, 1 = not, 2 = input error,
    /// 3 = internal disagreement.
    Check {
        /// Polynomial expression in x, e.g. "x^3 - 3*x"
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        /// Ascending coefficient list "c0,c1,..." instead of an expression
        #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
        coeffs: Option<String>,
        #[arg(long, value_enum, default_value_t = MethodFlag::Both)]
        method: MethodFlag,
        /// Machine-readable JSON on stdout
        #[arg(long)]
        json: bool,
        /// Full witness detail for every level
        #[arg(long)]
        witness: bool,
        /// Record wall-clock timings in the document
        #[arg(long)]
        timings: bool,
    },
    /// Print the criterion polynomial Q_j and its positivity certificate.
    Criterion {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
        coeffs: Option<String>,
        /// Level index in 1..=n-1
        #[arg(long = "j")]
        j: usize,
        #[arg(long)]
        json: bool,
    },
    /// Build the three-term recurrence, Favard certificate, Jacobi matrix
    /// and discrete orthogonality measure for a certified input.
    Oprl {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
        coeffs: Option<String>,
        /// Node interval width, exact rational or scientific (e.g. 1e-12)
        #[arg(long, allow_hyphen_values = true)]
        precision: Option<String>,
        #[arg(long)]
        json: bool,
        /// Skip the certification pre-check
        #[arg(long)]
        unchecked: bool,
        /// Record wall-clock timings in the document
        #[arg(long)]
        timings: bool,
    },
    /// Check every polynomial in a file (one per line, '#' comments,
    /// "coeffs:" prefix for coefficient lists) with both methods.
    Batch {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn dispatch(cli: Cli) -> Result<CmdOutput, CliFailure> {
    match cli.command {
        Command::Check { expr, coeffs, method, json, witness, timings } => {
            let input = PolynomialInput::from_args(expr, coeffs)?;
            commands::run_check(&input, method.into(), json, witness, timings)
        }
        Command::Criterion { expr, coeffs, j, json } => {
            let input = PolynomialInput::from_args(expr, coeffs)?;
            commands::run_criterion(&input, j, json)
        }
        Command::Oprl { expr, coeffs, precision, json, unchecked, timings } => {
            let input = PolynomialInput::from_args(expr, coeffs)?;
            commands::run_oprl(&input, precision.as_deref(), json, unchecked, timings)
        }
        Command::Batch { file, json } => commands::run_batch(&file, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code as u8)
        }
    }
}
