use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mdcc_cli::{parse_input, run_command, CheckKind, CliError, Command};

/// Minimal reduced resolutions, Forney tables and structural checks for
/// multidimensional convolutional codes.
#[derive(Debug, Parser)]
#[command(name = "mdcc", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Exit with status 1 when the checked property is false.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Minimal reduced polynomial resolution and invariants of a code.
    Resolve {
        file: PathBuf,
        #[arg(long)]
        hilbert_max: Option<u32>,
    },
    /// Hilbert function of a code for 0 <= d <= max-d.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        max_d: u32,
        /// Also compute the values by truncated linear algebra.
        #[arg(long)]
        oracle: bool,
    },
    /// Test a structural property of a complex.
    Check { property: Property, file: PathBuf },
    /// Observability of a code, with a parity-check matrix or torsion witness.
    Observable {
        file: PathBuf,
        /// Run the per-irreducible exactness test (n = 1) up to this degree.
        #[arg(long)]
        prop3_bound: Option<usize>,
    },
    /// Cross-check a code or complex against truncated linear algebra.
    OracleVerify {
        file: PathBuf,
        #[arg(long)]
        max_d: u32,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Property {
    Pd,
    Reduced,
    Minimal,
    Resolution,
}

fn split(cmd: Cmd) -> (PathBuf, Command) {
    match cmd {
        Cmd::Resolve { file, hilbert_max } => (file, Command::Resolve { hilbert_max }),
        Cmd::Hilbert {
            file,
            max_d,
            oracle,
        } => (file, Command::Hilbert { max_d, oracle }),
        Cmd::Check { property, file } => {
            let kind = match property {
                Property::Pd => CheckKind::Pd,
                Property::Reduced => CheckKind::Reduced,
                Property::Minimal => CheckKind::Minimal,
                Property::Resolution => CheckKind::Resolution,
            };
            (file, Command::Check(kind))
        }
        Cmd::Observable { file, prop3_bound } => (file, Command::Observable { prop3_bound }),
        Cmd::OracleVerify { file, max_d } => (file, Command::OracleVerify { max_d }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (file, command) = split(cli.command);
    let run = || -> Result<mdcc_cli::Report, CliError> {
        let text = std::fs::read_to_string(&file)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", file.display())))?;
        let doc = parse_input(&text)?;
        run_command(&command, &doc)
    };
    let report = match run() {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let text = report.render();
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if cli.strict && report.property == Some(false) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
