use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lur_cli::{cmd_noise, cmd_optimize, cmd_state, cmd_sweep, cmd_verify, StateFormat};

#[derive(Parser)]
#[command(name = "lur", version, about = "Local uncertainty violation by 3x3 bound entangled states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run the invariant suite; exit 0 iff every check passes.
    Verify {
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Write the C_LUR(a) curve and diagnostics as CSV.
    Sweep {
        #[arg(long, default_value_t = 0.0)]
        a_min: f64,
        #[arg(long, default_value_t = 1.0)]
        a_max: f64,
        #[arg(long, default_value_t = 1001)]
        steps: usize,
        #[arg(long, default_value_t = 0.0)]
        p_noise: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Locate the maximum of C_LUR(a).
    Optimize {
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Print the 9x9 density matrix.
    State {
        #[arg(long)]
        a: f64,
        #[arg(long, default_value_t = 0.0)]
        p_noise: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Noise threshold and the violation flip across it.
    Noise {
        #[arg(long)]
        a: f64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut stdout = io::stdout().lock();
    let exit = match cli.command {
        Command::Verify { tolerance, seed } => cmd_verify(&mut stdout, tolerance, seed),
        Command::Sweep { a_min, a_max, steps, p_noise, out } => {
            cmd_sweep(&mut io::stderr(), a_min, a_max, steps, p_noise, &out)
        }
        Command::Optimize { tol } => cmd_optimize(&mut stdout, tol),
        Command::State { a, p_noise, format } => {
            let format = match format {
                Format::Csv => StateFormat::Csv,
                Format::Json => StateFormat::Json,
            };
            cmd_state(&mut stdout, a, p_noise, format)
        }
        Command::Noise { a } => cmd_noise(&mut stdout, a),
    };
    ExitCode::from(exit.code() as u8)
}
