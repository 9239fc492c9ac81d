use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use qcap::cli::{self, exit, ScanConfig};

/// Depolarizing-channel capacity diagnostics.
#[derive(Parser, Debug)]
#[command(name = "qcap", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Scan x for the d-dimensional depolarizing channel and emit CSV.
    ScanDepolarizing {
        #[arg(long = "dim")]
        dim: usize,
        #[arg(long = "x-start")]
        x_start: f64,
        #[arg(long = "x-end")]
        x_end: f64,
        #[arg(long)]
        steps: usize,
        /// Also maximize the one-shot coherent information (slow).
        #[arg(long = "coherent-info")]
        coherent_info: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Evaluate grid points and restarts on one thread.
        #[arg(long)]
        serial: bool,
    },
    /// Check that the anti-degrading map recovers the channel from its complement.
    Verify {
        #[arg(long = "dim")]
        dim: usize,
        #[arg(long)]
        x: f64,
    },
    /// Compose a channel file with depolarizing noise of strength x.
    Contaminate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the partial-transposed Choi spectrum of the depolarizing channel.
    Ppt {
        #[arg(long = "dim")]
        dim: usize,
        #[arg(long)]
        x: f64,
    },
}

fn run(command: Command) -> qcap::Result<i32> {
    match command {
        Command::ScanDepolarizing { dim, x_start, x_end, steps, coherent_info, seed, out, serial } => {
            let cfg = ScanConfig {
                with_coherent_info: coherent_info,
                seed,
                parallel: !serial,
                ..ScanConfig::new(dim, x_start, x_end, steps)
            };
            let csv = cli::scan_to_csv_string(&cfg)?;
            match out {
                Some(path) => std::fs::write(path, csv)?,
                None => std::io::stdout().write_all(csv.as_bytes())?,
            }
            Ok(exit::SUCCESS)
        }
        Command::Verify { dim, x } => {
            let report = cli::verify(dim, x)?;
            print!("{}", report.render());
            Ok(report.exit_code())
        }
        Command::Contaminate { input, x, out } => {
            let ch = cli::contaminate_file(&input, x, &out)?;
            println!(
                "wrote {} ({} -> {}, {} Kraus operators)",
                out.display(),
                ch.dim_in(),
                ch.dim_out(),
                ch.num_kraus()
            );
            Ok(exit::SUCCESS)
        }
        Command::Ppt { dim, x } => {
            print!("{}", cli::ppt_report(dim, x)?.render());
            Ok(exit::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(exit::USAGE as u8);
        }
    };
    let code = match run(args.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qcap: {e}");
            cli::exit_code(&e)
        }
    };
    ExitCode::from(code as u8)
}
