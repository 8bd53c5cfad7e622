use std::path::PathBuf;
use std::process::ExitCode;

use capelli_verify::{registry, run_suite, Params, Report, UsageError};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "capelli", version, about = "Exact verification of Capelli-type identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite.
    Verify {
        suite: String,
        #[arg(long = "N")]
        big_n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long = "K")]
        big_k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the registered suites.
    ListSuites,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
    Text,
}

fn usage(e: UsageError) -> ExitCode {
    eprintln!("capelli: {e}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::ListSuites => {
            for s in registry() {
                println!("{:<18} {}", s.name, s.summary);
            }
            ExitCode::SUCCESS
        }
        Command::Verify { suite, big_n, m, k, big_k, seed, format, out } => {
            let base = match Params::with_env() {
                Ok(p) => p,
                Err(e) => return usage(e),
            };
            let params = Params { big_n, m, k, big_k, seed, ..base };
            let report = match run_suite(&suite, &params) {
                Ok(s) => Report { suites: vec![s], ..Report::default() },
                Err(e) => return usage(e),
            };
            let text = match format {
                Format::Json => report.to_json(),
                Format::Md => report.to_markdown(),
                Format::Text => report.to_text(),
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("capelli: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(report.exit_code() as u8)
        }
    }
}
