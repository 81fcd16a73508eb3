use std::fs::File;
use std::io::{self, BufReader, IsTerminal};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use solidus::cli::{run_checks, run_lines, CheckOptions, DEFAULT_COUNT};

/// Calculator and axiom checker for external numbers.
#[derive(Parser, Debug)]
#[command(name = "solidus", version)]
struct Args {
    /// Read commands from FILE instead of stdin.
    #[arg(long, value_name = "FILE", conflicts_with = "check")]
    batch: Option<PathBuf>,
    /// Run the check suite and exit.
    #[arg(long)]
    check: bool,
    /// Seed for the generators.
    #[arg(long, requires = "check")]
    seed: Option<u64>,
    /// Samples per check.
    #[arg(long, default_value_t = DEFAULT_COUNT, requires = "check")]
    count: u64,
    /// Run a single check by id.
    #[arg(long, value_name = "ID", requires = "check")]
    only: Option<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.check {
        let opts = CheckOptions {
            seed: args.seed,
            count: args.count,
            only: args.only,
        };
        return match run_checks(&opts) {
            Ok((text, ok)) => {
                println!("{text}");
                if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        };
    }
    let stdout = io::stdout().lock();
    let strict = args.batch.is_some();
    let summary = match &args.batch {
        Some(path) => match File::open(path) {
            Ok(f) => run_lines(BufReader::new(f), stdout, false),
            Err(e) => {
                eprintln!("error: cannot open {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => {
            let stdin = io::stdin();
            let prompt = stdin.is_terminal();
            run_lines(stdin.lock(), stdout, prompt)
        }
    };
    match summary {
        Ok(s) if !strict || (s.errors == 0 && s.failed_checks == 0) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
