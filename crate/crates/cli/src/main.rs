use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use liouville_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    // a closed pipe on stdout is not an error worth reporting
    match run(&cli) {
        Ok(out) => {
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if json {
                let _ = writeln!(std::io::stdout(), "{}", e.to_json());
            } else {
                let _ = writeln!(std::io::stderr(), "error: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
