use std::process::ExitCode;

use clap::Parser;
use keller::cli::{run, Cli, Output};
use keller::ExitStatus;

fn main() -> ExitCode {
    // clap exits with 2 on usage errors and 0 for --help / --version
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let status = match run(
        &cli.command,
        Output {
            out: &mut stdout.lock(),
            err: &mut stderr.lock(),
        },
    ) {
        Ok(status) => status,
        Err(e) => {
            let status = e.status();
            if status == ExitStatus::Contradiction {
                eprintln!("THEOREM CONTRADICTION: {e}");
            } else {
                eprintln!("error: {e}");
            }
            status
        }
    };
    ExitCode::from(status.code() as u8)
}
