use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use pentaseries_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = run(&cli);
    let mut stdout = std::io::stdout().lock();
    if !output.stdout.is_empty() {
        let _ = writeln!(stdout, "{}", output.stdout);
    }
    let _ = stdout.flush();
    eprint!("{}", output.stderr);
    ExitCode::from(output.code as u8)
}
