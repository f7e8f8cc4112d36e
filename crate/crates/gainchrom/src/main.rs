use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use gainchrom::cli::Cli;
use gainchrom::run::run;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(Into::into)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gainchrom: {}", e);
            ExitCode::from(e.exit_code())
        }
    }
}
