use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use critballs_cli::args::Cli;
use critballs_cli::run;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let result = run(&cli).and_then(|text| match &cli.global.out {
        Some(path) => std::fs::write(path, text).map_err(Into::into),
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(Into::into),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("critballs: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
