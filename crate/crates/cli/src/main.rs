use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use hookgame_cli::{run, Cli, Failure};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let stdin = io::stdin().lock();
    let result = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(file) => {
                let mut w = BufWriter::new(file);
                run(&cli, stdin, &mut w).and_then(|()| w.flush().map_err(Failure::from))
            }
            Err(e) => Err(Failure::from(anyhow::anyhow!("cannot create {}: {e}", path.display()))),
        },
        None => run(&cli, stdin, &mut io::stdout().lock()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code as u8)
        }
    }
}
