use std::process::ExitCode;

use cfk_cli::commands::{error_text, run, Cli, Format};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let text = error_text(&e, cli.format);
            if cli.format == Format::Json {
                print!("{text}");
            } else {
                eprint!("{text}");
            }
            ExitCode::from(2)
        }
    }
}
