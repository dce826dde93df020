use std::process::ExitCode;

use chiforge::commands::{execute, Cli};
use clap::error::ErrorKind;
use clap::Parser;

fn main() -> ExitCode {
    let args: Vec<std::ffi::OsString> = std::env::args_os().collect();
    let result = match Cli::try_parse_from(&args) {
        Ok(cli) => execute(cli, &args),
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(_) => chiforge::run(&args),
    };
    print!("{}", result.render());
    ExitCode::from(result.exit_code() as u8)
}
