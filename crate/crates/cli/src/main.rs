use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use semisplit_cli::args::Cli;
use semisplit_cli::commands;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = commands::run(&cli);
    let text = commands::render(&cli, &report);
    let code = report.exit_code();
    if code == 2 && cli.format == semisplit_cli::Format::Text {
        let _ = std::io::stderr().write_all(text.as_bytes());
    } else {
        let _ = std::io::stdout().write_all(text.as_bytes());
    }
    ExitCode::from(code as u8)
}
