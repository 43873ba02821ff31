mod args;
mod commands;
mod input;
mod report;

use clap::Parser;

use args::{Cli, Format};
use report::RunReport;

fn main() {
    let cli = Cli::parse();
    let name = commands::name(&cli.command);
    let report = commands::run(cli.command).unwrap_or_else(|e| RunReport::from_error(name, &e));
    match cli.format {
        Format::Machine => println!("{}", report.machine()),
        Format::Human if report.verdict == report::Verdict::Error => eprint!("{}", report.human()),
        Format::Human => print!("{}", report.human()),
    }
    std::process::exit(report.verdict.exit_code());
}
