use std::process::ExitCode;

fn main() -> ExitCode {
    let report = colorsuper_cli::run(std::env::args_os().skip(1));
    if report.exit_code == colorsuper_cli::EXIT_USAGE || report.command.is_empty() {
        if let Some(c) = report.check_named("usage") {
            eprintln!("{}", c.detail.as_str().unwrap_or_default());
            if report.exit_code == colorsuper_cli::EXIT_PASS {
                return ExitCode::SUCCESS;
            }
        }
    }
    println!("{}", report.to_pretty_string());
    ExitCode::from(report.exit_code as u8)
}
