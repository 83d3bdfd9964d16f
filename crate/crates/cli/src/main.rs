use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = edvar_cli::run(std::env::args_os());
    if outcome.report.is_none() && outcome.code != 0 {
        eprint!("{}", outcome.output);
    } else {
        let _ = std::io::stdout().write_all(outcome.output.as_bytes());
    }
    ExitCode::from(outcome.code as u8)
}
