use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = char3_cli::run(std::env::args_os().skip(1));
    if outcome.status.code() >= 3 {
        eprint!("{}", outcome.report);
    } else {
        print!("{}", outcome.report);
    }
    ExitCode::from(outcome.status.code() as u8)
}
