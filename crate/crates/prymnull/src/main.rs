use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(prymnull::cli::run(std::env::args()) as u8)
}
