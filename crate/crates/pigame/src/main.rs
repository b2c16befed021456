use std::process::ExitCode;

fn main() -> ExitCode {
    pigame::cli::main_with(std::env::args_os())
}
