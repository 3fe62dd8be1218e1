use std::process::ExitCode;

fn main() -> ExitCode {
    knotlab::cli::main_entry()
}
