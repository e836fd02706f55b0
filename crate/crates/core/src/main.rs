use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, stdout, stderr) = rat_core::cli::run_args(std::env::args_os());
    if !stdout.is_empty() {
        let _ = writeln!(std::io::stdout(), "{stdout}");
    }
    if !stderr.is_empty() {
        let _ = writeln!(std::io::stderr(), "{}", stderr.trim_end());
    }
    ExitCode::from(code as u8)
}
