use std::io::Write;
use std::panic;
use std::process::ExitCode;

use cadorder::cli::{run, EXIT_INTERNAL};

fn main() -> ExitCode {
    let mut out = String::new();
    let code = panic::catch_unwind(panic::AssertUnwindSafe(|| run(std::env::args_os(), &mut out))).unwrap_or(EXIT_INTERNAL);
    let _ = std::io::stdout().write_all(out.as_bytes());
    ExitCode::from(code as u8)
}
