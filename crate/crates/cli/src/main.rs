use std::io::Write;
use std::process::ExitCode;

use modulus_cli::{emit_report, execute, parse_config, EXIT_USAGE};

fn main() -> ExitCode {
    let cfg = match parse_config(std::env::args_os()) {
        Ok(cfg) => cfg,
        Err(e) => {
            if let Some(clap_err) = e.downcast_ref::<clap::Error>() {
                // Prints help/version to stdout and usage errors to stderr.
                let _ = clap_err.print();
                return ExitCode::from(if clap_err.use_stderr() { EXIT_USAGE } else { 0 });
            }
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let report = match execute(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let text = emit_report(&report, cfg.format);
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(modulus_cli::EXIT_FAIL);
    }
    ExitCode::from(report.exit_code())
}
