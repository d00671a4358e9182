pub mod cache;
pub mod commands;
pub mod document;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use log::error;

pub use commands::{run, Cli, Outcome};

pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_USAGE: u8 = 1;

/// Parses arguments, runs the command and writes the document.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            error!("cannot configure {t} threads: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let text = outcome.doc.render(cli.format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    match outcome.mismatch {
        Some(m) => {
            eprintln!("verification mismatch: {m}");
            ExitCode::from(EXIT_MISMATCH)
        }
        None => ExitCode::SUCCESS,
    }
}
