use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use eckardt::{run, summary, Cli, Status};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are input errors; help and version succeed
            return ExitCode::from(if e.use_stderr() { Status::InputError as u8 } else { 0 });
        }
    };
    let doc = match run(&cli) {
        Ok(doc) => doc,
        Err(failure) => {
            eprintln!("error: {failure}");
            return ExitCode::from(failure.status() as u8);
        }
    };
    let json = doc.to_json();
    match cli.common.json.as_deref() {
        Some(path) if path.as_os_str() == "-" => {
            let _ = std::io::stdout().write_all(json.as_bytes());
        }
        Some(path) => {
            print!("{}", summary(&doc));
            if let Err(e) = std::fs::write(path, json) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(Status::InputError as u8);
            }
        }
        None => print!("{}", summary(&doc)),
    }
    ExitCode::SUCCESS
}
