use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use symop_cli::{run, Cli};

fn main() -> ExitCode {
    if let Some(n) = std::env::var("SYMOP_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second initialization can only fail if something already built the pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            // a closed pipe downstream is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{}", out.render(cli.format));
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
