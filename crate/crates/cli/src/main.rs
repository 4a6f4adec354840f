use clap::Parser;

use madness_cli::{exit_code, run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((stdout, code)) => {
            print!("{stdout}");
            std::process::exit(code);
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(exit_code(&err));
        }
    }
}
