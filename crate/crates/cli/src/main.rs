use clap::Parser;
use entangle_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(&cli) {
        eprintln!("entangle: {e}");
        std::process::exit(e.exit_code());
    }
}
