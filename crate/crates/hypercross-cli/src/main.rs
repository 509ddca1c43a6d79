use clap::Parser;
use hypercross_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let status = match run(&cli) {
        Ok(status) => status,
        Err(err) => {
            eprintln!("error: {err}");
            err.status
        }
    };
    std::process::exit(status as i32);
}
