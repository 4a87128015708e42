use clap::Parser;
use weil_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let (text, code) = run(&cli);
    if code == 0 || code == 1 {
        println!("{text}");
    } else {
        eprintln!("error: {text}");
    }
    std::process::exit(code);
}
