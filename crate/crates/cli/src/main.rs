use clap::Parser;
use comexp_cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let code = match execute(
        &cli,
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
    ) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    std::process::exit(code);
}
