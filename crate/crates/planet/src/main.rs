use clap::Parser;

fn main() {
    let cli = planet::cli::Cli::parse();
    if let Err(err) = planet::cli::run(&cli) {
        eprintln!("error[{}]: {err}", err.code());
        std::process::exit(1);
    }
}
