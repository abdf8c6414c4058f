use clap::Parser;

fn main() {
    let cli = cgybe_cli::Cli::parse();
    let code = cgybe_cli::run(&cli, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
