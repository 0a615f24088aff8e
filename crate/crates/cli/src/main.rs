use clap::Parser;

fn main() {
    let cli = bmw_cli::args::Cli::parse();
    let code = bmw_cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
