fn main() {
    std::process::exit(qracah_cli::run_cli(std::env::args_os().skip(1)));
}
