fn main() {
    std::process::exit(alextop_cli::run(std::env::args_os()));
}
