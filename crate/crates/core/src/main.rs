fn main() {
    std::process::exit(ionchain::cli::run(std::env::args_os()));
}
