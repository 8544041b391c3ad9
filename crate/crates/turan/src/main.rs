fn main() {
    std::process::exit(turan::cli::run(std::env::args_os()));
}
