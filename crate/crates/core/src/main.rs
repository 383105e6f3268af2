fn main() {
    std::process::exit(bottomforge::cli::run(std::env::args_os()));
}
