fn main() {
    std::process::exit(rankcrit::cli::run(std::env::args_os()));
}
