fn main() {
    std::process::exit(rainbow_mantel::cli::run(std::env::args_os()));
}
