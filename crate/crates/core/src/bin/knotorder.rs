fn main() {
    std::process::exit(knotorder::cli::run(std::env::args_os()));
}
