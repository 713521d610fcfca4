fn main() {
    std::process::exit(bhk::cli::run_to_stdout(std::env::args().skip(1)));
}
