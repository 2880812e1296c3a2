fn main() {
    std::process::exit(ehyper::cli::run(std::env::args().collect()));
}
