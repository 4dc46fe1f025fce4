fn main() {
    std::process::exit(dgcluster::cli::run(std::env::args_os()));
}
