fn main() {
    std::process::exit(amgraph::cli::run());
}
