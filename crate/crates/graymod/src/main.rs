fn main() {
    std::process::exit(graymod::cli::run());
}
