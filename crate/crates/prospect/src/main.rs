fn main() {
    std::process::exit(prospect::cli::run());
}
