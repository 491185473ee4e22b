fn main() {
    std::process::exit(binzeros::cli::run());
}
