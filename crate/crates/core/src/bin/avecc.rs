fn main() {
    std::process::exit(avecc::cli::main_with_std());
}
