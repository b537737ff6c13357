fn main() {
    std::process::exit(quartic::cli::run());
}
