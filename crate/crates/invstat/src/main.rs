fn main() {
    std::process::exit(invstat::cli::run());
}
