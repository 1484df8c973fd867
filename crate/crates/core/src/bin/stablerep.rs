fn main() {
    std::process::exit(stablerep::cli::main());
}
