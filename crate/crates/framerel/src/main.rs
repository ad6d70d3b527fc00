fn main() {
    std::process::exit(framerel::cli::main());
}
