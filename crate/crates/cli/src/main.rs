fn main() {
    std::process::exit(circum_cli::main_with_std_streams());
}
