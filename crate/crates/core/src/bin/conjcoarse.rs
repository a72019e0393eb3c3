fn main() {
    std::process::exit(conjcoarse::cli::main_with_args(std::env::args_os()));
}
