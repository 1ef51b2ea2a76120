fn main() {
    std::process::exit(spnil::cli::main_with_args(std::env::args_os()));
}
