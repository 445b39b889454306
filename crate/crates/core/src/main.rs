fn main() {
    std::process::exit(enhanced_covers::cli::main_with_args(std::env::args_os()));
}
