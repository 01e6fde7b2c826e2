fn main() {
    std::process::exit(sedmr::cli::main_with_args(std::env::args_os()));
}
