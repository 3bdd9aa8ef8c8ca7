fn main() { std::process::exit(epwlab::cli::main_with_args(std::env::args_os())) }
