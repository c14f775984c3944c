fn main() {
    std::process::exit(p19free_cli::main_with_args(std::env::args_os()));
}
