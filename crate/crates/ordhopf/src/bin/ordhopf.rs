fn main() {
    std::process::exit(ordhopf::cli::main_with_args(std::env::args_os()));
}
