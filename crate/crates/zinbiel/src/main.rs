fn main() {
    std::process::exit(zinbiel::cli::main_with(std::env::args_os()));
}
