fn main() {
    std::process::exit(popav::cli::main_entry(std::env::args_os()));
}
