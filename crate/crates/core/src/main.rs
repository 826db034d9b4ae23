fn main() {
    std::process::exit(sparing_core::cli::run(std::env::args_os()));
}
