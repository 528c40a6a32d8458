fn main() {
    std::process::exit(qtails::cli::run(std::env::args_os()));
}
