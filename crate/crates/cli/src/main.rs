fn main() {
    std::process::exit(pyramid_cli::run(std::env::args_os()));
}
