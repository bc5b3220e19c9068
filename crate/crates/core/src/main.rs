fn main() {
    std::process::exit(zetaw::cli::run(std::env::args_os()));
}
