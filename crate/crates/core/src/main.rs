fn main() {
    std::process::exit(feasichar::cli::run(std::env::args_os()));
}
