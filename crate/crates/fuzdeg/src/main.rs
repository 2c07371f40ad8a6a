fn main() {
    std::process::exit(fuzdeg::cli::run(std::env::args_os()));
}
