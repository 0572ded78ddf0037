fn main() {
    std::process::exit(coxforge::cli::cli_main());
}
