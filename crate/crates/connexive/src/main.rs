fn main() {
    std::process::exit(connexive::cli_main());
}
