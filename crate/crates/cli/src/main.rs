fn main() {
    std::process::exit(omega_cli::run(std::env::args_os()));
}
