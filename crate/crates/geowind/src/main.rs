fn main() {
    std::process::exit(geowind::run_cli(std::env::args_os()));
}
