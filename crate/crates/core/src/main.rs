fn main() -> std::process::ExitCode {
    chainres::cli::run(std::env::args_os())
}
