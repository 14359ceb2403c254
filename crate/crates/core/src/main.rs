fn main() -> std::process::ExitCode {
    nevlab::cli::main_with_args(std::env::args_os())
}
