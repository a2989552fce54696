fn main() -> std::process::ExitCode {
    grand::cli::main()
}
