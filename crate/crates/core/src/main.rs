fn main() -> std::process::ExitCode {
    darboux::cli::main()
}
