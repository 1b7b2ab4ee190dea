fn main() -> std::process::ExitCode {
    spheretile::cli::main()
}
