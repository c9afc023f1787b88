fn main() -> std::process::ExitCode {
    ilth::cli::main_entry()
}
