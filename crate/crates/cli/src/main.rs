fn main() -> std::process::ExitCode {
    maxplus_sparse_cli::main_entry()
}
