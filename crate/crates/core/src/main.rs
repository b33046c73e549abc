fn main() {
    std::process::exit(partition_engine::cli::run(std::env::args_os()));
}
