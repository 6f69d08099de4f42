use std::process;

fn main() {
    process::exit(coinbound::cli::run());
}
