//! Binary entry point; all logic lives in [`heronian_frieze::cli`].

fn main() {
    std::process::exit(heronian_frieze::cli::run());
}
