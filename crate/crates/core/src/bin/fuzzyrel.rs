use std::io::{self, IsTerminal};

fn main() {
    let stdin = io::stdin();
    let prompt = stdin.is_terminal();
    let mut io = fuzzyrel::cli::Io {
        stdin: &mut stdin.lock(),
        stdout: &mut io::stdout().lock(),
        stderr: &mut io::stderr(),
        prompt,
    };
    std::process::exit(fuzzyrel::cli::run(std::env::args_os(), &mut io));
}
