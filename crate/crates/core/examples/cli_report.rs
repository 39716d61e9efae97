//! Drives the command-line front end in-process and prints its JSON report.
//!
//! ```bash
//! cargo run --example cli_report
//! # same as
//! cargo run --bin lambda-check -- --group rational --space x2 --check axiom2 --expect fail
//! ```

use lambda_trees::cli;

fn main() {
    let argv = ["lambda-check", "--group", "rational", "--space", "x2", "--check", "axiom2", "--expect", "fail", "--samples", "100"];
    let code = cli::main_with(argv, &mut std::io::stdout(), &mut std::io::stderr());
    eprintln!("exit status {code}");
}
