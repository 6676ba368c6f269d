use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = monomial_koszul_cli::run_command(std::env::args_os());
    if code == monomial_koszul_cli::EXIT_OK {
        print!("{out}");
    } else {
        eprint!("{out}");
    }
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}
