use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(e) = leibniz_lab::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let out = leibniz_lab::run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
