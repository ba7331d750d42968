use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let env_order = std::env::var(nabla_lmo::ORDER_ENV).ok();
    let out = nabla_lmo::run(std::env::args_os(), env_order.as_deref());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
