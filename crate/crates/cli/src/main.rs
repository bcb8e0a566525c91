use std::io::Write;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("INITFORMS_LOG"))
        .target(env_logger::Target::Stderr)
        .init();
    let outcome = initforms_cli::run(std::env::args_os(), &mut std::io::stdin());
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(outcome.stdout.as_bytes());
    let _ = out.flush();
    std::process::exit(outcome.code);
}
