fn main() {
    // failures are reported per case; keep panic text out of the output stream
    std::panic::set_hook(Box::new(|_| {}));
    let code = qlab_cli::run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
