fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (code, out) = lgorbit::cli::run_command(&args);
    print!("{out}");
    std::process::exit(code);
}
