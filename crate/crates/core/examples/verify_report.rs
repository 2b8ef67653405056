// Running a verification check through the command-line entry point.

use lgorbit::cli::run_command;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (code, json) = run_command(&["verify", "ratmap", "--n", "2", "--h", "3,-2,-1", "--samples", "10", "--seed", "7"]);
    println!("exit {code}\n{json}");
    assert_eq!(code, 0);
    let (code, json) = run_command(&["critical", "--n", "1", "--h", "1,-1"]);
    println!("exit {code}\n{json}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
