// Drives the command-line front end in process and prints a CSV report.

use charsum::cli::{run, EXIT_OK};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["charsum", "scan-primitive", "--field", "3,1,2", "--dims", "1", "--format", "csv"];
    let code = run(args, &mut out, &mut err);
    print!("{}", String::from_utf8(out)?);
    eprint!("{}", String::from_utf8(err)?);
    if code != EXIT_OK {
        return Err(format!("exit code {code}").into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
