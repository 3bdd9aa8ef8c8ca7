// Driving the command-line front end in-process.

use std::ffi::OsString;

pub fn run_example() -> epwlab::Result<()> {
    let args = |xs: &[&str]| std::iter::once("epwlab").chain(xs.iter().copied()).map(OsString::from).collect::<Vec<_>>();
    let code = epwlab::cli::main_with_args(args(&["lattice", "--report", "gm6"]));
    assert_eq!(code, 0);
    let code = epwlab::cli::main_with_args(args(&["bbw", "--verify", "b-table"]));
    assert_eq!(code, 0);
    let code = epwlab::cli::main_with_args(args(&["hodge", "--n", "4"]));
    assert_eq!(code, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> epwlab::Result<()> {
    run_example()
}
