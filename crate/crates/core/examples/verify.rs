//! Runs every internal consistency check over all blocks of a given size
//! and prints the report as JSON.

use quiver_schur::oracle::verify_all;
use quiver_schur::Multicharge;

fn main() -> quiver_schur::Result<()> {
    let mc = Multicharge::parse("0,0", 0)?;
    let report = verify_all(4, &mc)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report.to_json()).unwrap()
    );
    println!("passed: {}", report.passed);
    Ok(())
}
