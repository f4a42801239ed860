//! Graded dimensions of the modules of a block and of the Schur and Hecke
//! blocks themselves.

use quiver_schur::fock::graded_dimensions;
use quiver_schur::roots::block_containing;
use quiver_schur::{Multicharge, Multipartition};

fn main() -> quiver_schur::Result<()> {
    let mc = Multicharge::parse("0,0", 0)?;
    let mu: Multipartition = "2|1".parse()?;
    let dims = graded_dimensions(&block_containing(&mu, &mc)?, &mc)?;
    println!("block {} defect {}", dims.beta, dims.defect);
    println!("schur block: {}", dims.schur);
    println!("hecke block: {}", dims.hecke);
    for m in &dims.modules {
        println!(
            "  {:<10} upper {:<24} lower {}",
            m.mu.to_string(),
            m.upper.to_string(),
            m.lower
        );
    }
    Ok(())
}
