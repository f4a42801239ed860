//! Splits the multipartitions of `n` into blocks and reports each block's
//! root vector and defect.

use quiver_schur::roots::blocks;
use quiver_schur::Multicharge;

fn main() -> quiver_schur::Result<()> {
    let mc = Multicharge::parse("0,1", 0)?;
    for b in blocks(4, &mc)? {
        let members: Vec<String> = b.ascending().map(|m| m.to_string()).collect();
        println!(
            "{:<24} defect {}  {}",
            b.beta.to_string(),
            b.defect,
            members.join(" ")
        );
    }
    Ok(())
}
