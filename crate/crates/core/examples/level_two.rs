//! Level-two decomposition numbers read off the unique relative tableau,
//! compared against straightening.

use quiver_schur::fock::{level2_decomposition, level2_tableau, straighten_canonical};
use quiver_schur::roots::block_containing;
use quiver_schur::{Multicharge, Multipartition};

fn main() -> quiver_schur::Result<()> {
    let mc = Multicharge::parse("0,1", 0)?;
    let lambda: Multipartition = "5^2,2|1^2".parse()?;
    let mu: Multipartition = "2,1^2|4^2,2".parse()?;
    if let Some(t) = level2_tableau(&lambda, &mu, &mc)? {
        println!("Std^{mu}({lambda}) = {{{t}}}");
    }

    let block = block_containing(&"2,1|2".parse()?, &mc)?;
    let closed = level2_decomposition(&block, &mc)?;
    let straightened = straighten_canonical(&block, &mc)?.matrix;
    println!("{}", closed.to_csv());
    println!(
        "closed formula equals straightening: {}",
        closed == straightened
    );
    Ok(())
}
