//! Twisted tilting characters and their duality with the decomposition
//! numbers of the conjugate block.

use quiver_schur::fock::{straighten_canonical, straighten_tilting};
use quiver_schur::roots::block_containing;
use quiver_schur::{Multicharge, Multipartition};

fn main() -> quiver_schur::Result<()> {
    let mc = Multicharge::parse("0,0", 0)?;
    let mu: Multipartition = "2,1|-".parse()?;
    let block = block_containing(&mu, &mc)?;
    let tilting = straighten_tilting(&block, &mc)?;

    let dual_mc = mc.conjugate();
    let dual = straighten_canonical(&block.conjugate(&mc), &dual_mc)?;
    for lambda in block.ascending() {
        for nu in block.ascending() {
            let t = tilting.matrix.get(lambda, nu);
            if t.is_zero() {
                continue;
            }
            let d = dual.matrix.get(&lambda.conjugate(), &nu.conjugate());
            println!(
                "[T_{nu} : Delta^{lambda}] = {t}   bar of conjugate d[{}][{}] = {}",
                lambda.conjugate(),
                nu.conjugate(),
                d.bar()
            );
        }
    }
    Ok(())
}
