//! The graded decomposition matrix of a level-three block of defect four,
//! its Cartan matrix, the Kleshchev columns and the LaTeX table.

use quiver_schur::fock::{cartan_matrix, hecke_submatrix, straighten_canonical};
use quiver_schur::roots::block_containing;
use quiver_schur::{Multicharge, Multipartition};

fn main() -> quiver_schur::Result<()> {
    let mc = Multicharge::parse("0,0,0", 0)?;
    let mu: Multipartition = "4,1|1|1".parse()?;
    let block = block_containing(&mu, &mc)?;
    let can = straighten_canonical(&block, &mc)?;

    println!(
        "block {} defect {} ({} members)",
        block.beta,
        block.defect,
        block.members.len()
    );
    println!(
        "[P^{mu}] = {}",
        serde_json::to_string(&can.basis[&mu]).unwrap()
    );
    println!("{}", can.matrix.to_latex());

    let cartan = cartan_matrix(&can.matrix);
    println!("Cartan matrix symmetric: {}", cartan.is_symmetric());
    let hecke = hecke_submatrix(&can.matrix, &mc)?;
    let cols: Vec<String> = hecke.cols().iter().map(|c| c.to_string()).collect();
    println!("Kleshchev columns: {}", cols.join(", "));
    Ok(())
}
