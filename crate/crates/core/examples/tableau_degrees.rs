//! Degree and codegree of standard tableaux, and the relative tableau sets
//! that drive the Fock-space expansions.

use quiver_schur::combinatorics::{std_relative, RelativeMode};
use quiver_schur::{Multicharge, Multipartition, StandardTableau};

fn main() -> quiver_schur::Result<()> {
    let mc = Multicharge::parse("0,0,0", 0)?;
    let mu: Multipartition = "1|2,1|2^2".parse()?;
    let t = StandardTableau::from_rows(&[
        vec![vec![1, 6], vec![7]],
        vec![vec![2, 3], vec![4, 8]],
        vec![vec![5]],
    ])?;
    let reference = StandardTableau::initial(&mu);

    println!("t = {t}, shape {}", t.shape());
    println!("residues {:?}", t.residue_sequence(&mc));
    println!("deg t = {}, codeg t = {}", t.degree(&mc), t.codegree(&mc));
    println!("t^mu = {reference}, deg {}", reference.degree(&mc));

    let upper = std_relative(&mu, t.shape(), RelativeMode::Upper, &mc)?;
    println!("Std^mu({}) has {} tableaux:", t.shape(), upper.len());
    for s in upper {
        println!("  {s}  deg {}", s.degree(&mc));
    }
    Ok(())
}
