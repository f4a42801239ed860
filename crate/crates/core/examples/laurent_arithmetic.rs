//! Exact Laurent polynomial arithmetic: parsing, products, the bar
//! involution and the LaTeX form used in matrix tables.

use quiver_schur::LaurentPoly;

fn main() -> quiver_schur::Result<()> {
    let f: LaurentPoly = "q^-1 + 2 + q".parse()?;
    let g: LaurentPoly = "q^2 - 1".parse()?;
    let product = &f * &g;
    println!("f = {f}");
    println!("g = {g}");
    println!("f * g = {product}");
    println!("bar(g) = {}", g.bar());
    println!("f is bar-invariant: {}", f.is_bar_invariant());
    println!("degrees of f*g: {:?}", product.degree_extrema()?);
    println!("f*g at q = 1: {}", product.eval_at_one());
    println!("LaTeX: {}", product.to_latex());
    Ok(())
}
