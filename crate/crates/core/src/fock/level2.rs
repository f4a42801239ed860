use super::GradedMatrix;
use crate::combinatorics::{
    std_relative, Multicharge, Multipartition, RelativeMode, StandardTableau,
};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::roots::Block;

fn require_level_two(mc: &Multicharge, n: usize) -> Result<()> {
    if mc.level() != 2 {
        return Err(Error::NotLevelTwo(mc.level()));
    }
    mc.require_standing_assumption(n)
}

/// The unique member of `Std^mu(lambda)` at level two, if there is one.
pub fn level2_tableau(
    lambda: &Multipartition,
    mu: &Multipartition,
    mc: &Multicharge,
) -> Result<Option<StandardTableau>> {
    require_level_two(mc, mu.size())?;
    let mut found = std_relative(mu, lambda, RelativeMode::Upper, mc)?;
    if found.len() > 1 {
        return Err(Error::NonUniqueTableau {
            lambda: lambda.to_string(),
            mu: mu.to_string(),
        });
    }
    Ok(found.pop())
}

/// `[Delta^lambda : L^mu]_q` at level two: `q^{deg t - deg t^mu}` when
/// `Std^mu(lambda) = {t}` and zero when it is empty.
pub fn level2_entry(
    lambda: &Multipartition,
    mu: &Multipartition,
    mc: &Multicharge,
) -> Result<LaurentPoly> {
    Ok(match level2_tableau(lambda, mu, mc)? {
        Some(t) => {
            let base = StandardTableau::initial(mu).degree(mc);
            LaurentPoly::monomial(1, t.degree(mc) - base)
        }
        None => LaurentPoly::zero(),
    })
}

/// The graded decomposition matrix of a level-two block by the closed
/// formula, without straightening. Rows and columns ascend.
pub fn level2_decomposition(block: &Block, mc: &Multicharge) -> Result<GradedMatrix> {
    require_level_two(mc, block.size())?;
    let labels: Vec<Multipartition> = block.ascending().cloned().collect();
    let mut d = GradedMatrix::zeros(labels.clone(), labels.clone());
    for mu in &labels {
        for lambda in &labels {
            if lambda.dominates_unchecked(mu) {
                d.set(lambda, mu, level2_entry(lambda, mu, mc)?)?;
            }
        }
    }
    Ok(d)
}
