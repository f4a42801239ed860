use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    enumerate_standard, std_relative_all, Multicharge, Multipartition, RelativeMode,
};
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::roots::{Block, RootVector};

/// Graded dimensions attached to one multipartition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleDimensions {
    #[serde(serialize_with = "as_text")]
    pub mu: Multipartition,
    /// `Dim G^mu`.
    #[serde(serialize_with = "as_text")]
    pub upper: LaurentPoly,
    /// `Dim G_mu`.
    #[serde(serialize_with = "as_text")]
    pub lower: LaurentPoly,
}

/// Graded dimensions of a block and of its modules `G^mu`, `G_mu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDimensions {
    pub beta: RootVector,
    pub defect: i64,
    #[serde(serialize_with = "as_text")]
    pub schur: LaurentPoly,
    #[serde(serialize_with = "as_text")]
    pub hecke: LaurentPoly,
    pub modules: Vec<ModuleDimensions>,
}

fn as_text<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `sum_{t in Std(lambda)} q^{deg t}` or, with `codegree`, `q^{codeg t}`.
fn shape_series(lambda: &Multipartition, mc: &Multicharge, codegree: bool) -> LaurentPoly {
    let mut f = LaurentPoly::zero();
    for t in enumerate_standard(lambda) {
        let (deg, codeg) = t.degree_codegree(mc);
        f.add_term(if codegree { codeg } else { deg }, 1.into());
    }
    f
}

fn relative_series(
    mu: &Multipartition,
    mc: &Multicharge,
    mode: RelativeMode,
) -> BTreeMap<Multipartition, LaurentPoly> {
    let mut by_shape: BTreeMap<Multipartition, LaurentPoly> = BTreeMap::new();
    for s in std_relative_all(mu, mode, mc) {
        let (deg, codeg) = s.degree_codegree(mc);
        let exp = match mode {
            RelativeMode::Upper => deg,
            RelativeMode::Lower => codeg,
        };
        by_shape
            .entry(s.shape().clone())
            .or_default()
            .add_term(exp, 1.into());
    }
    by_shape
}

fn module_dimension(
    mu: &Multipartition,
    mc: &Multicharge,
    mode: RelativeMode,
) -> Result<LaurentPoly> {
    mc.require_standing_assumption(mu.size())?;
    let (deg, codeg) = mode.reference(mu).degree_codegree(mc);
    let (codegree, base) = match mode {
        RelativeMode::Upper => (false, deg),
        RelativeMode::Lower => (true, codeg),
    };
    let mut total = LaurentPoly::zero();
    for (nu, rel) in relative_series(mu, mc, mode) {
        total += &(&rel * &shape_series(&nu, mc, codegree));
    }
    Ok(total.shift(-base))
}

/// `Dim G^mu = q^{-deg t^mu} sum_nu sum_{s in Std^mu(nu), t in Std(nu)} q^{deg s + deg t}`.
pub fn dim_g_upper(mu: &Multipartition, mc: &Multicharge) -> Result<LaurentPoly> {
    module_dimension(mu, mc, RelativeMode::Upper)
}

/// `Dim G_mu = q^{-codeg t_mu} sum_nu sum_{u in Std_mu(nu), v in Std(nu)} q^{codeg u + codeg v}`.
pub fn dim_g_lower(mu: &Multipartition, mc: &Multicharge) -> Result<LaurentPoly> {
    module_dimension(mu, mc, RelativeMode::Lower)
}

/// `sum_lambda (sum_{(mu, s): s in Std^mu(lambda)} q^{deg s - deg t^mu})^2`.
pub fn dim_schur_block(block: &Block, mc: &Multicharge) -> Result<LaurentPoly> {
    mc.require_standing_assumption(block.size())?;
    let mut per_shape: BTreeMap<Multipartition, LaurentPoly> = BTreeMap::new();
    for mu in &block.members {
        let base = mu_degree(mu, mc);
        for (lambda, f) in relative_series(mu, mc, RelativeMode::Upper) {
            *per_shape.entry(lambda).or_default() += &f.shift(-base);
        }
    }
    Ok(sum_of_squares(per_shape.values()))
}

fn mu_degree(mu: &Multipartition, mc: &Multicharge) -> i64 {
    RelativeMode::Upper.reference(mu).degree(mc)
}

/// `sum_lambda (sum_{s in Std(lambda)} q^{deg s})^2`.
pub fn dim_hecke_block(block: &Block, mc: &Multicharge) -> Result<LaurentPoly> {
    mc.require_standing_assumption(block.size())?;
    let series: Vec<LaurentPoly> = block
        .members
        .iter()
        .map(|l| shape_series(l, mc, false))
        .collect();
    Ok(sum_of_squares(series.iter()))
}

fn sum_of_squares<'a>(fs: impl Iterator<Item = &'a LaurentPoly>) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    for f in fs {
        total += &(f * f);
    }
    total
}

/// All graded dimensions of a block, computed in parallel over its members.
pub fn graded_dimensions(block: &Block, mc: &Multicharge) -> Result<BlockDimensions> {
    let modules = block
        .members
        .par_iter()
        .map(|mu| {
            Ok(ModuleDimensions {
                mu: mu.clone(),
                upper: dim_g_upper(mu, mc)?,
                lower: dim_g_lower(mu, mc)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BlockDimensions {
        beta: block.beta.clone(),
        defect: block.defect,
        schur: dim_schur_block(block, mc)?,
        hecke: dim_hecke_block(block, mc)?,
        modules,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{block_containing, blocks};

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn palindromic(f: &LaurentPoly, defect: i64) -> bool {
        f.bar().shift(2 * defect) == *f
    }

    #[test]
    fn single_box() {
        let mc = Multicharge::parse("0,0", 0).unwrap();
        assert_eq!(
            dim_g_upper(&mp("-|1"), &mc).unwrap(),
            "1 + q^2".parse().unwrap()
        );
        assert_eq!(dim_g_upper(&mp("1|-"), &mc).unwrap(), LaurentPoly::q());
    }

    #[test]
    fn self_duality() {
        for (kappa, e) in [
            ("0,0", 0),
            ("0,1", 0),
            ("0,0,0", 0),
            ("0,0", 5),
            ("1,0,0", 6),
        ] {
            let mc = Multicharge::parse(kappa, e).unwrap();
            for b in blocks(4, &mc).unwrap() {
                let dims = graded_dimensions(&b, &mc).unwrap();
                for m in &dims.modules {
                    assert!(palindromic(&m.upper, b.defect), "{} {}", m.mu, m.upper);
                    assert!(palindromic(&m.lower, b.defect), "{} {}", m.mu, m.lower);
                }
                assert!(palindromic(&dims.hecke, b.defect));
            }
        }
    }

    #[test]
    fn boundary_e_equals_n() {
        let mc = Multicharge::parse("0,0", 3).unwrap();
        let mu = mp("1,1,1|-");
        let b = block_containing(&mu, &mc).unwrap();
        assert!(palindromic(&dim_g_upper(&mu, &mc).unwrap(), b.defect));
        let lower = dim_g_lower(&mu, &mc).unwrap();
        assert_eq!(lower, "q + q^2 + q^3 + q".parse().unwrap());
        assert!(!palindromic(&lower, b.defect));
    }

    #[test]
    fn ungraded_specialisations() {
        let mc = Multicharge::parse("0,0,0", 0).unwrap();
        let b = block_containing(&mp("4,1|1|1"), &mc).unwrap();
        let hecke = dim_hecke_block(&b, &mc).unwrap().eval_at_one();
        let direct: usize = b
            .members
            .iter()
            .map(|l| enumerate_standard(l).len().pow(2))
            .sum();
        assert_eq!(hecke, direct.into());
    }
}
