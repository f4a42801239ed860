use std::collections::BTreeMap;

use super::{emu_expansion, zmu_expansion, FockVector, GradedMatrix};
use crate::combinatorics::{Multicharge, Multipartition, Regime};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::roots::Block;

/// The canonical basis `{[P^mu]}` of one block.
#[derive(Debug, Clone)]
pub struct CanonicalBasis {
    pub regime: Regime,
    /// `[P^mu]` expanded in the standard basis.
    pub basis: BTreeMap<Multipartition, FockVector>,
    /// `D[lambda][mu]`, the coefficient of `[Delta^lambda]` in `[P^mu]`;
    /// rows and columns ascend in the total order.
    pub matrix: GradedMatrix,
    /// Entry `[nu][mu]` is the multiplicity `p` with `[Z^mu] = sum_nu p [P^nu]`.
    pub summands: GradedMatrix,
}

/// The twisted tilting basis `{[T_mu]}` of one block.
#[derive(Debug, Clone)]
pub struct TiltingBasis {
    pub regime: Regime,
    /// `[T_mu]` expanded in the standard basis.
    pub basis: BTreeMap<Multipartition, FockVector>,
    /// Entry `[lambda][mu]` is the coefficient of `[Delta^lambda]` in `[T_mu]`.
    pub matrix: GradedMatrix,
    /// Entry `[nu][mu]` is the multiplicity `p` with `[E^mu] = sum_nu p [T_nu]`.
    pub summands: GradedMatrix,
}

#[derive(Clone, Copy)]
enum Side {
    /// Strip while some off-diagonal coefficient has `mindeg <= 0`.
    Canonical,
    /// Strip while some off-diagonal coefficient has `maxdeg >= 0`.
    Tilting,
}

impl Side {
    /// Distance of `f` from the accepted lattice, as a degree `d` with
    /// `d <= 0` meaning "must strip"; the degree to strip is `exponent(d)`.
    fn key(self, f: &LaurentPoly) -> i64 {
        match self {
            Side::Canonical => f.mindeg().expect("nonzero"),
            Side::Tilting => -f.maxdeg().expect("nonzero"),
        }
    }

    fn exponent(self, key: i64) -> i64 {
        match self {
            Side::Canonical => key,
            Side::Tilting => -key,
        }
    }
}

struct Straightened {
    basis: BTreeMap<Multipartition, FockVector>,
    matrix: GradedMatrix,
    summands: GradedMatrix,
}

fn straighten<F>(block: &Block, mc: &Multicharge, side: Side, expand: F) -> Result<Straightened>
where
    F: Fn(&Multipartition, &Multicharge) -> Result<FockVector>,
{
    mc.require_standing_assumption(block.size())?;
    let ascending: Vec<Multipartition> = block.ascending().cloned().collect();
    let order: Vec<&Multipartition> = match side {
        Side::Canonical => block.members.iter().collect(),
        Side::Tilting => ascending.iter().collect(),
    };
    let mut basis: BTreeMap<Multipartition, FockVector> = BTreeMap::new();
    let mut summands = GradedMatrix::identity(ascending.clone());

    for mu in order {
        let mut v = expand(mu, mc)?;
        if !v.has_nonnegative_coeffs() {
            return Err(violation(mu, mu, "expansion has a negative coefficient"));
        }
        let mut strips: BTreeMap<Multipartition, LaurentPoly> = BTreeMap::new();
        loop {
            let mut target: Option<(i64, &Multipartition)> = None;
            for (nu, f) in v.iter() {
                if nu == mu {
                    continue;
                }
                let key = side.key(f);
                if key > 0 {
                    continue;
                }
                // Ties go to the later (more dominant) multipartition.
                if target.is_none_or(|(best, _)| key <= best) {
                    target = Some((key, nu));
                }
            }
            let Some((key, nu)) = target else { break };
            let nu = nu.clone();
            let d = side.exponent(key);
            let c = v.coeff(&nu).coeff(d);
            let amount = if d == 0 {
                LaurentPoly::monomial(c, 0)
            } else {
                LaurentPoly::from_terms([(d, c.clone()), (-d, c)])
            };
            let known = basis.get(&nu).ok_or_else(|| {
                violation(&nu, mu, "strip against a basis vector not yet computed")
            })?;
            v.sub_scaled(&amount, known);
            if let Some((lambda, f)) = v.iter().find(|(_, f)| !f.has_nonnegative_coeffs()) {
                return Err(violation(
                    lambda,
                    mu,
                    &format!("coefficient {f} after stripping {amount} times the vector of {nu}"),
                ));
            }
            *strips.entry(nu).or_default() += &amount;
        }
        if !v.coeff(mu).is_one() {
            return Err(violation(mu, mu, "diagonal coefficient is not 1"));
        }
        for (nu, p) in strips {
            summands.set(&nu, mu, p)?;
        }
        basis.insert(mu.clone(), v);
    }

    let matrix = GradedMatrix::from_fn(ascending.clone(), ascending, |lambda, mu| {
        basis[mu].coeff(lambda)
    });
    Ok(Straightened {
        basis,
        matrix,
        summands,
    })
}

fn violation(row: &Multipartition, col: &Multipartition, detail: &str) -> Error {
    Error::PositivityViolation {
        row: row.to_string(),
        col: col.to_string(),
        detail: detail.to_string(),
    }
}

/// Computes `[P^mu]` for every `mu` in the block by stripping bar-invariant
/// minimal-degree multiples of known canonical basis vectors from `[Z^mu]`,
/// working down from the top of the block.
pub fn straighten_canonical(block: &Block, mc: &Multicharge) -> Result<CanonicalBasis> {
    let s = straighten(block, mc, Side::Canonical, zmu_expansion)?;
    Ok(CanonicalBasis {
        regime: mc.regime(block.size()),
        basis: s.basis,
        matrix: s.matrix,
        summands: s.summands,
    })
}

/// Computes `[T_mu]` for every `mu` in the block by the mirror-image
/// procedure applied to `[E^mu]`, working up from the bottom of the block.
/// Each `[T_mu]` is `[Delta^mu]` plus terms in `q^-1 N[q^-1]`.
pub fn straighten_tilting(block: &Block, mc: &Multicharge) -> Result<TiltingBasis> {
    let s = straighten(block, mc, Side::Tilting, emu_expansion)?;
    Ok(TiltingBasis {
        regime: mc.regime(block.size()),
        basis: s.basis,
        matrix: s.matrix,
        summands: s.summands,
    })
}
