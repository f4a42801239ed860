//! The Fock-space layer: expansions of `[Z^mu]` and `[E^mu]` in the standard
//! basis, straightening into canonical and twisted-tilting bases, graded
//! decomposition and Cartan matrices, Kleshchev detection, graded
//! dimensions and the level-two closed formula.

mod dims;
mod expansion;
mod kleshchev;
mod level2;
mod matrix;
mod straighten;

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::combinatorics::Multipartition;
use crate::laurent::LaurentPoly;
use crate::roots::RootVector;

pub use dims::{
    dim_g_lower, dim_g_upper, dim_hecke_block, dim_schur_block, graded_dimensions, BlockDimensions,
    ModuleDimensions,
};
pub use expansion::{emu_expansion, zmu_expansion};
pub use kleshchev::{hecke_submatrix, is_kleshchev};
pub use level2::{level2_decomposition, level2_entry, level2_tableau};
pub use matrix::{cartan_matrix, GradedMatrix, MatrixEntry};
pub use straighten::{straighten_canonical, straighten_tilting, CanonicalBasis, TiltingBasis};

/// A finite combination `sum_lambda f_lambda(q) [Delta^lambda]` inside one
/// block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    block: RootVector,
    entries: BTreeMap<Multipartition, LaurentPoly>,
}

impl FockVector {
    pub fn zero(block: RootVector) -> Self {
        Self {
            block,
            entries: BTreeMap::new(),
        }
    }

    /// The standard basis vector `[Delta^lambda]`.
    pub fn standard(block: RootVector, lambda: Multipartition) -> Self {
        let mut v = Self::zero(block);
        v.entries.insert(lambda, LaurentPoly::one());
        v
    }

    pub fn block(&self) -> &RootVector {
        &self.block
    }

    pub fn coeff(&self, lambda: &Multipartition) -> LaurentPoly {
        self.entries.get(lambda).cloned().unwrap_or_default()
    }

    pub fn get(&self, lambda: &Multipartition) -> Option<&LaurentPoly> {
        self.entries.get(lambda)
    }

    /// Nonzero entries, ascending in the total order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Multipartition, &LaurentPoly)> {
        self.entries.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Multipartition> {
        self.entries.keys()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_to(&mut self, lambda: &Multipartition, f: &LaurentPoly) {
        if f.is_zero() {
            return;
        }
        let slot = self.entries.entry(lambda.clone()).or_default();
        *slot += f;
        if slot.is_zero() {
            self.entries.remove(lambda);
        }
    }

    /// `self -= scale * other`.
    pub fn sub_scaled(&mut self, scale: &LaurentPoly, other: &FockVector) {
        for (lambda, f) in &other.entries {
            let term = -(scale * f);
            self.add_to(lambda, &term);
        }
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, scale: &LaurentPoly, other: &FockVector) {
        for (lambda, f) in &other.entries {
            self.add_to(lambda, &(scale * f));
        }
    }

    /// Applies the bar involution coefficientwise.
    pub fn bar_coefficients(&self) -> Self {
        Self {
            block: self.block.clone(),
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), v.bar()))
                .collect(),
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.entries
            .values()
            .all(LaurentPoly::has_nonnegative_coeffs)
    }
}

impl Serialize for FockVector {
    /// Map from multipartition text to Laurent text.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.entries.len()))?;
        for (k, v) in &self.entries {
            map.serialize_entry(&k.to_string(), &v.to_string())?;
        }
        map.end()
    }
}
