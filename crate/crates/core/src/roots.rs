//! Root lattice data: contents, the Cartan pairing of the quiver, defects
//! and the block decomposition of the multipartitions of `n`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_multipartitions, Multicharge, Multipartition, Residue};
use crate::error::{Error, Result};

/// An element `sum_i c_i alpha_i` of the positive root lattice.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    coeffs: BTreeMap<Residue, u64>,
}

impl RootVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Residue, u64)>>(pairs: I) -> Self {
        let mut out = Self::zero();
        for (i, m) in pairs {
            out.add(i, m);
        }
        out
    }

    pub fn add(&mut self, i: Residue, m: u64) {
        if m > 0 {
            *self.coeffs.entry(i).or_default() += m;
        }
    }

    pub fn coeff(&self, i: Residue) -> u64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &BTreeMap<Residue, u64> {
        &self.coeffs
    }

    /// `n`, the sum of the multiplicities.
    pub fn height(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Reduces keys modulo `e` (no-op for `e = 0`).
    pub fn reduced(&self, mc: &Multicharge) -> Self {
        Self::from_pairs(self.coeffs.iter().map(|(&i, &m)| (mc.reduce(i), m)))
    }

    /// `beta'`: residues negated.
    pub fn conjugate(&self, mc: &Multicharge) -> Self {
        Self::from_pairs(self.coeffs.iter().map(|(&i, &m)| (mc.reduce(-i), m)))
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(i, m)| format!("a{i}:{m}"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootVector({self})")
    }
}

impl FromStr for RootVector {
    type Err = Error;

    /// Parses the selector form `a-1:1,a0:3,a1:1`; `0` or an empty string
    /// is the zero vector.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut out = Self::zero();
        if s.is_empty() || s == "0" {
            return Ok(out);
        }
        for item in s.split(',') {
            let bad = || Error::Parse(format!("bad root term {item:?}; expected a<i>:<m>"));
            let item = item.trim();
            let body = item.strip_prefix('a').ok_or_else(bad)?;
            let (i, m) = body.split_once(':').ok_or_else(bad)?;
            let i: Residue = i.trim().parse().map_err(|_| bad())?;
            let m: u64 = m.trim().parse().map_err(|_| bad())?;
            out.add(i, m);
        }
        Ok(out)
    }
}

impl Serialize for RootVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, u64> = self
            .coeffs
            .iter()
            .map(|(i, m)| (i.to_string(), *m))
            .collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let map = BTreeMap::<String, u64>::deserialize(d)?;
        let mut out = Self::zero();
        for (i, m) in map {
            out.add(i.parse().map_err(D::Error::custom)?, m);
        }
        Ok(out)
    }
}

/// The residue multiset of the nodes of `lambda`.
pub fn content(lambda: &Multipartition, mc: &Multicharge) -> RootVector {
    let mut out = RootVector::zero();
    for node in lambda.nodes() {
        out.add(mc.residue(&node), 1);
    }
    out
}

/// `a_ij` for the quiver `Γ_e`.
pub fn cartan_entry(i: Residue, j: Residue, e: u32) -> i64 {
    let e = e as i64;
    if e == 0 {
        return match (i - j).abs() {
            0 => 2,
            1 => -1,
            _ => 0,
        };
    }
    let d = (i - j).rem_euclid(e);
    if d == 0 {
        2
    } else if e == 2 {
        -2
    } else if d == 1 || d == e - 1 {
        -1
    } else {
        0
    }
}

/// `(x, y)`, extended bilinearly from `(alpha_i, alpha_j) = a_ij`.
pub fn root_pairing(x: &RootVector, y: &RootVector, mc: &Multicharge) -> i64 {
    let mut total = 0;
    for (&i, &a) in &x.coeffs {
        for (&j, &b) in &y.coeffs {
            total += a as i64 * b as i64 * cartan_entry(i, j, mc.e());
        }
    }
    total
}

/// `(Lambda, beta)`.
pub fn weight_pairing(mc: &Multicharge, beta: &RootVector) -> i64 {
    beta.coeffs
        .iter()
        .map(|(&i, &m)| m as i64 * mc.weight_pairing(i))
        .sum()
}

/// `(Lambda, beta) - (beta, beta) / 2`.
pub fn defect(mc: &Multicharge, beta: &RootVector) -> Result<i64> {
    let norm = root_pairing(beta, beta, mc);
    if norm % 2 != 0 {
        return Err(Error::OddNorm(beta.to_string()));
    }
    Ok(weight_pairing(mc, beta) - norm / 2)
}

/// The multipartitions of one content together with the block defect.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub beta: RootVector,
    pub defect: i64,
    /// Members from the top of the total order downwards.
    pub members: Vec<Multipartition>,
}

impl Block {
    pub fn size(&self) -> usize {
        self.members.first().map_or(0, |m| m.size())
    }

    pub fn level(&self) -> usize {
        self.members.first().map_or(0, |m| m.level())
    }

    pub fn contains(&self, lambda: &Multipartition) -> bool {
        self.members.binary_search_by(|m| lambda.cmp(m)).is_ok()
    }

    /// Members from the bottom of the total order upwards.
    pub fn ascending(&self) -> impl Iterator<Item = &Multipartition> {
        self.members.iter().rev()
    }

    /// The block of `beta'` for the conjugate multicharge.
    pub fn conjugate(&self, mc: &Multicharge) -> Block {
        let mut members: Vec<Multipartition> = self.members.iter().map(|m| m.conjugate()).collect();
        members.sort_by(|a, b| b.cmp(a));
        Block {
            beta: self.beta.conjugate(mc),
            defect: self.defect,
            members,
        }
    }
}

/// Partitions the multipartitions of `n` by content.
pub fn blocks(n: usize, mc: &Multicharge) -> Result<Vec<Block>> {
    mc.require_standing_assumption(n)?;
    let mut by_content: BTreeMap<RootVector, Vec<Multipartition>> = BTreeMap::new();
    for lambda in enumerate_multipartitions(n, mc.level()) {
        by_content
            .entry(content(&lambda, mc))
            .or_default()
            .push(lambda);
    }
    by_content
        .into_iter()
        .map(|(beta, members)| {
            Ok(Block {
                defect: defect(mc, &beta)?,
                beta,
                members,
            })
        })
        .collect()
}

/// The block with content `beta`, if any multipartition has that content.
pub fn block_of(beta: &RootVector, mc: &Multicharge) -> Result<Block> {
    let beta = beta.reduced(mc);
    let n = beta.height() as usize;
    blocks(n, mc)?
        .into_iter()
        .find(|b| b.beta == beta)
        .ok_or_else(|| Error::Unsupported(format!("no multipartition has content {beta}")))
}

/// The block containing `lambda`.
pub fn block_containing(lambda: &Multipartition, mc: &Multicharge) -> Result<Block> {
    if lambda.level() != mc.level() {
        return Err(Error::SizeMismatch(format!(
            "{lambda} has the wrong level for {mc}"
        )));
    }
    block_of(&content(lambda, mc), mc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_standard, StandardTableau};

    fn mc(k: &str, e: u32) -> Multicharge {
        Multicharge::parse(k, e).unwrap()
    }

    fn defect_four_beta() -> RootVector {
        "a-1:1,a0:3,a1:1,a2:1,a3:1".parse().unwrap()
    }

    #[test]
    fn content_examples() {
        let charge = mc("0,0", 0);
        let lam: Multipartition = "1|1".parse().unwrap();
        assert_eq!(content(&lam, &charge), RootVector::from_pairs([(0, 2)]));
        assert!(content(&Multipartition::empty(2), &charge).is_zero());
    }

    #[test]
    fn pairings() {
        let charge = mc("0,0", 0);
        let a0 = RootVector::from_pairs([(0, 1)]);
        assert_eq!(root_pairing(&a0, &a0, &charge), 2);
        let beta = RootVector::from_pairs([(0, 2)]);
        assert_eq!(weight_pairing(&charge, &beta), 4);
        assert_eq!(root_pairing(&beta, &beta, &charge), 8);
        assert_eq!(cartan_entry(0, 1, 2), -2);
        assert_eq!(cartan_entry(0, 4, 5), -1);
        assert_eq!(cartan_entry(0, 2, 5), 0);
        assert_eq!(cartan_entry(3, 4, 0), -1);
    }

    #[test]
    fn defects() {
        assert_eq!(defect(&mc("0,0,0", 0), &defect_four_beta()), Ok(4));
        assert_eq!(
            defect(&mc("0,0", 0), &RootVector::from_pairs([(0, 2)])),
            Ok(0)
        );
        assert_eq!(defect(&mc("0,0", 0), &RootVector::zero()), Ok(0));
    }

    #[test]
    fn blocks_small() {
        let bs = blocks(1, &mc("0,0", 0)).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].defect, 1);
        assert_eq!(
            bs[0].members,
            vec![
                "1|-".parse().unwrap(),
                "-|1".parse::<Multipartition>().unwrap()
            ]
        );
        let bs = blocks(0, &mc("0,0,0", 0)).unwrap();
        assert_eq!(bs.len(), 1);
        assert!(bs[0].beta.is_zero());
        assert_eq!(bs[0].defect, 0);
    }

    #[test]
    fn defect_four_block_has_fifteen_members() {
        let charge = mc("0,0,0", 0);
        let b = block_of(&defect_four_beta(), &charge).unwrap();
        assert_eq!(b.members.len(), 15);
        assert_eq!(b.defect, 4);
        assert_eq!(b.members[0], "4,2|1|-".parse().unwrap());
        for m in &b.members {
            assert_eq!(content(m, &charge), defect_four_beta());
        }
    }

    #[test]
    fn unsupported_characteristic() {
        assert!(matches!(
            blocks(5, &mc("0,0", 3)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn partition_and_defect_identity() {
        for (k, e, max_n) in [
            ("0,0", 0, 5),
            ("0,1", 0, 5),
            ("0,0,0", 0, 4),
            ("1,0,-1", 0, 4),
        ] {
            let charge = mc(k, e);
            for n in 0..=max_n {
                let bs = blocks(n, &charge).unwrap();
                let total: usize = bs.iter().map(|b| b.members.len()).sum();
                assert_eq!(total, enumerate_multipartitions(n, charge.level()).len());
                for b in &bs {
                    assert!(b.defect >= 0);
                    let conj_charge = charge.conjugate();
                    assert_eq!(
                        defect(&conj_charge, &b.beta.conjugate(&charge)),
                        Ok(b.defect)
                    );
                    let conj = b.conjugate(&charge);
                    for m in &conj.members {
                        assert_eq!(content(m, &conj_charge), conj.beta);
                    }
                    for lam in &b.members {
                        for t in enumerate_standard(lam) {
                            let (d, c) = t.degree_codegree(&charge);
                            assert_eq!(d + c, b.defect, "{t} in block {}", b.beta);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_blocks_reduce_residues() {
        let charge = mc("0,1", 4);
        for b in blocks(4, &charge).unwrap() {
            assert!(b.beta.coeffs().keys().all(|&i| (0..4).contains(&i)));
            for lam in &b.members {
                let t = StandardTableau::initial(lam);
                let (d, c) = t.degree_codegree(&charge);
                assert_eq!(d + c, b.defect);
            }
        }
    }

    #[test]
    fn selector_round_trip() {
        let beta = defect_four_beta();
        assert_eq!(beta.to_string(), "a-1:1,a0:3,a1:1,a2:1,a3:1");
        assert_eq!(beta.to_string().parse::<RootVector>().unwrap(), beta);
        let js = serde_json::to_string(&beta).unwrap();
        assert_eq!(serde_json::from_str::<RootVector>(&js).unwrap(), beta);
    }
}
