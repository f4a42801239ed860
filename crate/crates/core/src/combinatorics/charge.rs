use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::multipartition::Node;
use crate::error::{Error, Result};

/// A residue in `Z/eZ`; for `e = 0` this is a plain integer, otherwise the
/// representative in `0..e`.
pub type Residue = i64;

/// How far a computation is covered by the underlying theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `e = 0`.
    Exact,
    /// `e >= n` at level two.
    ExactLevelTwo,
    /// `e >= n` at level three or more: computed, not proved.
    Conjectural,
    /// `1 < e < n`: outside the standing assumption.
    Unsupported,
}

impl Regime {
    pub fn label(&self) -> &'static str {
        match self {
            Regime::Exact => "exact",
            Regime::ExactLevelTwo => "exact (level two)",
            Regime::Conjectural => "conjectural",
            Regime::Unsupported => "unsupported",
        }
    }
}

/// A multicharge `(k_1, ..., k_l)` together with the quantum
/// characteristic `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multicharge {
    kappa: Vec<i64>,
    e: u32,
}

impl Multicharge {
    pub fn new(kappa: Vec<i64>, e: u32) -> Result<Self> {
        if e == 1 {
            return Err(Error::Unsupported("e must be 0 or at least 2".into()));
        }
        if kappa.is_empty() {
            return Err(Error::Unsupported(
                "multicharge must have level >= 1".into(),
            ));
        }
        Ok(Self { kappa, e })
    }

    /// Parses a comma-separated charge such as `0,0,0` or `1,-2`.
    pub fn parse(kappa: &str, e: u32) -> Result<Self> {
        let values = kappa
            .split(',')
            .map(|k| {
                k.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad charge entry {k:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values, e)
    }

    pub fn kappa(&self) -> &[i64] {
        &self.kappa
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn level(&self) -> usize {
        self.kappa.len()
    }

    pub fn reduce(&self, i: i64) -> Residue {
        if self.e == 0 {
            i
        } else {
            i.rem_euclid(self.e as i64)
        }
    }

    /// `k_l + c - r`, reduced mod `e`.
    pub fn residue(&self, node: &Node) -> Residue {
        self.reduce(self.kappa[node.comp - 1] + node.col as i64 - node.row as i64)
    }

    /// `(Λ, α_i)`: the number of charge entries congruent to `i`.
    pub fn weight_pairing(&self, i: Residue) -> i64 {
        self.kappa
            .iter()
            .filter(|&&k| self.reduce(k) == self.reduce(i))
            .count() as i64
    }

    /// `(-k_l, ..., -k_1)`.
    pub fn conjugate(&self) -> Self {
        Self {
            kappa: self.kappa.iter().rev().map(|k| -k).collect(),
            e: self.e,
        }
    }

    /// `e = 0` or `e >= n`.
    pub fn satisfies_standing_assumption(&self, n: usize) -> bool {
        self.e == 0 || self.e as usize >= n
    }

    pub fn require_standing_assumption(&self, n: usize) -> Result<()> {
        if self.satisfies_standing_assumption(n) {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "e = {} with n = {n}: only e = 0 or e >= n is supported",
                self.e
            )))
        }
    }

    pub fn regime(&self, n: usize) -> Regime {
        if !self.satisfies_standing_assumption(n) {
            Regime::Unsupported
        } else if self.e == 0 {
            Regime::Exact
        } else if self.level() <= 2 {
            Regime::ExactLevelTwo
        } else {
            Regime::Conjectural
        }
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.kappa.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k: Vec<String> = self.kappa.iter().map(|k| k.to_string()).collect();
        write!(f, "kappa=({}), e={}", k.join(","), self.e)
    }
}

impl FromStr for Multicharge {
    type Err = Error;

    /// `0,0,0` (with `e = 0`) or `0,0,0;e=5`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(";e=") {
            Some((k, e)) => {
                let e = e
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad e in {s:?}")))?;
                Self::parse(k, e)
            }
            None => Self::parse(s, 0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues() {
        let mc = Multicharge::new(vec![0, 1], 0).unwrap();
        assert_eq!(mc.residue(&Node::new(2, 1, 1).unwrap()), -1);
        let mc5 = Multicharge::new(vec![0, 1], 5).unwrap();
        assert_eq!(mc5.residue(&Node::new(2, 1, 1).unwrap()), 4);
    }

    #[test]
    fn rejects_e_one() {
        assert!(Multicharge::new(vec![0], 1).is_err());
    }

    #[test]
    fn regimes() {
        let mc = Multicharge::parse("0,0,0", 0).unwrap();
        assert_eq!(mc.regime(9), Regime::Exact);
        let mc = Multicharge::parse("0,1", 4).unwrap();
        assert_eq!(mc.regime(4), Regime::ExactLevelTwo);
        assert_eq!(mc.regime(5), Regime::Unsupported);
        assert!(mc.require_standing_assumption(5).is_err());
        let mc = Multicharge::parse("0,1,2", 6).unwrap();
        assert_eq!(mc.regime(6), Regime::Conjectural);
    }

    #[test]
    fn conjugate_charge() {
        let mc = Multicharge::parse("3,1,-2", 0).unwrap();
        assert_eq!(mc.conjugate().kappa(), &[2, -1, -3]);
        assert_eq!("3,1,-2;e=7".parse::<Multicharge>().unwrap().e(), 7);
    }
}
