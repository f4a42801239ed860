use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A box `(row, col, comp)` of a multipartition diagram; all coordinates
/// are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Result<Self> {
        if row == 0 || col == 0 || comp == 0 {
            return Err(Error::InvalidNode(format!("({row},{col},{comp})")));
        }
        Ok(Self { row, col, comp })
    }

    /// `other` lies strictly below `self`: a later component, or the same
    /// component and a larger row. Columns play no role.
    pub fn has_below(&self, other: &Node) -> bool {
        other.comp > self.comp || (other.comp == self.comp && other.row > self.row)
    }

    pub fn has_above(&self, other: &Node) -> bool {
        other.has_below(self)
    }

    /// The node `(c, r, level + 1 - l)` of the conjugate diagram.
    pub fn conjugate(&self, level: usize) -> Node {
        Node {
            row: self.col,
            col: self.row,
            comp: level + 1 - self.comp,
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

/// An `l`-tuple of integer partitions.
///
/// Components hold strictly positive, weakly decreasing parts. The derived
/// `Ord` is the fixed total order used throughout the crate: components
/// are compared left to right, first by size and then lexicographically by
/// parts. It refines dominance, so `a` dominating `b` implies `a >= b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multipartition {
    comps: Vec<Vec<usize>>,
    size: usize,
}

impl Multipartition {
    pub fn new(comps: Vec<Vec<usize>>) -> Result<Self> {
        let mut clean = Vec::with_capacity(comps.len());
        for comp in comps {
            let mut parts: Vec<usize> = comp;
            while parts.last() == Some(&0) {
                parts.pop();
            }
            if parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidMultipartition(format!(
                    "parts {parts:?} are not weakly decreasing"
                )));
            }
            if parts.contains(&0) {
                return Err(Error::InvalidMultipartition(format!(
                    "zero part inside {parts:?}"
                )));
            }
            clean.push(parts);
        }
        if clean.is_empty() {
            return Err(Error::InvalidMultipartition(
                "a multipartition needs at least one component".into(),
            ));
        }
        Ok(Self::from_parts_unchecked(clean))
    }

    pub(crate) fn from_parts_unchecked(comps: Vec<Vec<usize>>) -> Self {
        let size = comps.iter().flatten().sum();
        Self { comps, size }
    }

    /// The empty multipartition of the given level.
    pub fn empty(level: usize) -> Self {
        Self::from_parts_unchecked(vec![Vec::new(); level])
    }

    pub fn level(&self) -> usize {
        self.comps.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.comps
    }

    /// Part `r` (1-based) of component `l` (1-based); zero when out of range.
    pub fn part(&self, comp: usize, row: usize) -> usize {
        self.comps
            .get(comp - 1)
            .and_then(|c| c.get(row - 1))
            .copied()
            .unwrap_or(0)
    }

    pub fn contains(&self, node: &Node) -> bool {
        node.comp >= 1 && node.comp <= self.level() && node.col <= self.part(node.comp, node.row)
    }

    /// Nodes in row-reading order: components `1..l`, rows top to bottom,
    /// columns left to right.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.comps.iter().enumerate().flat_map(|(l, parts)| {
            parts.iter().enumerate().flat_map(move |(r, &len)| {
                (1..=len).map(move |c| Node {
                    row: r + 1,
                    col: c,
                    comp: l + 1,
                })
            })
        })
    }

    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (l, parts) in self.comps.iter().enumerate() {
            for r in 0..=parts.len() {
                let len = parts.get(r).copied().unwrap_or(0);
                if r == 0 || parts[r - 1] > len {
                    out.push(Node {
                        row: r + 1,
                        col: len + 1,
                        comp: l + 1,
                    });
                }
            }
        }
        out
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (l, parts) in self.comps.iter().enumerate() {
            for (r, &len) in parts.iter().enumerate() {
                if parts.get(r + 1).copied().unwrap_or(0) < len {
                    out.push(Node {
                        row: r + 1,
                        col: len,
                        comp: l + 1,
                    });
                }
            }
        }
        out
    }

    pub fn is_addable(&self, node: &Node) -> bool {
        if node.comp == 0 || node.comp > self.level() || node.row == 0 {
            return false;
        }
        let len = self.part(node.comp, node.row);
        node.col == len + 1 && (node.row == 1 || self.part(node.comp, node.row - 1) > len)
    }

    pub fn is_removable(&self, node: &Node) -> bool {
        if node.comp == 0 || node.comp > self.level() || node.row == 0 {
            return false;
        }
        let len = self.part(node.comp, node.row);
        len > 0 && node.col == len && self.part(node.comp, node.row + 1) < len
    }

    /// Adds an addable node in place.
    pub(crate) fn push_node(&mut self, node: &Node) {
        debug_assert!(self.is_addable(node));
        let parts = &mut self.comps[node.comp - 1];
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        self.size += 1;
    }

    /// Removes a removable node in place.
    pub(crate) fn pop_node(&mut self, node: &Node) {
        debug_assert!(self.is_removable(node));
        let parts = &mut self.comps[node.comp - 1];
        parts[node.row - 1] -= 1;
        if parts[node.row - 1] == 0 {
            parts.pop();
        }
        self.size -= 1;
    }

    pub fn with_node(&self, node: &Node) -> Result<Self> {
        if !self.is_addable(node) {
            return Err(Error::InvalidNode(format!(
                "{node} is not addable to {self}"
            )));
        }
        let mut out = self.clone();
        out.push_node(node);
        Ok(out)
    }

    /// Dominance `self ⊵ other`.
    pub fn dominates(&self, other: &Multipartition) -> Result<bool> {
        if self.size != other.size || self.level() != other.level() {
            return Err(Error::SizeMismatch(format!("{self} vs {other}")));
        }
        Ok(self.dominates_unchecked(other))
    }

    pub(crate) fn dominates_unchecked(&self, other: &Multipartition) -> bool {
        let (mut before_a, mut before_b) = (0usize, 0usize);
        for (a, b) in self.comps.iter().zip(&other.comps) {
            let (mut sa, mut sb) = (before_a, before_b);
            for i in 0..a.len().max(b.len()) {
                sa += a.get(i).copied().unwrap_or(0);
                sb += b.get(i).copied().unwrap_or(0);
                if sa < sb {
                    return false;
                }
            }
            before_a = sa;
            before_b = sb;
            if before_a < before_b {
                return false;
            }
        }
        true
    }

    /// Reverses the components and transposes each one.
    pub fn conjugate(&self) -> Self {
        let comps = self.comps.iter().rev().map(|p| transpose(p)).collect();
        Self::from_parts_unchecked(comps)
    }

    /// Components rendered the way the published tables do: `0` for an
    /// empty component and exponent shorthand for repeated parts.
    pub fn latex_components(&self) -> Vec<String> {
        self.comps
            .iter()
            .map(|parts| {
                if parts.is_empty() {
                    return "0".to_string();
                }
                let mut groups: Vec<(usize, usize)> = Vec::new();
                for &p in parts {
                    match groups.last_mut() {
                        Some((q, m)) if *q == p => *m += 1,
                        _ => groups.push((p, 1)),
                    }
                }
                groups
                    .iter()
                    .map(|&(p, m)| match m {
                        1 => p.to_string(),
                        2..=9 => format!("{p}^{m}"),
                        _ => format!("{p}^{{{m}}}"),
                    })
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect()
    }

    fn order_key_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.comps.iter().zip(&other.comps) {
            let sa: usize = a.iter().sum();
            let sb: usize = b.iter().sum();
            let ord = sa.cmp(&sb).then_with(|| a.cmp(b));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.level().cmp(&other.level())
    }
}

/// The transpose of a single partition.
pub fn transpose(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|c| parts.iter().take_while(|&&p| p >= c).count())
        .collect()
}

impl Ord for Multipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key_cmp(other)
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self
            .comps
            .iter()
            .map(|parts| {
                if parts.is_empty() {
                    "-".to_string()
                } else {
                    parts
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                }
            })
            .collect();
        write!(f, "({})", text.join("|"))
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_component(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    if t.is_empty() || t == "-" || t == "0" || t == "−" || t == "∅" {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    for item in t.split(',') {
        let item = item.trim().replace(['{', '}'], "");
        let (p, m) = match item.split_once('^') {
            Some((p, m)) => (p.trim(), m.trim()),
            None => (item.as_str(), "1"),
        };
        let bad = || Error::Parse(format!("bad part {item:?} in {text:?}"));
        let p: usize = p.parse().map_err(|_| bad())?;
        let m: usize = m.parse().map_err(|_| bad())?;
        parts.extend(std::iter::repeat_n(p, m));
    }
    Ok(parts)
}

impl FromStr for Multipartition {
    type Err = Error;

    /// Parses `2,1|4,4,2`, `(2,1^2|-|3)` and similar; empty components may
    /// be written as nothing, `-` or `0`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').unwrap_or(t);
        let t = t.strip_suffix(')').unwrap_or(t);
        let comps = t
            .split('|')
            .map(parse_component)
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }
}

impl Serialize for Multipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.comps.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Multipartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let comps = Vec::<Vec<usize>>::deserialize(deserializer)?;
        Self::new(comps).map_err(D::Error::custom)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every multipartition of `n` with `level` components, listed from the
/// top of the total order downwards.
pub fn enumerate_multipartitions(n: usize, level: usize) -> Vec<Multipartition> {
    assert!(level >= 1, "level must be positive");
    let tables: Vec<Vec<Vec<usize>>> = (0..=n).map(partitions).collect();
    let mut out = Vec::new();
    fn go(
        comp: usize,
        rest: usize,
        level: usize,
        tables: &[Vec<Vec<usize>>],
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<Multipartition>,
    ) {
        if comp + 1 == level {
            for p in &tables[rest] {
                cur.push(p.clone());
                out.push(Multipartition::from_parts_unchecked(cur.clone()));
                cur.pop();
            }
            return;
        }
        for size in (0..=rest).rev() {
            for p in &tables[size] {
                cur.push(p.clone());
                go(comp + 1, rest - size, level, tables, cur, out);
                cur.pop();
            }
        }
    }
    go(0, n, level, &tables, &mut Vec::new(), &mut out);
    debug_assert!(out.windows(2).all(|w| w[0] > w[1]));
    out
}
