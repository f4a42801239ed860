use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::charge::{Multicharge, Residue};
use super::multipartition::{Multipartition, Node};
use crate::error::{Error, Result};

/// A standard tableau, stored as the node occupied by each entry:
/// `cells[k - 1]` holds `k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Multipartition,
    cells: Vec<Node>,
}

impl StandardTableau {
    /// Builds a tableau from the node of each entry, checking that every
    /// prefix is a multipartition.
    pub fn from_cells(level: usize, cells: Vec<Node>) -> Result<Self> {
        let mut shape = Multipartition::empty(level);
        for (k, node) in cells.iter().enumerate() {
            if !shape.is_addable(node) {
                return Err(Error::InvalidTableau(format!(
                    "entry {} at {node} does not extend {shape}",
                    k + 1
                )));
            }
            shape.push_node(node);
        }
        Ok(Self { shape, cells })
    }

    pub(crate) fn from_cells_unchecked(shape: Multipartition, cells: Vec<Node>) -> Self {
        Self { shape, cells }
    }

    /// Builds a tableau from row-major entries per component.
    pub fn from_rows(rows: &[Vec<Vec<usize>>]) -> Result<Self> {
        let n: usize = rows.iter().flatten().map(|r| r.len()).sum();
        let mut cells: Vec<Option<Node>> = vec![None; n];
        for (l, comp) in rows.iter().enumerate() {
            for (r, row) in comp.iter().enumerate() {
                for (c, &k) in row.iter().enumerate() {
                    if k == 0 || k > n || cells[k - 1].is_some() {
                        return Err(Error::InvalidTableau(format!(
                            "entries must be a permutation of 1..{n}"
                        )));
                    }
                    cells[k - 1] = Some(Node {
                        row: r + 1,
                        col: c + 1,
                        comp: l + 1,
                    });
                }
            }
        }
        let cells = cells.into_iter().map(|c| c.expect("bijection")).collect();
        let t = Self::from_cells(rows.len(), cells)?;
        let given: Vec<Vec<usize>> = rows
            .iter()
            .map(|comp| comp.iter().map(|r| r.len()).filter(|&l| l > 0).collect())
            .collect();
        if t.shape.components() != given.as_slice() {
            return Err(Error::InvalidTableau("rows do not form a diagram".into()));
        }
        Ok(t)
    }

    /// `t^mu`: entries `1..n` along the rows of components `1..l`.
    pub fn initial(mu: &Multipartition) -> Self {
        Self {
            shape: mu.clone(),
            cells: mu.nodes().collect(),
        }
    }

    /// `t_mu = (t^{mu'})'`: entries down the columns of components `l..1`.
    pub fn final_(mu: &Multipartition) -> Self {
        Self::initial(&mu.conjugate()).conjugate()
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn level(&self) -> usize {
        self.shape.level()
    }

    pub fn cells(&self) -> &[Node] {
        &self.cells
    }

    /// The node holding entry `k` (1-based).
    pub fn node_of(&self, k: usize) -> Node {
        self.cells[k - 1]
    }

    /// Row-major entries per component.
    pub fn rows(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<Vec<usize>>> = self
            .shape
            .components()
            .iter()
            .map(|parts| parts.iter().map(|&len| vec![0; len]).collect())
            .collect();
        for (k, node) in self.cells.iter().enumerate() {
            out[node.comp - 1][node.row - 1][node.col - 1] = k + 1;
        }
        out
    }

    /// `t↓k`, the subtableau holding `1..k`.
    pub fn restrict(&self, k: usize) -> Self {
        let cells = self.cells[..k].to_vec();
        let mut shape = Multipartition::empty(self.level());
        for c in &cells {
            shape.push_node(c);
        }
        Self { shape, cells }
    }

    /// `Shape(t↓k)` for `k = 0..=n`.
    pub fn prefix_shapes(&self) -> Vec<Multipartition> {
        let mut shape = Multipartition::empty(self.level());
        let mut out = Vec::with_capacity(self.size() + 1);
        out.push(shape.clone());
        for c in &self.cells {
            shape.push_node(c);
            out.push(shape.clone());
        }
        out
    }

    /// Tableau dominance: every prefix shape of `self` dominates the
    /// corresponding prefix shape of `other`.
    pub fn dominates(&self, other: &StandardTableau) -> Result<bool> {
        if self.size() != other.size() || self.level() != other.level() {
            return Err(Error::SizeMismatch(format!("{self} vs {other}")));
        }
        let a = self.prefix_shapes();
        let b = other.prefix_shapes();
        Ok(a.iter().zip(&b).all(|(x, y)| x.dominates_unchecked(y)))
    }

    pub fn conjugate(&self) -> Self {
        let level = self.level();
        Self {
            shape: self.shape.conjugate(),
            cells: self.cells.iter().map(|c| c.conjugate(level)).collect(),
        }
    }

    pub fn residue_sequence(&self, mc: &Multicharge) -> Vec<Residue> {
        self.cells.iter().map(|c| mc.residue(c)).collect()
    }

    /// `(deg t, codeg t)`, accumulated entry by entry.
    pub fn degree_codegree(&self, mc: &Multicharge) -> (i64, i64) {
        let mut shape = Multipartition::empty(self.level());
        let (mut deg, mut codeg) = (0, 0);
        for c in &self.cells {
            shape.push_node(c);
            let (below, above) = degree_stats_unchecked(&shape, c, mc);
            deg += below;
            codeg += above;
        }
        (deg, codeg)
    }

    pub fn degree(&self, mc: &Multicharge) -> i64 {
        self.degree_codegree(mc).0
    }

    pub fn codegree(&self, mc: &Multicharge) -> i64 {
        self.degree_codegree(mc).1
    }

    /// The sets of entries lying in each component.
    pub fn component_sets(&self) -> Vec<BTreeSet<usize>> {
        let mut out = vec![BTreeSet::new(); self.level()];
        for (k, c) in self.cells.iter().enumerate() {
            out[c.comp - 1].insert(k + 1);
        }
        out
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .rows()
            .iter()
            .map(|comp| {
                if comp.is_empty() {
                    return "-".to_string();
                }
                comp.iter()
                    .map(|row| {
                        row.iter()
                            .map(|k| k.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect::<Vec<_>>()
                    .join("/")
            })
            .collect();
        write!(f, "({})", comps.join("|"))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Multipartition,
    rows: Vec<Vec<Vec<usize>>>,
}

impl Serialize for StandardTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson {
            shape: self.shape.clone(),
            rows: self.rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StandardTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let js = TableauJson::deserialize(d)?;
        let t = Self::from_rows(&js.rows).map_err(D::Error::custom)?;
        if t.shape != js.shape {
            return Err(D::Error::custom("shape does not match rows"));
        }
        Ok(t)
    }
}

fn degree_stats_unchecked(mu: &Multipartition, a: &Node, mc: &Multicharge) -> (i64, i64) {
    let i = mc.residue(a);
    let (mut below, mut above) = (0i64, 0i64);
    for b in mu.addable_nodes() {
        if mc.residue(&b) == i {
            if a.has_below(&b) {
                below += 1;
            } else if a.has_above(&b) {
                above += 1;
            }
        }
    }
    for b in mu.removable_nodes() {
        if mc.residue(&b) == i {
            if a.has_below(&b) {
                below -= 1;
            } else if a.has_above(&b) {
                above -= 1;
            }
        }
    }
    (below, above)
}

/// `(d_A(mu), d^A(mu))` for a node `A` in `mu` or addable to it.
pub fn node_degree_stats(mu: &Multipartition, a: &Node, mc: &Multicharge) -> Result<(i64, i64)> {
    if a.comp == 0 || a.comp > mu.level() || mc.level() != mu.level() {
        return Err(Error::InvalidNode(format!("{a} for level {}", mu.level())));
    }
    if !(mu.contains(a) || mu.is_addable(a)) {
        return Err(Error::InvalidNode(format!(
            "{a} is neither in nor addable to {mu}"
        )));
    }
    Ok(degree_stats_unchecked(mu, a, mc))
}

/// Every standard `lambda`-tableau, in a fixed depth-first order.
pub fn enumerate_standard(lambda: &Multipartition) -> Vec<StandardTableau> {
    fn go(
        lambda: &Multipartition,
        shape: &mut Multipartition,
        cells: &mut Vec<Node>,
        out: &mut Vec<StandardTableau>,
    ) {
        if shape.size() == lambda.size() {
            out.push(StandardTableau::from_cells_unchecked(
                shape.clone(),
                cells.clone(),
            ));
            return;
        }
        for node in shape.addable_nodes() {
            if lambda.contains(&node) {
                shape.push_node(&node);
                cells.push(node);
                go(lambda, shape, cells, out);
                cells.pop();
                shape.pop_node(&node);
            }
        }
    }
    let mut out = Vec::new();
    go(
        lambda,
        &mut Multipartition::empty(lambda.level()),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Which side of the relative tableau sets to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelativeMode {
    /// `Std^mu`: tableaux dominating `t^mu` with residue sequence `i^mu`.
    Upper,
    /// `Std_mu`: tableaux dominated by `t_mu` with residue sequence `i_mu`.
    Lower,
}

impl RelativeMode {
    pub fn reference(&self, mu: &Multipartition) -> StandardTableau {
        match self {
            RelativeMode::Upper => StandardTableau::initial(mu),
            RelativeMode::Lower => StandardTableau::final_(mu),
        }
    }
}

/// `Std^mu(lambda)` or `Std_mu(lambda)`, generated entry by entry with the
/// prefix-dominance constraint applied at every step.
pub fn std_relative(
    mu: &Multipartition,
    lambda: &Multipartition,
    mode: RelativeMode,
    mc: &Multicharge,
) -> Result<Vec<StandardTableau>> {
    if mu.size() != lambda.size() || mu.level() != lambda.level() {
        return Err(Error::SizeMismatch(format!("{mu} vs {lambda}")));
    }
    Ok(relative_search(mu, Some(lambda), mode, mc))
}

/// The union of `Std^mu(lambda)` (or `Std_mu(lambda)`) over all `lambda`.
pub fn std_relative_all(
    mu: &Multipartition,
    mode: RelativeMode,
    mc: &Multicharge,
) -> Vec<StandardTableau> {
    relative_search(mu, None, mode, mc)
}

fn relative_search(
    mu: &Multipartition,
    target: Option<&Multipartition>,
    mode: RelativeMode,
    mc: &Multicharge,
) -> Vec<StandardTableau> {
    let reference = mode.reference(mu);
    let residues = reference.residue_sequence(mc);
    let prefixes = reference.prefix_shapes();

    struct Search<'a> {
        target: Option<&'a Multipartition>,
        mode: RelativeMode,
        mc: &'a Multicharge,
        residues: Vec<Residue>,
        prefixes: Vec<Multipartition>,
        out: Vec<StandardTableau>,
    }

    impl Search<'_> {
        fn go(&mut self, shape: &mut Multipartition, cells: &mut Vec<Node>) {
            let k = cells.len();
            if k == self.residues.len() {
                self.out.push(StandardTableau::from_cells_unchecked(
                    shape.clone(),
                    cells.clone(),
                ));
                return;
            }
            for node in shape.addable_nodes() {
                if self.mc.residue(&node) != self.residues[k] {
                    continue;
                }
                if let Some(t) = self.target {
                    if !t.contains(&node) {
                        continue;
                    }
                }
                shape.push_node(&node);
                let ok = match self.mode {
                    RelativeMode::Upper => shape.dominates_unchecked(&self.prefixes[k + 1]),
                    RelativeMode::Lower => self.prefixes[k + 1].dominates_unchecked(shape),
                };
                if ok {
                    cells.push(node);
                    self.go(shape, cells);
                    cells.pop();
                }
                shape.pop_node(&node);
            }
        }
    }

    let mut search = Search {
        target,
        mode,
        mc,
        residues,
        prefixes,
        out: Vec::new(),
    };
    search.go(&mut Multipartition::empty(mu.level()), &mut Vec::new());
    search.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_multipartitions;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn mc(k: &str, e: u32) -> Multicharge {
        Multicharge::parse(k, e).unwrap()
    }

    #[test]
    fn initial_and_final_match_displayed_pair() {
        let mu = mp("3,2|2,1^2|3,1");
        let top = StandardTableau::initial(&mu);
        let bottom = StandardTableau::final_(&mu);
        assert_eq!(
            top.rows(),
            vec![
                vec![vec![1, 2, 3], vec![4, 5]],
                vec![vec![6, 7], vec![8], vec![9]],
                vec![vec![10, 11, 12], vec![13]],
            ]
        );
        assert_eq!(
            bottom.rows(),
            vec![
                vec![vec![9, 11, 13], vec![10, 12]],
                vec![vec![5, 8], vec![6], vec![7]],
                vec![vec![1, 3, 4], vec![2]],
            ]
        );
    }

    #[test]
    fn initial_final_small() {
        let mu = mp("1|1");
        assert_eq!(
            StandardTableau::initial(&mu).rows(),
            vec![vec![vec![1]], vec![vec![2]]]
        );
        assert_eq!(
            StandardTableau::final_(&mu).rows(),
            vec![vec![vec![2]], vec![vec![1]]]
        );
        let one = mp("1");
        assert_eq!(
            StandardTableau::initial(&one),
            StandardTableau::final_(&one)
        );
    }

    #[test]
    fn initial_is_max_and_final_is_min() {
        for n in 0..=5 {
            for level in 1..=3 {
                for mu in enumerate_multipartitions(n, level) {
                    let top = StandardTableau::initial(&mu);
                    let bottom = StandardTableau::final_(&mu);
                    for t in enumerate_standard(&mu) {
                        assert!(top.dominates(&t).unwrap());
                        assert!(t.dominates(&bottom).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn tableau_dominance_reversed_by_conjugation() {
        let all: Vec<StandardTableau> = enumerate_multipartitions(4, 2)
            .iter()
            .flat_map(enumerate_standard)
            .collect();
        for s in &all {
            assert_eq!(&s.conjugate().conjugate(), s);
            for t in &all {
                assert_eq!(
                    s.dominates(t).unwrap(),
                    t.conjugate().dominates(&s.conjugate()).unwrap()
                );
            }
        }
    }

    #[test]
    fn residue_sequence_examples() {
        let t = StandardTableau::initial(&mp("1|1"));
        assert_eq!(t.residue_sequence(&mc("0,0", 0)), vec![0, 0]);
    }

    #[test]
    fn node_stats_examples() {
        let charge = mc("0,0", 0);
        let a = Node::new(1, 1, 1).unwrap();
        assert_eq!(node_degree_stats(&mp("1|-"), &a, &charge), Ok((1, 0)));
        let b = Node::new(1, 1, 2).unwrap();
        assert_eq!(node_degree_stats(&mp("1|1"), &b, &charge), Ok((0, -1)));
        let single = mc("0", 0);
        assert_eq!(node_degree_stats(&mp("1"), &a, &single), Ok((0, 0)));
        let far = Node::new(3, 3, 1).unwrap();
        assert!(matches!(
            node_degree_stats(&mp("1|1"), &far, &charge),
            Err(Error::InvalidNode(_))
        ));
    }

    #[test]
    fn degree_examples() {
        let charge = mc("0,0", 0);
        assert_eq!(
            StandardTableau::initial(&mp("1|1")).degree_codegree(&charge),
            (1, -1)
        );
        let empty = StandardTableau::initial(&Multipartition::empty(2));
        assert_eq!(empty.degree_codegree(&charge), (0, 0));
    }

    #[test]
    fn displayed_degree_example() {
        let charge = mc("0,0,0", 0);
        let t = StandardTableau::from_rows(&[
            vec![vec![1, 6], vec![7]],
            vec![vec![2, 3], vec![4, 8]],
            vec![vec![5]],
        ])
        .unwrap();
        assert_eq!(t.shape(), &mp("2,1|2^2|1"));
        let mu = mp("1|2,1|2^2");
        assert_eq!(t.degree(&charge), 2);
        assert_eq!(StandardTableau::initial(&mu).degree(&charge), 3);
        let upper = std_relative(&mu, t.shape(), RelativeMode::Upper, &charge).unwrap();
        assert!(upper.contains(&t));
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_standard(&mp("1|1")).len(), 2);
        assert_eq!(enumerate_standard(&mp("5")).len(), 1);
        assert_eq!(enumerate_standard(&mp("2,1")).len(), 2);
    }

    #[test]
    fn relative_sets_contain_reference() {
        let charge = mc("0,0,0", 0);
        for mu in enumerate_multipartitions(4, 3) {
            let up = std_relative(&mu, &mu, RelativeMode::Upper, &charge).unwrap();
            assert_eq!(up, vec![StandardTableau::initial(&mu)]);
            let down = std_relative(&mu, &mu, RelativeMode::Lower, &charge).unwrap();
            assert_eq!(down, vec![StandardTableau::final_(&mu)]);
        }
    }

    #[test]
    fn relative_example_block() {
        let charge = mc("0,0,0", 0);
        let mu = mp("4,1|1|1");
        let all = std_relative_all(&mu, RelativeMode::Upper, &charge);
        let mut shapes: Vec<String> = all.iter().map(|t| t.shape().to_string()).collect();
        shapes.sort();
        assert_eq!(
            shapes,
            vec!["(4,1|1|1)", "(4,2|-|1)", "(4,2|1|-)", "(4,2|1|-)"]
        );
        let rows: Vec<_> = all.iter().map(|t| t.rows()).collect();
        assert!(rows.contains(&vec![
            vec![vec![1, 2, 3, 4], vec![5, 7]],
            vec![vec![6]],
            vec![]
        ]));
        assert!(rows.contains(&vec![
            vec![vec![1, 2, 3, 4], vec![5, 6]],
            vec![vec![7]],
            vec![]
        ]));
    }

    #[test]
    fn mismatched_sizes_rejected() {
        let charge = mc("0,0", 0);
        assert!(matches!(
            std_relative(&mp("1|1"), &mp("1|-"), RelativeMode::Upper, &charge),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let t = StandardTableau::final_(&mp("2,1|1"));
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(js, r#"{"shape":[[2,1],[1]],"rows":[[[2,4],[3]],[[1]]]}"#);
        let back: StandardTableau = serde_json::from_str(&js).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn rejects_nonstandard() {
        assert!(StandardTableau::from_rows(&[vec![vec![2, 1]]]).is_err());
        assert!(StandardTableau::from_rows(&[vec![vec![1, 3], vec![2, 4]]]).is_ok());
        assert!(StandardTableau::from_rows(&[vec![vec![1, 2], vec![4, 3]]]).is_err());
    }
}
