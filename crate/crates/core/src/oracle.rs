//! Brute-force cross-checks. Everything here recomputes its inputs from
//! definitions (full enumeration and filtering) rather than reusing the
//! generators it is checking.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::{
    enumerate_multipartitions, enumerate_standard, std_relative, Multicharge, Multipartition,
    Regime, RelativeMode, StandardTableau,
};
use crate::error::Result;
use crate::fock::{
    cartan_matrix, dim_g_lower, dim_g_upper, dim_hecke_block, level2_decomposition,
    straighten_canonical, straighten_tilting, FockVector, GradedMatrix,
};
use crate::laurent::LaurentPoly;
use crate::roots::{blocks, Block};

/// What a check covered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Scope {
    pub n: usize,
    pub kappa: Vec<i64>,
    pub e: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block: Option<String>,
}

impl Scope {
    pub fn new(n: usize, mc: &Multicharge, block: Option<&Block>) -> Self {
        Self {
            n,
            kappa: mc.kappa().to_vec(),
            e: mc.e(),
            block: block.map(|b| b.beta.to_string()),
        }
    }
}

/// Outcome of one check; `counterexample` is present exactly when it failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub scope: Scope,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckReport>,
}

impl CheckReport {
    fn new(name: &str, scope: Scope, failure: Option<Value>) -> Self {
        Self {
            name: name.to_string(),
            scope,
            passed: failure.is_none(),
            counterexample: failure,
            checks: Vec::new(),
        }
    }

    /// Passes when every part passes; the counterexample is the first failure.
    pub fn aggregate(name: &str, scope: Scope, checks: Vec<CheckReport>) -> Self {
        let failure = checks
            .iter()
            .find(|c| !c.passed)
            .map(|c| json!({ "check": c.name, "counterexample": c.counterexample }));
        Self {
            name: name.to_string(),
            scope,
            passed: failure.is_none(),
            counterexample: failure,
            checks,
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn entry_witness(row: &Multipartition, col: &Multipartition, detail: String) -> Value {
    json!({ "row": row.to_string(), "col": col.to_string(), "detail": detail })
}

/// `Std^mu(lambda)` or `Std_mu(lambda)` by filtering all of `Std(lambda)`.
pub fn std_relative_by_filter(
    mu: &Multipartition,
    lambda: &Multipartition,
    mode: RelativeMode,
    mc: &Multicharge,
) -> Vec<StandardTableau> {
    if mu.size() != lambda.size() || mu.level() != lambda.level() {
        return Vec::new();
    }
    let reference = mode.reference(mu);
    let residues = reference.residue_sequence(mc);
    enumerate_standard(lambda)
        .into_iter()
        .filter(|s| s.residue_sequence(mc) == residues)
        .filter(|s| match mode {
            RelativeMode::Upper => s.dominates(&reference).unwrap_or(false),
            RelativeMode::Lower => reference.dominates(s).unwrap_or(false),
        })
        .collect()
}

/// `[Z^mu]` over the given block, from the filtered relative sets.
pub fn zmu_by_filter(mu: &Multipartition, block: &Block, mc: &Multicharge) -> FockVector {
    let base = StandardTableau::initial(mu).degree(mc);
    let mut v = FockVector::zero(block.beta.clone());
    for lambda in &block.members {
        for s in std_relative_by_filter(mu, lambda, RelativeMode::Upper, mc) {
            v.add_to(lambda, &LaurentPoly::monomial(1, s.degree(mc) - base));
        }
    }
    v
}

fn require_regime(block: &Block, mc: &Multicharge) -> std::result::Result<Regime, Value> {
    match mc.regime(block.size()) {
        Regime::Unsupported => Err(json!({ "detail": "outside e = 0 or e >= n" })),
        r => Ok(r),
    }
}

fn check_degree_sum(block: &Block, mc: &Multicharge, scope: &Scope) -> CheckReport {
    let mut failure = None;
    'outer: for lambda in &block.members {
        for t in enumerate_standard(lambda) {
            let (deg, codeg) = t.degree_codegree(mc);
            if deg + codeg != block.defect {
                failure = Some(json!({
                    "tableau": t.to_string(), "deg": deg, "codeg": codeg, "defect": block.defect
                }));
                break 'outer;
            }
        }
    }
    CheckReport::new("deg+codeg=defect", scope.clone(), failure)
}

fn check_relative_sets(block: &Block, mc: &Multicharge, scope: &Scope) -> CheckReport {
    let mut failure = None;
    'outer: for mu in &block.members {
        for lambda in &block.members {
            for mode in [RelativeMode::Upper, RelativeMode::Lower] {
                let mut direct = std_relative(mu, lambda, mode, mc).unwrap_or_default();
                let mut filtered = std_relative_by_filter(mu, lambda, mode, mc);
                direct.sort_by_key(|t| t.to_string());
                filtered.sort_by_key(|t| t.to_string());
                if direct != filtered {
                    failure = Some(json!({
                        "mu": mu.to_string(), "lambda": lambda.to_string(),
                        "mode": mode, "generated": direct.len(), "filtered": filtered.len()
                    }));
                    break 'outer;
                }
            }
        }
    }
    CheckReport::new("relative-sets", scope.clone(), failure)
}

/// Checks that `d` is the graded decomposition matrix of the block:
/// unitriangular, off-diagonal entries in `q N[q]` (or `q Z[q]` outside the
/// proved regimes), and each `[Z^mu]` (computed by filtering) decomposes as
/// `sum_nu p [P^nu]` over the columns of `d` with every `p` bar-invariant and
/// nonnegative. A failure names the offending `(row, col)`.
pub fn verify_decomposition_matrix(
    block: &Block,
    mc: &Multicharge,
    d: &GradedMatrix,
) -> CheckReport {
    let scope = Scope::new(block.size(), mc, Some(block));
    let mut checks = Vec::new();

    let tri = d
        .unitriangularity_violation()
        .map(|(r, c, detail)| entry_witness(&r, &c, detail));
    checks.push(CheckReport::new("unitriangular", scope.clone(), tri));

    let strict = matches!(
        mc.regime(block.size()),
        Regime::Exact | Regime::ExactLevelTwo
    );
    let mut pos = None;
    'pos: for lambda in d.rows() {
        for mu in d.cols() {
            let f = d.get(lambda, mu);
            if lambda == mu || f.is_zero() {
                continue;
            }
            let ok = if strict {
                f.in_q_nat_q()
            } else {
                f.mindeg().map_or(true, |m| m >= 1)
            };
            if !ok {
                pos = Some(entry_witness(lambda, mu, format!("entry {f} not in qN[q]")));
                break 'pos;
            }
        }
    }
    checks.push(CheckReport::new(
        "off-diagonal-positive",
        scope.clone(),
        pos,
    ));

    let mut zfail = None;
    'cols: for mu in block.members.iter() {
        let z = zmu_by_filter(mu, block, mc);
        let mut p: BTreeMap<&Multipartition, LaurentPoly> = BTreeMap::new();
        for lambda in block.ascending().filter(|l| *l >= mu) {
            let mut rest = z.coeff(lambda);
            for (nu, pn) in &p {
                rest -= &(pn * &d.get(lambda, nu));
            }
            let bad = if lambda == mu {
                (!rest.is_one()).then(|| format!("leading multiplicity {rest} is not 1"))
            } else if !rest.is_bar_invariant() {
                Some(format!("summand multiplicity {rest} is not bar-invariant"))
            } else if !rest.has_nonnegative_coeffs() {
                Some(format!(
                    "summand multiplicity {rest} has a negative coefficient"
                ))
            } else {
                None
            };
            if let Some(detail) = bad {
                zfail = Some(entry_witness(lambda, mu, detail));
                break 'cols;
            }
            if !rest.is_zero() {
                p.insert(lambda, rest);
            }
        }
    }
    checks.push(CheckReport::new(
        "z-decomposes-into-columns",
        scope.clone(),
        zfail,
    ));

    let c = cartan_matrix(d);
    let mut cfail = None;
    if !c.is_symmetric() {
        cfail = Some(json!({ "detail": "Cartan matrix is not symmetric" }));
    } else if let Some(mu) = c.rows().iter().find(|m| c.get(m, m).coeff(0) != 1.into()) {
        cfail = Some(entry_witness(
            mu,
            mu,
            format!("diagonal Cartan entry {}", c.get(mu, mu)),
        ));
    }
    checks.push(CheckReport::new("cartan-symmetric", scope.clone(), cfail));

    CheckReport::aggregate("decomposition-matrix", scope, checks)
}

fn check_palindromes(block: &Block, mc: &Multicharge, scope: &Scope) -> CheckReport {
    let symmetric = |f: &LaurentPoly| f.bar().shift(2 * block.defect) == *f;
    let mut failure = None;
    for mu in &block.members {
        for (which, f) in [
            ("upper", dim_g_upper(mu, mc)),
            ("lower", dim_g_lower(mu, mc)),
        ] {
            match f {
                Ok(f) if symmetric(&f) => {}
                Ok(f) => {
                    failure = Some(
                        json!({ "mu": mu.to_string(), "module": which, "dim": f.to_string() }),
                    );
                }
                Err(e) => failure = Some(json!({ "mu": mu.to_string(), "error": e.to_string() })),
            }
            if failure.is_some() {
                break;
            }
        }
        if failure.is_some() {
            break;
        }
    }
    if failure.is_none() {
        match dim_hecke_block(block, mc) {
            Ok(f) if symmetric(&f) => {}
            Ok(f) => failure = Some(json!({ "module": "hecke-block", "dim": f.to_string() })),
            Err(e) => failure = Some(json!({ "error": e.to_string() })),
        }
    }
    CheckReport::new("graded-dimension-self-duality", scope.clone(), failure)
}

fn check_level_two(
    block: &Block,
    mc: &Multicharge,
    d: &GradedMatrix,
    scope: &Scope,
) -> CheckReport {
    let failure = match level2_decomposition(block, mc) {
        Err(e) => Some(json!({ "error": e.to_string() })),
        Ok(closed) => {
            let diff = closed
                .triples()
                .symmetric_difference(&d.triples())
                .next()
                .cloned();
            let non_mono = d.triples().into_iter().find(|t| {
                !t.value
                    .parse::<LaurentPoly>()
                    .is_ok_and(|f| f.is_monomial())
            });
            match (diff, non_mono) {
                (Some(t), _) => Some(json!({ "detail": "closed formula differs", "entry": t })),
                (None, Some(t)) => Some(json!({ "detail": "entry is not a monomial", "entry": t })),
                _ => None,
            }
        }
    };
    CheckReport::new("level-two-closed-formula", scope.clone(), failure)
}

/// Runs every block-level identity exhaustively over the block.
pub fn verify_block_invariants(block: &Block, mc: &Multicharge) -> CheckReport {
    let scope = Scope::new(block.size(), mc, Some(block));
    if let Err(w) = require_regime(block, mc) {
        return CheckReport::new("block-invariants", scope, Some(w));
    }
    let mut checks = vec![
        check_degree_sum(block, mc, &scope),
        check_relative_sets(block, mc, &scope),
    ];
    match straighten_canonical(block, mc) {
        Ok(can) => {
            checks.push(verify_decomposition_matrix(block, mc, &can.matrix));
            if mc.level() == 2 {
                checks.push(check_level_two(block, mc, &can.matrix, &scope));
            }
        }
        Err(e) => checks.push(CheckReport::new(
            "straightening",
            scope.clone(),
            Some(json!({ "error": e.to_string() })),
        )),
    }
    checks.push(check_palindromes(block, mc, &scope));
    CheckReport::aggregate("block-invariants", scope, checks)
}

/// Compares the block with its conjugate block for `(-k_l, ..., -k_1)`:
/// residues, degrees and codegrees of conjugate tableaux, and tilting
/// coefficients against the bar of conjugate decomposition numbers.
pub fn conjugate_duality_check(block: &Block, mc: &Multicharge) -> CheckReport {
    let scope = Scope::new(block.size(), mc, Some(block));
    if let Err(w) = require_regime(block, mc) {
        return CheckReport::new("conjugate-duality", scope, Some(w));
    }
    let dual_mc = mc.conjugate();
    let dual_block = block.conjugate(mc);

    let mut stats = None;
    'outer: for lambda in &block.members {
        for t in enumerate_standard(lambda) {
            let tc = t.conjugate();
            let res: Vec<i64> = t
                .residue_sequence(mc)
                .iter()
                .map(|r| dual_mc.reduce(-r))
                .collect();
            let (deg, codeg) = t.degree_codegree(mc);
            let (dual_deg, dual_codeg) = tc.degree_codegree(&dual_mc);
            if tc.residue_sequence(&dual_mc) != res || dual_deg != codeg || dual_codeg != deg {
                stats = Some(json!({ "tableau": t.to_string() }));
                break 'outer;
            }
        }
    }
    if stats.is_none()
        && !block
            .members
            .iter()
            .all(|l| dual_block.contains(&l.conjugate()))
    {
        stats = Some(json!({ "detail": "conjugate block has different members" }));
    }
    let stats = CheckReport::new("conjugate-statistics", scope.clone(), stats);

    let tilting = match (
        straighten_tilting(block, mc),
        straighten_canonical(&dual_block, &dual_mc),
    ) {
        (Ok(t), Ok(dual)) => {
            let mut failure = None;
            'til: for lambda in &block.members {
                for mu in &block.members {
                    let lhs = t.matrix.get(mu, lambda);
                    let rhs = dual.matrix.get(&mu.conjugate(), &lambda.conjugate()).bar();
                    if lhs != rhs {
                        failure = Some(entry_witness(
                            mu,
                            lambda,
                            format!("tilting coefficient {lhs}, conjugate decomposition number bar {rhs}"),
                        ));
                        break 'til;
                    }
                }
            }
            failure
        }
        (Err(e), _) | (_, Err(e)) => Some(json!({ "error": e.to_string() })),
    };
    let tilting = CheckReport::new("tilting-duality", scope.clone(), tilting);
    CheckReport::aggregate("conjugate-duality", scope, vec![stats, tilting])
}

/// `sum_lambda (#Std(lambda))^2 = level^n n!` over all multipartitions of `n`.
pub fn dimension_identity(n: usize, level: usize) -> CheckReport {
    let mut total = BigUint::from(0u32);
    for lambda in enumerate_multipartitions(n, level) {
        let k = BigUint::from(enumerate_standard(&lambda).len());
        total += &k * &k;
    }
    let factorial: BigUint = (1..=n).map(BigUint::from).product();
    let expected = BigUint::from(level).pow(n as u32) * factorial;
    let scope = Scope {
        n,
        kappa: vec![0; level],
        e: 0,
        block: None,
    };
    let failure = (total != expected)
        .then(|| json!({ "sum": total.to_string(), "expected": expected.to_string() }));
    CheckReport::new("sum-of-squares-dimension", scope, failure)
}

/// Every check for every block of size `n`, blocks in parallel.
pub fn verify_all(n: usize, mc: &Multicharge) -> Result<CheckReport> {
    let all = blocks(n, mc)?;
    let mut checks: Vec<CheckReport> = all
        .par_iter()
        .flat_map_iter(|b| {
            [
                verify_block_invariants(b, mc),
                conjugate_duality_check(b, mc),
            ]
        })
        .collect();
    checks.push(dimension_identity(n, mc.level()));
    Ok(CheckReport::aggregate(
        "verify",
        Scope::new(n, mc, None),
        checks,
    ))
}
