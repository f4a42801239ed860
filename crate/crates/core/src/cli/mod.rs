//! Command-line front end. [`dispatch`] is pure apart from reading a golden
//! file, so it is testable without spawning a process.

mod golden;
mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::{
    enumerate_standard, Multicharge, Multipartition, Regime, StandardTableau,
};
use crate::error::{Error, Result};
use crate::fock::{
    cartan_matrix, graded_dimensions, hecke_submatrix, level2_decomposition, straighten_canonical,
    straighten_tilting, GradedMatrix,
};
use crate::oracle::{
    conjugate_duality_check, verify_all, verify_block_invariants, CheckReport, Scope,
};
use crate::roots::{block_containing, block_of, blocks, Block, RootVector};

pub use golden::{matrices_from_document, GoldenOutcome};

/// Environment variable holding the default worker-thread count.
pub const THREADS_ENV: &str = "QUIVER_SCHUR_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// List the blocks of size n with their defects and members.
    Blocks,
    /// Standard tableaux with residues, degrees and codegrees.
    Tableaux,
    /// Graded decomposition matrices by straightening.
    Decomp,
    /// Graded Cartan matrices C = D^T D.
    Cartan,
    /// Graded dimensions of G^mu, G_mu and of the Schur and Hecke blocks.
    Dims,
    /// Level-two decomposition matrices from the closed formula.
    Level2,
    /// Tilting multiplicities (T_mu : Delta^lambda).
    Tilting,
    /// Exhaustive invariant checks.
    Verify,
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "quiver-schur",
    version,
    about = "Graded decomposition numbers of quiver Schur algebras"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Number of nodes.
    #[arg(long, global = true, default_value_t = 0)]
    pub n: usize,

    /// Comma-separated multicharge, e.g. 0,0,0.
    #[arg(long, global = true, default_value = "0", allow_hyphen_values = true)]
    pub charge: String,

    /// Quantum characteristic: 0 or at least 2.
    #[arg(long, global = true, default_value_t = 0)]
    pub e: u32,

    /// Restrict to one block, named by content, e.g. a-1:1,a0:3,a1:1.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub block: Option<String>,

    /// Restrict to the block of (and, for tableaux and dims, to) one multipartition.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub mu: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Compare the output against this file instead of printing it.
    #[arg(long, global = true)]
    pub golden: Option<PathBuf>,

    /// Worker threads for block-level parallelism.
    #[arg(long, global = true, env = THREADS_ENV)]
    pub threads: Option<usize>,

    /// Keep only Kleshchev columns (decomp, e = 0 with a decreasing charge).
    #[arg(long, global = true)]
    pub hecke: bool,
}

/// Exit status and emitted documents of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(stdout: String, stderr: String) -> Self {
        Self {
            code: 1,
            stdout,
            stderr,
        }
    }

    fn usage(stderr: String) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr,
        }
    }
}

/// One computed matrix together with the block it belongs to.
#[derive(Debug, Clone)]
pub struct BlockMatrix {
    pub block: Block,
    pub regime: Regime,
    pub matrix: GradedMatrix,
}

/// A command's result before rendering.
#[derive(Debug, Clone)]
pub enum Document {
    Matrices(Vec<BlockMatrix>),
    Value { json: Value, text: String },
    Report(CheckReport),
}

/// Parses `args` (including the program name) and runs the command.
pub fn dispatch<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    run(&config)
}

/// Runs a parsed configuration.
pub fn run(config: &RunConfig) -> Outcome {
    let pool = match config.threads {
        Some(t) => rayon::ThreadPoolBuilder::new().num_threads(t).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => return Outcome::usage(format!("cannot start worker threads: {e}\n")),
    };
    let doc = match pool.install(|| compute(config)) {
        Ok(d) => d,
        Err(e @ Error::PositivityViolation { .. }) => {
            return Outcome::failed(String::new(), format!("error: {e}\n"))
        }
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let rendered = match render::render(&doc, config.format) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let mut notes = String::new();
    if let Document::Matrices(ms) = &doc {
        if ms.iter().any(|m| m.regime == Regime::Conjectural) {
            notes.push_str(
                "warning: conjectural: e >= n at level >= 3 is computed but not proved\n",
            );
        }
    }
    let check_failed = matches!(&doc, Document::Report(r) if !r.passed);

    if let Some(path) = &config.golden {
        let expected = match std::fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => {
                return Outcome::usage(format!("error: cannot read {}: {e}\n", path.display()))
            }
        };
        return match golden::compare(&doc, &rendered, &expected, config.format) {
            Ok(GoldenOutcome::Match) if !check_failed => Outcome {
                code: 0,
                stdout: "golden: match\n".into(),
                stderr: notes,
            },
            Ok(GoldenOutcome::Match) => {
                Outcome::failed("golden: match\n".into(), notes + "checks failed\n")
            }
            Ok(GoldenOutcome::Mismatch(diff)) => {
                Outcome::failed(format!("golden: mismatch\n{diff}"), notes)
            }
            Err(e) => Outcome::usage(format!("error: golden file: {e}\n")),
        };
    }
    if check_failed {
        Outcome::failed(rendered, notes + "checks failed\n")
    } else {
        Outcome {
            code: 0,
            stdout: rendered,
            stderr: notes,
        }
    }
}

fn multicharge(config: &RunConfig) -> Result<Multicharge> {
    Multicharge::parse(&config.charge, config.e)
}

fn selected_mu(config: &RunConfig, mc: &Multicharge) -> Result<Option<Multipartition>> {
    let Some(text) = &config.mu else {
        return Ok(None);
    };
    let mu: Multipartition = text.parse()?;
    if mu.level() != mc.level() {
        return Err(Error::SizeMismatch(format!(
            "{mu} has level {}, charge has {}",
            mu.level(),
            mc.level()
        )));
    }
    if config.n != 0 && mu.size() != config.n {
        return Err(Error::SizeMismatch(format!(
            "{mu} has {} nodes, --n is {}",
            mu.size(),
            config.n
        )));
    }
    Ok(Some(mu))
}

fn selected_blocks(config: &RunConfig, mc: &Multicharge) -> Result<Vec<Block>> {
    if let Some(mu) = selected_mu(config, mc)? {
        return Ok(vec![block_containing(&mu, mc)?]);
    }
    if let Some(sel) = &config.block {
        let beta: RootVector = sel.parse()?;
        let beta = beta.reduced(mc);
        if config.n != 0 && beta.height() as usize != config.n {
            return Err(Error::SizeMismatch(format!(
                "block {beta} has {} nodes, --n is {}",
                beta.height(),
                config.n
            )));
        }
        return Ok(vec![block_of(&beta, mc)?]);
    }
    blocks(config.n, mc)
}

fn compute(config: &RunConfig) -> Result<Document> {
    let mc = multicharge(config)?;
    let chosen = selected_blocks(config, &mc)?;
    match config.command {
        Command::Blocks => Ok(blocks_document(&chosen)),
        Command::Tableaux => tableaux_document(config, &chosen, &mc),
        Command::Dims => dims_document(config, &chosen, &mc),
        Command::Verify => Ok(Document::Report(verify_document(config, &chosen, &mc)?)),
        Command::Decomp | Command::Cartan | Command::Level2 | Command::Tilting => {
            if config.hecke && config.command != Command::Decomp {
                return Err(Error::Unsupported("--hecke applies to decomp only".into()));
            }
            let mats = chosen
                .par_iter()
                .map(|b| matrix_for(config.command, config.hecke, b, &mc))
                .collect::<Result<Vec<_>>>()?;
            Ok(Document::Matrices(mats))
        }
    }
}

fn matrix_for(
    command: Command,
    hecke: bool,
    block: &Block,
    mc: &Multicharge,
) -> Result<BlockMatrix> {
    let regime = mc.regime(block.size());
    let matrix = match command {
        Command::Decomp => {
            let d = straighten_canonical(block, mc)?.matrix;
            if hecke {
                hecke_submatrix(&d, mc)?
            } else {
                d
            }
        }
        Command::Cartan => cartan_matrix(&straighten_canonical(block, mc)?.matrix),
        Command::Level2 => level2_decomposition(block, mc)?,
        Command::Tilting => straighten_tilting(block, mc)?.matrix,
        _ => unreachable!("not a matrix command"),
    };
    Ok(BlockMatrix {
        block: block.clone(),
        regime,
        matrix,
    })
}

fn block_json(b: &Block) -> Value {
    json!({
        "beta": b.beta,
        "defect": b.defect,
        "members": b.members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
    })
}

fn blocks_document(chosen: &[Block]) -> Document {
    let json = Value::Array(chosen.iter().map(block_json).collect());
    let mut text = String::new();
    for b in chosen {
        let members: Vec<String> = b.members.iter().map(|m| m.to_string()).collect();
        text.push_str(&format!(
            "block {} defect {}: {}\n",
            b.beta,
            b.defect,
            members.join(" ")
        ));
    }
    Document::Value { json, text }
}

fn tableau_entry(t: &StandardTableau, mc: &Multicharge) -> (Value, String) {
    let (deg, codeg) = t.degree_codegree(mc);
    let residues = t.residue_sequence(mc);
    let json = json!({ "tableau": t, "deg": deg, "codeg": codeg, "residues": residues });
    let res: Vec<String> = residues.iter().map(|r| r.to_string()).collect();
    let text = format!(
        "  {t}  deg {deg}  codeg {codeg}  residues {}\n",
        res.join(",")
    );
    (json, text)
}

fn tableaux_document(config: &RunConfig, chosen: &[Block], mc: &Multicharge) -> Result<Document> {
    let shapes: Vec<Multipartition> = match selected_mu(config, mc)? {
        Some(mu) => vec![mu],
        None => chosen
            .iter()
            .flat_map(|b| b.members.iter().cloned())
            .collect(),
    };
    let mut json = Vec::new();
    let mut text = String::new();
    for lambda in shapes {
        let mut entries = Vec::new();
        text.push_str(&format!("{lambda}\n"));
        for t in enumerate_standard(&lambda) {
            let (j, s) = tableau_entry(&t, mc);
            entries.push(j);
            text.push_str(&s);
        }
        let initial = StandardTableau::initial(&lambda);
        let last = StandardTableau::final_(&lambda);
        text.push_str(&format!("  initial {initial}  final {last}\n"));
        json.push(json!({
            "shape": lambda.to_string(),
            "initial": initial,
            "final": last,
            "tableaux": entries,
        }));
    }
    Ok(Document::Value {
        json: Value::Array(json),
        text,
    })
}

fn dims_document(config: &RunConfig, chosen: &[Block], mc: &Multicharge) -> Result<Document> {
    let only = selected_mu(config, mc)?;
    let dims = chosen
        .par_iter()
        .map(|b| graded_dimensions(b, mc))
        .collect::<Result<Vec<_>>>()?;
    let mut json = Vec::new();
    let mut text = String::new();
    for mut d in dims {
        if let Some(mu) = &only {
            d.modules.retain(|m| &m.mu == mu);
        }
        text.push_str(&format!(
            "block {} defect {}\n  schur {}\n  hecke {}\n",
            d.beta, d.defect, d.schur, d.hecke
        ));
        for m in &d.modules {
            text.push_str(&format!(
                "  {}  upper {}  lower {}\n",
                m.mu, m.upper, m.lower
            ));
        }
        json.push(serde_json::to_value(&d).expect("dimensions serialize"));
    }
    Ok(Document::Value {
        json: Value::Array(json),
        text,
    })
}

fn verify_document(config: &RunConfig, chosen: &[Block], mc: &Multicharge) -> Result<CheckReport> {
    if config.block.is_none() && config.mu.is_none() {
        return verify_all(config.n, mc);
    }
    let checks: Vec<CheckReport> = chosen
        .par_iter()
        .flat_map_iter(|b| {
            [
                verify_block_invariants(b, mc),
                conjugate_duality_check(b, mc),
            ]
        })
        .collect();
    let n = chosen.first().map_or(config.n, |b| b.size());
    Ok(CheckReport::aggregate(
        "verify",
        Scope::new(n, mc, None),
        checks,
    ))
}
