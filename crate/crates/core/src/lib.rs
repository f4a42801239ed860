//! Graded combinatorics of quiver Schur algebras for the linear quiver
//! (`e = 0`) and for cyclic quivers with `e >= n`.
//!
//! The crate computes tableau degree statistics, blocks and defects, graded
//! dimensions, and, through a straightening algorithm on the higher-level
//! Fock space, canonical bases, graded decomposition matrices, Cartan
//! matrices and tilting multiplicities. All arithmetic is exact.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod fock;
pub mod laurent;
pub mod oracle;
pub mod roots;

pub use combinatorics::{Multicharge, Multipartition, Node, StandardTableau};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use roots::{Block, RootVector};
