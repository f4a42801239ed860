//! Multipartitions, standard tableaux, residues and the degree/codegree
//! statistics of standard tableaux.

mod charge;
mod multipartition;
mod tableau;

pub use charge::{Multicharge, Regime, Residue};
pub use multipartition::{enumerate_multipartitions, partitions, transpose, Multipartition, Node};
pub use tableau::{
    enumerate_standard, node_degree_stats, std_relative, std_relative_all, RelativeMode,
    StandardTableau,
};
