//! Distinct fuzzy subgroup counting and commutativity degree for small
//! finite groups.
//!
//! The pipeline: build a group as a multiplication table, enumerate its
//! subgroup lattice with all permutability relations, model equivalence
//! classes of fuzzy subgroups as chains in that lattice, and compute the
//! commutativity degree sd(G) over ordered class pairs. A brute-force
//! oracle enumerates literal membership maps with exact rational values and
//! re-derives every result definitionally for cross-validation.

pub mod classes;
pub mod cli;
pub mod config;
pub mod degree;
pub mod error;
pub mod group;
pub mod lattice;
pub mod oracle;
pub mod reference;
pub mod report;

pub use error::{Error, Result};
pub use group::{Group, GroupSpec, DEFAULT_MAX_ORDER};
pub use lattice::SubgroupLattice;
