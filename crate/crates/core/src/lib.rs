//! Distinguishing 3-colorings of permutation groups, exact solvable-subgroup
//! search, and certified verification of the character-degree bounds for
//! finite simple groups.

pub mod chardeg;
pub mod coloring;
pub mod constructors;
pub mod corpus;
pub mod gfield;
pub mod oracle;
pub mod permcore;
pub mod ssearch;
pub mod verifier;

pub use permcore::{BlockSystem, GroupError, Perm, PermGroup};
