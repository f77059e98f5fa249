//! Permutation groups by full element enumeration.
//!
//! Groups are kept as generator lists; the element set is materialized on
//! first use under an element budget. Every subgroup operation (kernels,
//! stabilizers, normalizers, Sylow and Hall subgroups) is a filter or a
//! closure over that set.

mod blocks;
mod group;
mod perm;
mod sylow;

use thiserror::Error;

pub use blocks::BlockSystem;
pub use group::{closure, Elements, PermGroup};
pub use perm::Perm;
pub use sylow::HallOutcome;

/// Default cap on materialized element sets.
pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("element budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a bijection: {0:?}")]
    NotBijection(Vec<u32>),
    #[error("group is not transitive")]
    NotTransitive,
    #[error("group is not a 2-group")]
    NotTwoGroup,
    #[error("group has even order")]
    NotOddOrder,
    #[error("group is not solvable")]
    NotSolvable,
    #[error("point set is not invariant under the group")]
    NotInvariant,
    #[error("blocks do not partition the points")]
    NotPartition,
    #[error("translates of the set do not form a block system")]
    NotBlock,
    #[error("invalid point arguments")]
    InvalidPoints,
    #[error("generator file: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

/// Parses the generator file format: the first non-comment line is the
/// degree, every further line one generator as space-separated 0-based
/// images. `#` starts a comment.
pub fn parse_generators(text: &str) -> Result<PermGroup, GroupError> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .enumerate()
        .filter(|(_, l)| !l.is_empty());
    let (_, first) = lines
        .next()
        .ok_or_else(|| GroupError::Parse("missing degree line".into()))?;
    let degree: usize = first
        .parse()
        .map_err(|_| GroupError::Parse(format!("bad degree {first:?}")))?;
    let mut gens = Vec::new();
    for (lineno, line) in lines {
        let images = line
            .split_whitespace()
            .map(|t| t.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| GroupError::Parse(format!("line {}: {e}", lineno + 1)))?;
        if images.len() != degree {
            return Err(GroupError::Parse(format!(
                "line {}: expected {degree} images, found {}",
                lineno + 1,
                images.len()
            )));
        }
        gens.push(Perm::from_images(images)?);
    }
    PermGroup::new(degree, gens)
}

/// Inverse of [`parse_generators`].
pub fn format_generators(group: &PermGroup) -> String {
    let mut out = format!("{}\n", group.degree());
    for g in group.generators() {
        let line: Vec<String> = g.images().iter().map(|x| x.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
