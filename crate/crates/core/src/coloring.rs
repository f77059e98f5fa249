//! Distinguishing 3-colorings.
//!
//! A transitive 2-group on `2^n` points admits three colorings whose only
//! color-preserving element is the identity, with color products
//! `D_n(1) < D_n(2) < D_n(3)`. Solvable groups get a single coloring whose
//! preserver has order at most `√|G|`, through a Sylow 2-subgroup or a Hall
//! 2'-subgroup, whichever is larger.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::permcore::{GroupError, PermGroup};

/// Closure attempts allowed to the Hall subgroup search.
pub const DEFAULT_HALL_BUDGET: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("no subset has trivial setwise stabilizer")]
    GluckExhausted,
    #[error("incomplete Hall subgroup gives preserver of order {preserver_order} for group order {group_order}")]
    HallFallback { preserver_order: u64, group_order: u64 },
    #[error("coloring has length {found}, expected {expected}")]
    Length { expected: usize, found: usize },
}

/// A map from points to colors 1, 2, 3.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Coloring(Vec<u8>);

impl Coloring {
    /// Panics on a color outside `1..=3`.
    pub fn new(colors: Vec<u8>) -> Coloring {
        assert!(colors.iter().all(|c| (1..=3).contains(c)), "colors must be 1, 2 or 3");
        Coloring(colors)
    }

    pub fn constant(n: usize) -> Coloring {
        Coloring(vec![1; n])
    }

    pub fn colors(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sizes of the color classes of 1, 2 and 3.
    pub fn class_sizes(&self) -> [usize; 3] {
        let mut sizes = [0; 3];
        for &c in &self.0 {
            sizes[c as usize - 1] += 1;
        }
        sizes
    }

    pub fn exponent_pair(&self) -> ExponentPair {
        let [_, twos, threes] = self.class_sizes();
        ExponentPair {
            twos: twos as u64,
            threes: threes as u64,
        }
    }

    /// Renames colors so class sizes are nonincreasing; equal sizes keep
    /// their relative order.
    pub fn sorted_by_class_size(&self) -> Coloring {
        let sizes = self.class_sizes();
        let mut order = [1u8, 2, 3];
        order.sort_by_key(|&c| std::cmp::Reverse(sizes[c as usize - 1]));
        let mut rename = [0u8; 4];
        for (new, &old) in order.iter().enumerate() {
            rename[old as usize] = new as u8 + 1;
        }
        Coloring(self.0.iter().map(|&c| rename[c as usize]).collect())
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

/// The color product `2^twos · 3^threes`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentPair {
    pub twos: u64,
    pub threes: u64,
}

impl ExponentPair {
    pub const fn new(twos: u64, threes: u64) -> Self {
        ExponentPair { twos, threes }
    }

    pub fn value(&self) -> BigUint {
        BigUint::from(2u32).pow(self.twos as u32) * BigUint::from(3u32).pow(self.threes as u32)
    }
}

impl std::ops::Add for ExponentPair {
    type Output = ExponentPair;
    fn add(self, o: ExponentPair) -> ExponentPair {
        ExponentPair::new(self.twos + o.twos, self.threes + o.threes)
    }
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2^{}*3^{}", self.twos, self.threes)
    }
}

/// Target products `D_n(1), D_n(2), D_n(3)` at level `n`.
pub fn d_values(n: u32) -> [ExponentPair; 3] {
    let mut d = [ExponentPair::new(0, 0), ExponentPair::new(1, 0), ExponentPair::new(0, 1)];
    for _ in 0..n {
        d = [d[0] + d[1], d[0] + d[2], d[1] + d[2]];
    }
    d
}

/// Elements of `group` preserving every color of `f`.
pub fn color_preservers(group: &PermGroup, f: &Coloring) -> Result<PermGroup, ColoringError> {
    if f.len() != group.degree() {
        return Err(ColoringError::Length {
            expected: group.degree(),
            found: f.len(),
        });
    }
    let colors = f.colors();
    Ok(group.filter_subgroup(|g| {
        colors
            .iter()
            .enumerate()
            .all(|(x, &c)| colors[g.apply(x as u32) as usize] == c)
    })?)
}

/// Three colorings of a transitive 2-group with trivial preservers and
/// products `D_n(1), D_n(2), D_n(3)`.
pub fn color_2group(group: &PermGroup) -> Result<[Coloring; 3], ColoringError> {
    if !group.is_two_group()? {
        return Err(GroupError::NotTwoGroup.into());
    }
    if !group.is_transitive() {
        return Err(GroupError::NotTransitive.into());
    }
    let [a, b, c] = split_and_color(group)?;
    Ok([Coloring(a), Coloring(b), Coloring(c)])
}

fn split_and_color(group: &PermGroup) -> Result<[Vec<u8>; 3], GroupError> {
    let n = group.degree();
    if n == 1 {
        return Ok([vec![1], vec![2], vec![3]]);
    }
    let system = group.two_block_system()?;
    let kernel = group.action_kernel(&system)?;
    let mut halves = Vec::with_capacity(2);
    for block in system.blocks() {
        let mut pts = block.clone();
        pts.sort_unstable();
        let sub = split_and_color(&kernel.restrict_action(&pts)?)?;
        halves.push((pts, sub));
    }
    let (first, second) = (&halves[0], &halves[1]);
    // (color index on the first block, color index on the second)
    let plan = [(0, 1), (0, 2), (1, 2)];
    Ok(plan.map(|(i, j)| {
        let mut out = vec![0; n];
        for (k, &x) in first.0.iter().enumerate() {
            out[x as usize] = first.1[i][k];
        }
        for (k, &x) in second.0.iter().enumerate() {
            out[x as usize] = second.1[j][k];
        }
        out
    }))
}

/// One coloring with trivial preserver for a possibly intransitive 2-group:
/// each orbit gets the first coloring of its transitive constituent.
pub fn color_2group_any(group: &PermGroup) -> Result<Coloring, ColoringError> {
    if !group.is_two_group()? {
        return Err(GroupError::NotTwoGroup.into());
    }
    let mut out = vec![0; group.degree()];
    for orbit in group.orbits() {
        let mut pts = orbit;
        pts.sort_unstable();
        let [first, ..] = split_and_color(&group.restrict_action(&pts)?)?;
        for (k, &x) in pts.iter().enumerate() {
            out[x as usize] = first[k];
        }
    }
    Ok(Coloring(out))
}

/// First subset (by size, then lexicographically) whose setwise stabilizer
/// in the odd-order `group` is trivial.
pub fn gluck_set(group: &PermGroup) -> Result<Vec<u32>, ColoringError> {
    let elems = group.elements()?;
    if elems.len() % 2 == 0 {
        return Err(GroupError::NotOddOrder.into());
    }
    let n = group.degree();
    let nontrivial: Vec<_> = elems.iter().filter(|g| !g.is_identity()).collect();
    let mut mask = vec![false; n];
    for size in 0..=n {
        for subset in (0..n as u32).combinations(size) {
            for &x in &subset {
                mask[x as usize] = true;
            }
            let stabilized = nontrivial
                .iter()
                .any(|g| subset.iter().all(|&x| mask[g.apply(x) as usize]));
            for &x in &subset {
                mask[x as usize] = false;
            }
            if !stabilized {
                return Ok(subset);
            }
        }
    }
    Err(ColoringError::GluckExhausted)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringBranch {
    Sylow,
    Hall,
}

#[derive(Clone, Debug)]
pub struct SolvableColoring {
    /// Color classes have nonincreasing sizes.
    pub coloring: Coloring,
    pub preservers: PermGroup,
    pub branch: ColoringBranch,
    /// False when the Hall search stopped short and a smaller odd-order
    /// subgroup was used.
    pub hall_complete: bool,
}

/// A coloring of a solvable group with `|J_f|² ≤ |G|`.
pub fn solvable_coloring(group: &PermGroup) -> Result<SolvableColoring, ColoringError> {
    solvable_coloring_with(group, DEFAULT_HALL_BUDGET)
}

pub fn solvable_coloring_with(group: &PermGroup, hall_budget: usize) -> Result<SolvableColoring, ColoringError> {
    if !group.is_solvable()? {
        return Err(GroupError::NotSolvable.into());
    }
    let order = group.order()?;
    let sylow = group.sylow2()?;
    let two_part = sylow.order()?;
    let (raw, branch, hall_complete) = if two_part >= order / two_part {
        (color_2group_any(&sylow)?, ColoringBranch::Sylow, true)
    } else {
        let hall = group.hall_odd(hall_budget)?;
        let set = gluck_set(&hall.group)?;
        let mut colors = vec![2; group.degree()];
        for x in set {
            colors[x as usize] = 1;
        }
        (Coloring(colors), ColoringBranch::Hall, hall.complete)
    };
    let coloring = raw.sorted_by_class_size();
    let preservers = color_preservers(group, &coloring)?;
    let preserver_order = preservers.order()?;
    if preserver_order.saturating_mul(preserver_order) > order {
        return Err(ColoringError::HallFallback {
            preserver_order,
            group_order: order,
        });
    }
    Ok(SolvableColoring {
        coloring,
        preservers,
        branch,
        hall_complete,
    })
}
