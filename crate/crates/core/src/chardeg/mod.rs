//! Character degrees: PSL₂(q) by closed formula, symmetric and alternating
//! groups by hook lengths, and the embedded tables.

pub mod dataset;

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::gfield::prime_power;

pub use dataset::{tables, SporadicRow, Tables};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharDegError {
    #[error("{0} is not a prime power >= 4")]
    BadOrder(u64),
    #[error("degree multiset for q = {q} fails {check}")]
    Invariant { q: u64, check: &'static str },
    #[error("invalid partition {0:?}")]
    BadPartition(Vec<u32>),
    #[error("rank {0} outside 5..=40")]
    BadRank(u32),
    #[error("dataset checksum mismatch: expected {expected}, found {found}")]
    Checksum { expected: String, found: String },
    #[error("dataset: {0}")]
    Dataset(String),
}

/// Degrees with multiplicities, ascending by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeMultiset {
    entries: Vec<(u64, u64)>,
}

impl DegreeMultiset {
    /// Merges repeated degrees and drops zero multiplicities.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut entries: Vec<(u64, u64)> = pairs.into_iter().filter(|&(_, m)| m > 0).collect();
        entries.sort_unstable();
        entries.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
        DegreeMultiset { entries }
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn max_degree(&self) -> u64 {
        self.entries.last().map_or(0, |e| e.0)
    }

    /// Number of irreducible characters, which is the class count.
    pub fn count(&self) -> u64 {
        self.entries.iter().map(|e| e.1).sum()
    }

    pub fn sum_of_squares(&self) -> u128 {
        self.entries.iter().map(|&(d, m)| m as u128 * (d as u128).pow(2)).sum()
    }

    pub fn contains(&self, degree: u64) -> bool {
        self.entries.iter().any(|e| e.0 == degree)
    }
}

impl fmt::Display for DegreeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|&(d, m)| if m == 1 { d.to_string() } else { format!("{d}x{m}") })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn check_psl2_order(q: u64) -> Result<(), CharDegError> {
    match prime_power(q) {
        Some(_) if q >= 4 => Ok(()),
        _ => Err(CharDegError::BadOrder(q)),
    }
}

pub fn psl2_order(q: u64) -> u128 {
    let q = q as u128;
    q * (q * q - 1) / if q.is_multiple_of(2) { 1 } else { 2 }
}

pub fn psl2_class_count(q: u64) -> u64 {
    if q.is_multiple_of(2) {
        q + 1
    } else {
        (q + 5) / 2
    }
}

/// Irreducible character degrees of PSL₂(q), checked against the group
/// order and class count before returning.
pub fn psl2_degrees(q: u64) -> Result<DegreeMultiset, CharDegError> {
    check_psl2_order(q)?;
    let pairs = if q.is_multiple_of(2) {
        vec![(1, 1), (q, 1), (q - 1, q / 2), (q + 1, q / 2 - 1)]
    } else if q % 4 == 1 {
        vec![(1, 1), (q, 1), (q.div_ceil(2), 2), (q - 1, (q - 1) / 4), (q + 1, (q - 5) / 4)]
    } else {
        vec![(1, 1), (q, 1), ((q - 1) / 2, 2), (q - 1, (q - 3) / 4), (q + 1, (q - 3) / 4)]
    };
    let m = DegreeMultiset::from_pairs(pairs);
    if m.sum_of_squares() != psl2_order(q) {
        return Err(CharDegError::Invariant { q, check: "sum of squares" });
    }
    if m.count() != psl2_class_count(q) {
        return Err(CharDegError::Invariant { q, check: "class count" });
    }
    Ok(m)
}

/// Largest character degree of PSL₂(q).
pub fn b_psl2(q: u64) -> Result<u64, CharDegError> {
    Ok(psl2_degrees(q)?.max_degree())
}

/// `(q−1, q, q+1)`, whose product is `q³ − q`.
pub fn psl2_triple(q: u64) -> Result<(u64, u64, u64), CharDegError> {
    check_psl2_order(q)?;
    Ok((q - 1, q, q + 1))
}

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Partition, CharDegError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CharDegError::BadPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((1..=cols).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(left: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for part in (1..=cap.min(left)).rev() {
                cur.push(part);
                rec(left - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Degree of the irreducible character of Sym(n) indexed by `shape`.
pub fn hook_degree(shape: &Partition) -> BigUint {
    let conj = shape.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j) + (conj.parts()[j as usize] - i as u32) - 1;
            hooks *= hook;
        }
    }
    let factorial: BigUint = (1..=shape.size()).map(BigUint::from).product();
    factorial / hooks
}

/// Largest character degree of Sym(n).
pub fn b_sym(n: u32) -> BigUint {
    Partition::all(n).iter().map(hook_degree).max().unwrap_or_else(BigUint::one)
}

/// Largest character degree of Alt(n): characters of self-conjugate
/// shapes split into two halves on restriction.
pub fn b_alt(n: u32) -> Result<BigUint, CharDegError> {
    if !(5..=40).contains(&n) {
        return Err(CharDegError::BadRank(n));
    }
    Ok(Partition::all(n)
        .iter()
        .map(|p| {
            let d = hook_degree(p);
            if p.is_self_conjugate() {
                d / 2u32
            } else {
                d
            }
        })
        .max()
        .expect("n >= 5 has partitions"))
}

/// The 26 sporadic rows.
pub fn sporadic_table() -> Result<Vec<SporadicRow>, CharDegError> {
    Ok(tables()?.sporadic)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn psl2_examples() {
        assert_eq!(psl2_degrees(8).unwrap().entries(), &[(1, 1), (7, 4), (8, 1), (9, 3)]);
        assert_eq!(psl2_degrees(5).unwrap().entries(), &[(1, 1), (3, 2), (4, 1), (5, 1)]);
        assert_eq!(
            psl2_degrees(7).unwrap().entries(),
            &[(1, 1), (3, 2), (6, 1), (7, 1), (8, 1)]
        );
        assert_eq!(psl2_degrees(8).unwrap().sum_of_squares(), 504);
        assert_eq!(psl2_degrees(8).unwrap().count(), 9);
        assert_eq!(b_psl2(5).unwrap(), 5);
        assert_eq!(b_psl2(7).unwrap(), 8);
        assert_eq!(b_psl2(9).unwrap(), 10);
        assert_eq!(psl2_triple(8).unwrap(), (7, 8, 9));
        assert!(matches!(psl2_degrees(6), Err(CharDegError::BadOrder(6))));
        assert!(matches!(psl2_degrees(3), Err(CharDegError::BadOrder(3))));
    }

    #[test]
    fn psl2_invariants_up_to_64() {
        for q in 4..=64 {
            if prime_power(q).is_some() {
                let m = psl2_degrees(q).unwrap();
                assert_eq!(m.sum_of_squares(), psl2_order(q));
                if q >= 7 {
                    assert_eq!(m.max_degree(), q + 1, "q = {q}");
                }
            }
        }
    }

    #[test]
    fn hook_examples() {
        assert_eq!(hook_degree(&p(&[5])), BigUint::one());
        assert_eq!(hook_degree(&p(&[5, 1])), BigUint::from(5u32));
        assert_eq!(hook_degree(&p(&[2, 2])), BigUint::from(2u32));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert!(p(&[2, 1]).is_self_conjugate());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn squares_of_hook_degrees_sum_to_factorial() {
        for n in 1..=12u32 {
            let total: BigUint = Partition::all(n).iter().map(|p| hook_degree(p).pow(2)).sum();
            let fact: BigUint = (1..=n).map(BigUint::from).product();
            assert_eq!(total, fact, "n = {n}");
        }
        let counts: Vec<usize> = (1..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn alternating_values() {
        let vals: Vec<BigUint> = (7..=10).map(|n| b_alt(n).unwrap()).collect();
        assert_eq!(vals, [35u32, 70, 216, 567].map(BigUint::from));
        assert_eq!(b_alt(5).unwrap(), BigUint::from(5u32));
        assert_eq!(b_alt(6).unwrap(), BigUint::from(10u32));
        for n in 5..=14 {
            assert!(b_alt(n).unwrap() <= b_sym(n));
        }
        assert!(b_alt(4).is_err());
    }

    #[test]
    fn sporadic_rows() {
        let rows = sporadic_table().unwrap();
        let find = |name: &str| rows.iter().find(|r| r.name == name).unwrap();
        assert_eq!(find("M11").s_aut, BigUint::from(144u32));
        assert_eq!(find("M11").b, BigUint::from(55u32));
        assert_eq!(find("J1").b, BigUint::from(209u32));
        assert_eq!(find("M").b.to_string(), "258823477531055064045234375");
        assert_eq!(find("M").s_aut.to_string(), "2849934139195390");
    }
}
