//! Largest solvable subgroup order S(G) by the cyclic extension method.
//!
//! Every solvable group has a subnormal series with prime-order cyclic
//! factors, so every solvable subgroup `K` arises as `⟨H, g⟩` with `H` a
//! solvable subgroup, `g ∈ N_G(H)` and `g^p ∈ H` for a prime `p`. Starting
//! from the trivial group and closing under such extensions therefore
//! reaches every solvable subgroup. Subgroups are kept either up to
//! conjugacy in `G` (the default) or as exact element sets.

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::constructors::{direct_product, pgammal2, ConstructError};
use crate::permcore::{Elements, GroupError, Perm, PermGroup};

/// Default cap on the number of stored subgroups.
pub const DEFAULT_SEARCH_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Dedup {
    /// One representative per conjugacy class of solvable subgroups.
    #[default]
    Conjugacy,
    /// Every solvable subgroup.
    Exact,
}

#[derive(Clone, Debug)]
pub struct SolvableSearchResult {
    pub s_value: u64,
    /// Generators of a solvable subgroup of order `s_value`.
    pub witness: Vec<Perm>,
    pub subgroups_visited: usize,
    /// When set, `s_value` is only a lower bound.
    pub budget_hit: bool,
}

/// Solvable subgroups found by the search, in discovery order (which is
/// nondecreasing in order).
#[derive(Clone, Debug)]
pub struct SubgroupCatalog {
    pub subgroups: Vec<PermGroup>,
    pub budget_hit: bool,
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    #[inline]
    fn get(&self, i: u32) -> bool {
        self.0[(i >> 6) as usize] >> (i & 63) & 1 == 1
    }
    #[inline]
    fn set(&mut self, i: u32) {
        self.0[(i >> 6) as usize] |= 1 << (i & 63);
    }
}

struct Subgroup {
    members: Vec<u32>,
    bits: Bits,
    gens: Vec<u32>,
}

/// Index arithmetic over a materialized group.
struct Indexed<'a> {
    elems: &'a Elements,
    cycle_class: Vec<u32>,
}

impl<'a> Indexed<'a> {
    fn new(elems: &'a Elements) -> Self {
        let mut ids: FxHashMap<Vec<u32>, u32> = FxHashMap::default();
        let cycle_class = elems
            .iter()
            .map(|p| {
                let next = ids.len() as u32;
                *ids.entry(p.cycle_type()).or_insert(next)
            })
            .collect();
        Indexed { elems, cycle_class }
    }

    fn len(&self) -> usize {
        self.elems.len()
    }

    fn mul(&self, a: u32, b: u32, buf: &mut Vec<u32>) -> u32 {
        self.elems.get(a).compose_into(self.elems.get(b), buf);
        self.elems.index_of(buf).expect("group is closed")
    }

    /// Index of `x h x⁻¹`.
    fn conj(&self, h: u32, x: u32, buf: &mut Vec<u32>) -> Option<u32> {
        self.elems.get(h).conjugate_into(self.elems.get(x), buf);
        self.elems.index_of(buf)
    }

    fn normalizes(&self, x: u32, sub: &Subgroup, buf: &mut Vec<u32>) -> bool {
        sub.gens
            .iter()
            .all(|&h| self.conj(h, x, buf).is_some_and(|c| sub.bits.get(c)))
    }

    fn invariant(&self, members: &[u32]) -> Vec<(u32, u32)> {
        let mut counts: FxHashMap<u32, u32> = FxHashMap::default();
        for &m in members {
            *counts.entry(self.cycle_class[m as usize]).or_default() += 1;
        }
        let mut inv: Vec<(u32, u32)> = counts.into_iter().collect();
        inv.sort_unstable();
        inv.push((u32::MAX, members.len() as u32));
        inv
    }

    /// Some `x` in the group with `x K x⁻¹ = R`, for `|K| = |R|`.
    fn are_conjugate(&self, k: &Subgroup, r: &Subgroup) -> bool {
        (0..self.len() as u32).into_par_iter().any(|x| {
            let mut buf = Vec::new();
            k.gens
                .iter()
                .all(|&h| self.conj(h, x, &mut buf).is_some_and(|c| r.bits.get(c)))
        })
    }
}

struct Search<'a> {
    ix: Indexed<'a>,
    dedup: Dedup,
    subgroups: Vec<Subgroup>,
    exact: FxHashMap<Vec<u64>, usize>,
    buckets: FxHashMap<Vec<(u32, u32)>, Vec<usize>>,
    budget: usize,
    budget_hit: bool,
}

impl<'a> Search<'a> {
    /// Records `cand` unless an equal (or conjugate) subgroup is known.
    fn insert(&mut self, cand: Subgroup) {
        match self.dedup {
            Dedup::Exact => {
                if self.exact.contains_key(&cand.bits.0) {
                    return;
                }
                self.exact.insert(cand.bits.0.clone(), self.subgroups.len());
            }
            Dedup::Conjugacy => {
                let key = self.ix.invariant(&cand.members);
                let bucket = self.buckets.entry(key).or_default();
                if bucket
                    .iter()
                    .any(|&r| self.ix.are_conjugate(&cand, &self.subgroups[r]))
                {
                    return;
                }
                bucket.push(self.subgroups.len());
            }
        }
        self.subgroups.push(cand);
    }

    /// All `⟨H, g⟩` with `g ∈ N(H)` of prime order modulo `H`.
    fn extensions(&self, h: &Subgroup) -> Vec<Subgroup> {
        let n = self.ix.len();
        let normalizer: Vec<u32> = (0..n as u32)
            .into_par_iter()
            .filter(|&x| !h.bits.get(x) && self.ix.normalizes(x, h, &mut Vec::new()))
            .collect();
        let mut covered = Bits::new(n);
        let mut out = Vec::new();
        let mut buf = Vec::new();
        for g in normalizer {
            if covered.get(g) {
                continue;
            }
            let mut power = g;
            let mut k = 1u64;
            while !h.bits.get(power) {
                power = self.ix.mul(power, g, &mut buf);
                k += 1;
            }
            if !crate::gfield::is_prime(k) {
                continue;
            }
            let mut members = h.members.clone();
            let mut bits = h.bits.clone();
            let mut gi = g;
            for _ in 1..k {
                for &x in &h.members {
                    let y = self.ix.mul(gi, x, &mut buf);
                    bits.set(y);
                    covered.set(y);
                    members.push(y);
                }
                gi = self.ix.mul(gi, g, &mut buf);
            }
            let mut gens = h.gens.clone();
            gens.push(g);
            out.push(Subgroup { members, bits, gens });
        }
        out
    }

    fn run(&mut self) {
        let trivial = {
            let mut bits = Bits::new(self.ix.len());
            bits.set(0);
            Subgroup {
                members: vec![0],
                bits,
                gens: Vec::new(),
            }
        };
        self.insert(trivial);
        let mut next = 0;
        while next < self.subgroups.len() {
            if self.subgroups.len() > self.budget {
                self.budget_hit = true;
                break;
            }
            let exts = self.extensions(&self.subgroups[next]);
            for k in exts {
                self.insert(k);
            }
            next += 1;
        }
    }
}

fn search(group: &PermGroup, dedup: Dedup, budget: usize) -> Result<(Search<'_>, &Elements), GroupError> {
    let elems = group.elements()?;
    let mut s = Search {
        ix: Indexed::new(elems),
        dedup,
        subgroups: Vec::new(),
        exact: FxHashMap::default(),
        buckets: FxHashMap::default(),
        budget,
        budget_hit: false,
    };
    s.run();
    Ok((s, elems))
}

fn to_group(degree: usize, elems: &Elements, sub: &Subgroup) -> PermGroup {
    let gens = sub.gens.iter().map(|&i| elems.get(i).clone()).collect();
    let members = sub.members.iter().map(|&i| elems.get(i).clone()).collect();
    PermGroup::from_parts(degree, gens, Elements::from_vec(members))
}

/// S(G) with the default budget, up to conjugacy.
pub fn s_max(group: &PermGroup) -> Result<SolvableSearchResult, GroupError> {
    s_max_with(group, Dedup::Conjugacy, DEFAULT_SEARCH_BUDGET)
}

pub fn s_max_with(group: &PermGroup, dedup: Dedup, budget: usize) -> Result<SolvableSearchResult, GroupError> {
    let (s, elems) = search(group, dedup, budget)?;
    let best = s
        .subgroups
        .iter()
        .enumerate()
        .max_by_key(|(i, sub)| (sub.members.len(), std::cmp::Reverse(*i)))
        .map(|(_, sub)| sub)
        .expect("trivial subgroup is always present");
    Ok(SolvableSearchResult {
        s_value: best.members.len() as u64,
        witness: best.gens.iter().map(|&i| elems.get(i).clone()).collect(),
        subgroups_visited: s.subgroups.len(),
        budget_hit: s.budget_hit,
    })
}

/// All solvable subgroups (or one per conjugacy class).
pub fn solvable_subgroups(group: &PermGroup, dedup: Dedup, budget: usize) -> Result<SubgroupCatalog, GroupError> {
    let (s, elems) = search(group, dedup, budget)?;
    Ok(SubgroupCatalog {
        subgroups: s
            .subgroups
            .iter()
            .map(|sub| to_group(group.degree(), elems, sub))
            .collect(),
        budget_hit: s.budget_hit,
    })
}

/// S(Aut(PSL₂(q))) computed inside PΓL₂(q).
pub fn s_aut_psl2(q: u64) -> Result<SolvableSearchResult, ConstructError> {
    Ok(s_max(&pgammal2(q)?)?)
}

#[derive(Clone, Debug)]
pub struct ProductCheck {
    pub s_a: u64,
    pub s_b: u64,
    pub s_product: u64,
    pub holds: bool,
}

/// Checks `S(A × B) = S(A)·S(B)`.
pub fn s_product_check(a: &PermGroup, b: &PermGroup) -> Result<ProductCheck, GroupError> {
    let s_a = s_max(a)?.s_value;
    let s_b = s_max(b)?.s_value;
    let s_product = s_max(&direct_product(a, b))?.s_value;
    Ok(ProductCheck {
        s_a,
        s_b,
        s_product,
        holds: s_product == s_a * s_b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{alt, cyclic, sym};

    #[test]
    fn abelian_groups_are_their_own_s() {
        let g = direct_product(&cyclic(4), &cyclic(3));
        assert_eq!(s_max(&g).unwrap().s_value, 12);
    }

    #[test]
    fn alt5_has_s_12() {
        let r = s_max(&alt(5)).unwrap();
        assert_eq!(r.s_value, 12);
        assert!(!r.budget_hit);
        let w = PermGroup::new(5, r.witness.clone()).unwrap();
        assert_eq!(w.order().unwrap(), 12);
        assert!(w.is_solvable().unwrap());
    }

    #[test]
    fn exact_and_conjugacy_modes_agree() {
        for g in [sym(4), alt(5), sym(5)] {
            let a = s_max_with(&g, Dedup::Exact, DEFAULT_SEARCH_BUDGET).unwrap();
            let b = s_max_with(&g, Dedup::Conjugacy, DEFAULT_SEARCH_BUDGET).unwrap();
            assert_eq!(a.s_value, b.s_value);
            assert!(a.subgroups_visited >= b.subgroups_visited);
        }
        // Sym(4): 11 classes of subgroups, all solvable; 30 subgroups in total
        let exact = solvable_subgroups(&sym(4), Dedup::Exact, 1000).unwrap();
        assert_eq!(exact.subgroups.len(), 30);
        let classes = solvable_subgroups(&sym(4), Dedup::Conjugacy, 1000).unwrap();
        assert_eq!(classes.subgroups.len(), 11);
    }

    #[test]
    fn budget_marks_lower_bound() {
        let r = s_max_with(&sym(5), Dedup::Exact, 5).unwrap();
        assert!(r.budget_hit);
        assert!(r.s_value < 24);
    }

    #[test]
    fn product_rule_small() {
        let c = s_product_check(&sym(3), &sym(3)).unwrap();
        assert!(c.holds);
        assert_eq!(c.s_product, 36);
    }
}
