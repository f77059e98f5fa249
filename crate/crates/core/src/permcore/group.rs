use std::collections::VecDeque;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};

use super::{GroupError, Perm, DEFAULT_BUDGET};

/// Materialized element set of a permutation group, identity first.
#[derive(Clone)]
pub struct Elements {
    perms: Vec<Perm>,
    index: FxHashMap<Perm, u32>,
}

impl Elements {
    pub(crate) fn from_vec(perms: Vec<Perm>) -> Elements {
        let index = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        Elements { perms, index }
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn as_slice(&self) -> &[Perm] {
        &self.perms
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Perm> {
        self.perms.iter()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn contains_images(&self, images: &[u32]) -> bool {
        self.index.contains_key(images)
    }

    pub fn index_of(&self, images: &[u32]) -> Option<u32> {
        self.index.get(images).copied()
    }

    pub fn get(&self, i: u32) -> &Perm {
        &self.perms[i as usize]
    }
}

/// Breadth-first product closure of `gens`; fails once more than `budget`
/// elements have been found.
pub fn closure(degree: usize, gens: &[Perm], budget: usize) -> Result<Elements, GroupError> {
    let id = Perm::identity(degree);
    let mut perms = vec![id.clone()];
    let mut index = FxHashMap::default();
    index.insert(id, 0u32);
    let mut head = 0;
    let mut buf = Vec::with_capacity(degree);
    while head < perms.len() {
        for s in gens {
            s.compose_into(&perms[head], &mut buf);
            if !index.contains_key(buf.as_slice()) {
                if perms.len() >= budget {
                    return Err(GroupError::BudgetExceeded { budget });
                }
                let p = Perm::from_images_unchecked(buf.clone());
                index.insert(p.clone(), perms.len() as u32);
                perms.push(p);
            }
        }
        head += 1;
    }
    Ok(Elements { perms, index })
}

/// A permutation group given by generators, with a lazily materialized
/// element set.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: OnceLock<Arc<Elements>>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .field("order", &self.elements.get().map(|e| e.len()))
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<PermGroup, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup {
            degree,
            generators,
            elements: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: OnceLock::new(),
        }
    }

    /// Wraps a known closed element set together with generators for it.
    pub(crate) fn from_parts(degree: usize, generators: Vec<Perm>, elements: Elements) -> PermGroup {
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(elements));
        PermGroup {
            degree,
            generators,
            elements: cell,
        }
    }

    /// Wraps a closed element set, choosing a small generating set greedily.
    pub(crate) fn from_element_set(degree: usize, perms: Vec<Perm>) -> PermGroup {
        let total = perms.len();
        let mut gens: Vec<Perm> = Vec::new();
        let mut current = closure(degree, &gens, usize::MAX).expect("unbounded");
        for p in &perms {
            if current.len() == total {
                break;
            }
            if !current.contains(p) {
                gens.push(p.clone());
                current = closure(degree, &gens, usize::MAX).expect("unbounded");
            }
        }
        debug_assert_eq!(current.len(), total);
        PermGroup::from_parts(degree, gens, Elements::from_vec(perms))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn is_materialized(&self) -> bool {
        self.elements.get().is_some()
    }

    pub fn elements(&self) -> Result<&Elements, GroupError> {
        self.elements_with_budget(DEFAULT_BUDGET)
    }

    pub fn elements_with_budget(&self, budget: usize) -> Result<&Elements, GroupError> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let e = closure(self.degree, &self.generators, budget)?;
        let _ = self.elements.set(Arc::new(e));
        Ok(self.elements.get().expect("just set"))
    }

    pub fn order(&self) -> Result<u64, GroupError> {
        Ok(self.elements()?.len() as u64)
    }

    pub fn contains(&self, p: &Perm) -> Result<bool, GroupError> {
        Ok(p.degree() == self.degree && self.elements()?.contains(p))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool, GroupError> {
        let big = other.elements()?;
        Ok(self.generators.iter().all(|g| big.contains(g)))
    }

    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orbit.push(y);
                }
            }
            head += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbits as sorted point lists, ordered by their smallest point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree as u32 {
            if assigned[x as usize] {
                continue;
            }
            let orb = self.orbit(x);
            for &y in &orb {
                assigned[y as usize] = true;
            }
            out.push(orb);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// Subgroup of elements satisfying `pred`; the caller guarantees closure.
    pub fn filter_subgroup<F>(&self, pred: F) -> Result<PermGroup, GroupError>
    where
        F: Fn(&Perm) -> bool + Sync,
    {
        let elems = self.elements()?;
        let kept: Vec<Perm> = elems.as_slice().par_iter().filter(|g| pred(g)).cloned().collect();
        Ok(PermGroup::from_element_set(self.degree, kept))
    }

    /// Elements of `self` normalizing the subgroup `sub`.
    pub fn normalizer(&self, sub: &PermGroup) -> Result<PermGroup, GroupError> {
        let sub_elems = sub.elements()?;
        let gens = sub.generators();
        self.filter_subgroup(|g| {
            let mut buf = Vec::new();
            gens.iter().all(|h| {
                h.conjugate_into(g, &mut buf);
                sub_elems.contains_images(&buf)
            })
        })
    }

    pub fn setwise_stabilizer(&self, set: &[u32]) -> Result<PermGroup, GroupError> {
        let mut member = vec![false; self.degree];
        for &x in set {
            member[x as usize] = true;
        }
        self.filter_subgroup(|g| set.iter().all(|&x| member[g.apply(x) as usize]))
    }

    /// `⟨gens⟩` inside this group's degree, with the default budget.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<PermGroup, GroupError> {
        let g = PermGroup::new(self.degree, gens)?;
        g.elements()?;
        Ok(g)
    }

    /// Commutator subgroup, as the normal closure of generator commutators.
    pub fn derived_subgroup(&self) -> Result<PermGroup, GroupError> {
        self.elements()?;
        let mut gens: Vec<Perm> = Vec::new();
        let mut seen = FxHashSet::default();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                if !c.is_identity() && seen.insert(c.clone()) {
                    gens.push(c);
                }
            }
        }
        let mut sub = closure(self.degree, &gens, DEFAULT_BUDGET)?;
        loop {
            let mut added = false;
            let mut k = 0;
            while k < gens.len() {
                for g in &self.generators {
                    let c = gens[k].conjugate_by(g);
                    if !sub.contains(&c) {
                        gens.push(c);
                        sub = closure(self.degree, &gens, DEFAULT_BUDGET)?;
                        added = true;
                    }
                }
                k += 1;
            }
            if !added {
                break;
            }
        }
        Ok(PermGroup::from_parts(self.degree, gens, sub))
    }

    /// `G = G⁽⁰⁾ ⊵ G⁽¹⁾ ⊵ ...` until the series stabilizes.
    pub fn derived_series(&self) -> Result<Vec<PermGroup>, GroupError> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let next = last.derived_subgroup()?;
            if next.order()? == last.order()? {
                break;
            }
            series.push(next);
        }
        Ok(series)
    }

    pub fn is_solvable(&self) -> Result<bool, GroupError> {
        let series = self.derived_series()?;
        Ok(series.last().unwrap().order()? == 1)
    }

    pub fn is_perfect(&self) -> Result<bool, GroupError> {
        Ok(self.derived_subgroup()?.order()? == self.order()?)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Number of conjugacy classes, counting orbits of conjugation by the
    /// generators.
    pub fn conjugacy_class_count(&self) -> Result<usize, GroupError> {
        let elems = self.elements()?;
        let mut seen = vec![false; elems.len()];
        let mut classes = 0;
        let mut queue = VecDeque::new();
        let mut buf = Vec::with_capacity(self.degree);
        for start in 0..elems.len() {
            if seen[start] {
                continue;
            }
            classes += 1;
            seen[start] = true;
            queue.push_back(start as u32);
            while let Some(i) = queue.pop_front() {
                let x = elems.get(i);
                for g in &self.generators {
                    x.conjugate_into(g, &mut buf);
                    let j = elems.index_of(&buf).expect("closed under conjugation") as usize;
                    if !seen[j] {
                        seen[j] = true;
                        queue.push_back(j as u32);
                    }
                }
            }
        }
        Ok(classes)
    }

    pub fn is_two_group(&self) -> Result<bool, GroupError> {
        Ok(self.order()?.is_power_of_two())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[&[u32]]) -> Perm {
        Perm::from_cycles(n, c).unwrap()
    }

    fn sym3() -> PermGroup {
        PermGroup::new(3, vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(PermGroup::trivial(4).order().unwrap(), 1);
        assert_eq!(sym3().order().unwrap(), 6);
        let big = PermGroup::new(6, vec![cyc(6, &[&[0, 1]]), cyc(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        assert_eq!(
            big.elements_with_budget(100).err(),
            Some(GroupError::BudgetExceeded { budget: 100 })
        );
        assert_eq!(big.order().unwrap(), 720);
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(PermGroup::trivial(4).orbits().len(), 4);
        let g = PermGroup::new(4, vec![cyc(4, &[&[0, 1], &[2, 3]])]).unwrap();
        assert_eq!(g.orbits(), vec![vec![0, 1], vec![2, 3]]);
        assert!(!g.is_transitive());
    }

    #[test]
    fn derived_series_of_sym3() {
        let series = sym3().derived_series().unwrap();
        let orders: Vec<u64> = series.iter().map(|g| g.order().unwrap()).collect();
        assert_eq!(orders, vec![6, 3, 1]);
        assert!(sym3().is_solvable().unwrap());
    }

    #[test]
    fn class_counts() {
        assert_eq!(sym3().conjugacy_class_count().unwrap(), 3);
        let c6 = PermGroup::new(6, vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        assert_eq!(c6.conjugacy_class_count().unwrap(), 6);
    }

    #[test]
    fn stabilizers() {
        let g = sym3();
        assert_eq!(g.setwise_stabilizer(&[0, 1, 2]).unwrap().order().unwrap(), 6);
        assert_eq!(g.setwise_stabilizer(&[0, 1]).unwrap().order().unwrap(), 2);
        let c3 = PermGroup::new(3, vec![cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(c3.setwise_stabilizer(&[0]).unwrap().order().unwrap(), 1);
    }

    #[test]
    fn greedy_generators_regenerate_the_group() {
        let g = sym3();
        let elems = g.elements().unwrap().as_slice().to_vec();
        let h = PermGroup::from_element_set(3, elems);
        assert!(h.generators().len() <= 2);
        let again = PermGroup::new(3, h.generators().to_vec()).unwrap();
        assert_eq!(again.order().unwrap(), 6);
    }
}
