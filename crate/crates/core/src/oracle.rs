//! Brute-force reference implementations for small inputs. They share no
//! code paths with the fast algorithms they check.

use std::collections::{BTreeSet, HashMap};

use crate::chardeg::Partition;
use crate::coloring::Coloring;
use crate::permcore::{GroupError, Perm, PermGroup};

/// Largest group order the subgroup enumerators accept.
pub const SUBGROUP_ORACLE_LIMIT: u64 = 2000;

/// Multiplication table of a fully enumerated group.
struct Table {
    elems: Vec<Perm>,
    mul: Vec<u32>,
    identity: u32,
}

impl Table {
    fn new(group: &PermGroup) -> Result<Table, GroupError> {
        let elems: Vec<Perm> = group.elements()?.iter().cloned().collect();
        let index: HashMap<&[u32], u32> = elems.iter().enumerate().map(|(i, p)| (p.images(), i as u32)).collect();
        let n = elems.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                mul.push(index[a.compose(b).images()]);
            }
        }
        let identity = elems.iter().position(Perm::is_identity).expect("identity present") as u32;
        Ok(Table { elems, mul, identity })
    }

    fn len(&self) -> usize {
        self.elems.len()
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.len() + b as usize]
    }

    /// Subgroup generated by `gens`, as sorted element indices.
    fn generate(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.len()];
        let mut members = vec![self.identity];
        seen[self.identity as usize] = true;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    fn to_group(&self, degree: usize, members: &[u32]) -> Result<PermGroup, GroupError> {
        PermGroup::new(degree, members.iter().map(|&i| self.elems[i as usize].clone()).collect())
    }
}

fn check_size(group: &PermGroup) -> Result<u64, GroupError> {
    let order = group.order()?;
    if order > SUBGROUP_ORACLE_LIMIT {
        return Err(GroupError::BudgetExceeded { budget: SUBGROUP_ORACLE_LIMIT as usize });
    }
    Ok(order)
}

/// Every subgroup, found by adjoining one element at a time to the
/// subgroups already found (cyclic, then 2-generated, 3-generated, ...)
/// until nothing new appears. Subgroups are sorted element-index sets.
fn all_subgroups(table: &Table) -> BTreeSet<Vec<u32>> {
    let n = table.len() as u32;
    // ⟨H, g⟩ depends only on ⟨g⟩
    let mut cyclic_seen = BTreeSet::new();
    let reps: Vec<u32> = (0..n).filter(|&g| cyclic_seen.insert(table.generate(&[g]))).collect();
    let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut frontier: Vec<Vec<u32>> = vec![vec![table.identity]];
    found.insert(vec![table.identity]);
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for sub in &frontier {
            let mut in_sub = vec![false; n as usize];
            for &x in sub {
                in_sub[x as usize] = true;
            }
            for &g in reps.iter().filter(|&&g| !in_sub[g as usize]) {
                let mut gens = sub.clone();
                gens.push(g);
                let joined = table.generate(&gens);
                if found.insert(joined.clone()) {
                    next.push(joined);
                }
            }
        }
        frontier = next;
    }
    found
}

/// Number of subgroups of a group of order at most 2000.
pub fn subgroup_count(group: &PermGroup) -> Result<usize, GroupError> {
    check_size(group)?;
    Ok(all_subgroups(&Table::new(group)?).len())
}

/// Largest solvable subgroup order, by enumerating every subgroup and
/// testing the largest ones for solvability.
pub fn brute_s_max(group: &PermGroup) -> Result<u64, GroupError> {
    check_size(group)?;
    let table = Table::new(group)?;
    let mut subs: Vec<Vec<u32>> = all_subgroups(&table).into_iter().collect();
    subs.sort_by_key(|s| std::cmp::Reverse(s.len()));
    for s in subs {
        if table.to_group(group.degree(), &s)?.is_solvable()? {
            return Ok(s.len() as u64);
        }
    }
    unreachable!("the trivial subgroup is solvable")
}

/// Largest proper subgroup order.
pub fn m_max(group: &PermGroup) -> Result<u64, GroupError> {
    let order = check_size(group)?;
    let table = Table::new(group)?;
    Ok(all_subgroups(&table)
        .iter()
        .map(|s| s.len() as u64)
        .filter(|&k| k < order)
        .max()
        .unwrap_or(1))
}

/// Class count as the number of commuting pairs divided by `|G|`.
pub fn brute_class_count(group: &PermGroup) -> Result<u64, GroupError> {
    let elems = group.elements()?.as_slice();
    let pairs: u64 = elems
        .iter()
        .map(|a| elems.iter().filter(|b| a.compose(b) == b.compose(a)).count() as u64)
        .sum();
    Ok(pairs / elems.len() as u64)
}

/// Order of the color preserver by scanning every element.
pub fn brute_preserver_order(group: &PermGroup, f: &Coloring) -> Result<u64, GroupError> {
    let colors = f.colors();
    Ok(group
        .elements()?
        .iter()
        .filter(|g| (0..colors.len()).all(|x| colors[g.apply(x as u32) as usize] == colors[x]))
        .count() as u64)
}

/// Whether some coloring with at most `k` colors has trivial preserver,
/// by trying all `k^n` colorings.
pub fn brute_distinguishable(group: &PermGroup, k: u8) -> Result<bool, GroupError> {
    let n = group.degree();
    let elems: Vec<&Perm> = group.elements()?.iter().filter(|g| !g.is_identity()).collect();
    let mut colors = vec![0u8; n];
    loop {
        let fixed = elems
            .iter()
            .any(|g| (0..n).all(|x| colors[g.apply(x as u32) as usize] == colors[x]));
        if !fixed {
            return Ok(true);
        }
        // next coloring in base k
        let mut i = 0;
        loop {
            if i == n {
                return Ok(false);
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Number of standard Young tableaux of the given shape, by removing the
/// largest entry from each corner in turn.
pub fn syt_count(shape: &Partition) -> u128 {
    fn count(parts: &mut Vec<u32>, memo: &mut HashMap<Vec<u32>, u128>) -> u128 {
        if parts.iter().sum::<u32>() <= 1 {
            return 1;
        }
        if let Some(&v) = memo.get(parts) {
            return v;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let is_corner = parts[i] > 0 && parts.get(i + 1).is_none_or(|&next| next < parts[i]);
            if is_corner {
                parts[i] -= 1;
                total += count(parts, memo);
                parts[i] += 1;
            }
        }
        memo.insert(parts.clone(), total);
        total
    }
    count(&mut shape.parts().to_vec(), &mut HashMap::new())
}
