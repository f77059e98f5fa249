use rustc_hash::FxHashSet;

use super::group::closure;
use super::{Elements, GroupError, Perm, PermGroup};

/// Result of the bounded Hall 2'-subgroup search.
#[derive(Clone, Debug)]
pub struct HallOutcome {
    pub group: PermGroup,
    /// True when `group` has order exactly the odd part of `|G|`.
    pub complete: bool,
    pub attempts: usize,
}

fn two_part(n: u64) -> u64 {
    1 << n.trailing_zeros()
}

impl PermGroup {
    /// A Sylow 2-subgroup, grown from a 2-element of maximal order by
    /// repeatedly adjoining normalizing 2-elements whose square already lies
    /// in the current subgroup.
    pub fn sylow2(&self) -> Result<PermGroup, GroupError> {
        let elems = self.elements()?;
        let target = two_part(elems.len() as u64);
        let n = self.degree();
        if target == 1 {
            return Ok(PermGroup::trivial(n));
        }
        let start = elems
            .iter()
            .filter(|g| g.order().is_power_of_two())
            .max_by_key(|g| g.order())
            .expect("identity is a 2-element")
            .clone();
        let mut members: Vec<Perm> = (0..start.order() as i64).map(|k| start.pow(k)).collect();
        let mut set: FxHashSet<Perm> = members.iter().cloned().collect();
        let mut gens = vec![start];
        let mut buf = Vec::with_capacity(n);
        while (members.len() as u64) < target {
            let ext = elems.iter().find(|g| {
                !set.contains(*g)
                    && set.contains(&g.compose(g))
                    && gens.iter().all(|h| {
                        h.conjugate_into(g, &mut buf);
                        set.contains(buf.as_slice())
                    })
            });
            let g = ext.ok_or(GroupError::Internal("no normalizing 2-element"))?;
            let order = g.order();
            let t = g.pow((order >> order.trailing_zeros()) as i64);
            let coset: Vec<Perm> = members.iter().map(|p| t.compose(p)).collect();
            for p in coset {
                set.insert(p.clone());
                members.push(p);
            }
            gens.push(t);
        }
        Ok(PermGroup::from_parts(n, gens, Elements::from_vec(members)))
    }

    /// Greedy search for a Hall 2'-subgroup: odd-order elements are tried
    /// largest order first and kept whenever the enlarged subgroup stays odd.
    ///
    /// In a solvable group every odd-order subgroup lies in a Hall
    /// 2'-subgroup, so a single pass succeeds unless `budget` closure
    /// attempts run out first.
    pub fn hall_odd(&self, budget: usize) -> Result<HallOutcome, GroupError> {
        let elems = self.elements()?;
        let order = elems.len() as u64;
        let target = (order / two_part(order)) as usize;
        let n = self.degree();
        let mut gens: Vec<Perm> = Vec::new();
        let mut current = closure(n, &gens, 1)?;
        let mut attempts = 0;
        if target > 1 {
            let mut candidates: Vec<&Perm> = elems.iter().filter(|g| g.order() % 2 == 1).collect();
            // stable sort keeps element order among equal orders
            candidates.sort_by_key(|g| std::cmp::Reverse(g.order()));
            for g in candidates {
                if current.len() == target || attempts >= budget {
                    break;
                }
                if current.contains(g) {
                    continue;
                }
                attempts += 1;
                let mut trial = gens.clone();
                trial.push(g.clone());
                match closure(n, &trial, target) {
                    Ok(e) if e.len() % 2 == 1 => {
                        gens = trial;
                        current = e;
                    }
                    Ok(_) | Err(GroupError::BudgetExceeded { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        let complete = current.len() == target;
        Ok(HallOutcome {
            group: PermGroup::from_parts(n, gens, current),
            complete,
            attempts,
        })
    }
}
