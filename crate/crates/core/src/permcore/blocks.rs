use super::{GroupError, Perm, PermGroup};

/// A partition of the points into blocks, blocks ordered by their smallest
/// point and each block sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    blocks: Vec<Vec<u32>>,
    block_of: Vec<u32>,
}

impl BlockSystem {
    pub fn new(degree: usize, mut blocks: Vec<Vec<u32>>) -> Result<BlockSystem, GroupError> {
        let mut block_of = vec![u32::MAX; degree];
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(GroupError::NotPartition);
            }
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                let slot = block_of.get_mut(x as usize).ok_or(GroupError::NotPartition)?;
                if *slot != u32::MAX {
                    return Err(GroupError::NotPartition);
                }
                *slot = i as u32;
            }
        }
        if block_of.contains(&u32::MAX) {
            return Err(GroupError::NotPartition);
        }
        Ok(BlockSystem { blocks, block_of })
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_of(&self, x: u32) -> u32 {
        self.block_of[x as usize]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.block_of.len()
    }

    /// Image of each block under `g` as a block index, if `g` permutes blocks.
    pub fn block_image(&self, g: &Perm) -> Option<Vec<u32>> {
        self.blocks
            .iter()
            .map(|b| {
                let target = self.block_of(g.apply(b[0]));
                b.iter()
                    .all(|&x| self.block_of(g.apply(x)) == target)
                    .then_some(target)
            })
            .collect()
    }

    pub fn is_invariant_under(&self, group: &PermGroup) -> bool {
        group.degree() == self.degree()
            && group.generators().iter().all(|g| self.block_image(g).is_some())
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let next = self.parent[x as usize];
            self.parent[x as usize] = self.parent[next as usize];
            x = next;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) -> Option<(u32, u32)> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi as usize] = lo;
        Some((lo, hi))
    }
}

impl PermGroup {
    /// Smallest block containing `a` and `b`, sorted.
    pub fn minimal_block(&self, a: u32, b: u32) -> Result<Vec<u32>, GroupError> {
        if !self.is_transitive() {
            return Err(GroupError::NotTransitive);
        }
        let n = self.degree();
        if a as usize >= n || b as usize >= n || a == b {
            return Err(GroupError::InvalidPoints);
        }
        let mut uf = UnionFind::new(n);
        let mut pending = Vec::new();
        if let Some(pair) = uf.union(a, b) {
            pending.push(pair);
        }
        while let Some((x, y)) = pending.pop() {
            for g in self.generators() {
                if let Some(pair) = uf.union(g.apply(x), g.apply(y)) {
                    pending.push(pair);
                }
            }
        }
        let root = uf.find(a);
        Ok((0..n as u32).filter(|&x| uf.find(x) == root).collect())
    }

    /// The block system generated by translates of `block`.
    pub fn block_system_from(&self, block: &[u32]) -> Result<BlockSystem, GroupError> {
        let mut first = block.to_vec();
        first.sort_unstable();
        let mut blocks = vec![first];
        let mut head = 0;
        while head < blocks.len() {
            for g in self.generators() {
                let img = g.image_of_set(&blocks[head]);
                if !blocks.contains(&img) {
                    blocks.push(img);
                }
            }
            head += 1;
        }
        let system = BlockSystem::new(self.degree(), blocks).map_err(|_| GroupError::NotBlock)?;
        Ok(system)
    }

    /// Permutation action on the blocks of an invariant system.
    pub fn block_action(&self, system: &BlockSystem) -> Result<PermGroup, GroupError> {
        let mut gens = Vec::with_capacity(self.generators().len());
        for g in self.generators() {
            let img = system.block_image(g).ok_or(GroupError::NotInvariant)?;
            gens.push(Perm::from_images_unchecked(img));
        }
        PermGroup::new(system.len(), gens)
    }

    /// Two blocks of size n/2 for a transitive 2-group, found by recursing
    /// through quotients by minimal block systems.
    pub fn two_block_system(&self) -> Result<BlockSystem, GroupError> {
        let n = self.degree();
        if !self.is_transitive() {
            return Err(GroupError::NotTransitive);
        }
        if !self.is_two_group()? {
            return Err(GroupError::NotTwoGroup);
        }
        if n < 2 {
            return Err(GroupError::InvalidPoints);
        }
        if n == 2 {
            return BlockSystem::new(2, vec![vec![0], vec![1]]);
        }
        let mut best: Option<Vec<u32>> = None;
        for b in 1..n as u32 {
            let block = self.minimal_block(0, b)?;
            if block.len() < n && best.as_ref().is_none_or(|cur| block.len() < cur.len()) {
                best = Some(block);
            }
        }
        // a transitive 2-group of degree > 2 is imprimitive
        let block = best.ok_or(GroupError::NotTwoGroup)?;
        let minimal = self.block_system_from(&block)?;
        let quotient = self.block_action(&minimal)?;
        let top = quotient.two_block_system()?;
        let halves = top
            .blocks()
            .iter()
            .map(|part| {
                part.iter()
                    .flat_map(|&bi| minimal.blocks()[bi as usize].iter().copied())
                    .collect()
            })
            .collect();
        BlockSystem::new(n, halves)
    }

    /// Elements fixing every block of `system` setwise.
    pub fn action_kernel(&self, system: &BlockSystem) -> Result<PermGroup, GroupError> {
        if !system.is_invariant_under(self) {
            return Err(GroupError::NotInvariant);
        }
        self.filter_subgroup(|g| {
            system
                .blocks()
                .iter()
                .enumerate()
                .all(|(i, b)| system.block_of(g.apply(b[0])) == i as u32)
        })
    }

    /// The action on an invariant set `delta`, relabelled to `0..|delta|` in
    /// increasing point order.
    pub fn restrict_action(&self, delta: &[u32]) -> Result<PermGroup, GroupError> {
        let mut pts = delta.to_vec();
        pts.sort_unstable();
        pts.dedup();
        let mut label = vec![u32::MAX; self.degree()];
        for (i, &x) in pts.iter().enumerate() {
            *label.get_mut(x as usize).ok_or(GroupError::InvalidPoints)? = i as u32;
        }
        let mut gens = Vec::with_capacity(self.generators().len());
        for g in self.generators() {
            let mut img = Vec::with_capacity(pts.len());
            for &x in &pts {
                let y = label[g.apply(x) as usize];
                if y == u32::MAX {
                    return Err(GroupError::NotInvariant);
                }
                img.push(y);
            }
            gens.push(Perm::from_images_unchecked(img));
        }
        PermGroup::new(pts.len(), gens)
    }
}
