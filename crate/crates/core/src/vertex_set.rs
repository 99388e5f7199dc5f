//! Dense vertex sets over `0..n`, backed by 64-bit blocks.

use std::fmt;

const BITS: usize = 64;

/// A set of vertex ids with dense-bitset semantics.
///
/// Blocks are kept trimmed (no trailing zero block) so that structural
/// equality coincides with set equality. Iteration is always in ascending
/// vertex order, which every consumer relies on for determinism.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    blocks: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::new();
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    pub fn insert(&mut self, v: usize) {
        let block = v / BITS;
        if block >= self.blocks.len() {
            self.blocks.resize(block + 1, 0);
        }
        self.blocks[block] |= 1u64 << (v % BITS);
    }

    pub fn remove(&mut self, v: usize) {
        let block = v / BITS;
        if block < self.blocks.len() {
            self.blocks[block] &= !(1u64 << (v % BITS));
            self.trim();
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        let block = v / BITS;
        block < self.blocks.len() && self.blocks[block] & (1u64 << (v % BITS)) != 0
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            (0..BITS).filter_map(move |bit| {
                if block & (1u64 << bit) != 0 {
                    Some(i * BITS + bit)
                } else {
                    None
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut blocks = vec![0u64; self.blocks.len().max(other.blocks.len())];
        for (i, b) in blocks.iter_mut().enumerate() {
            *b = self.blocks.get(i).copied().unwrap_or(0)
                | other.blocks.get(i).copied().unwrap_or(0);
        }
        let mut s = Self { blocks };
        s.trim();
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut blocks = vec![0u64; self.blocks.len().min(other.blocks.len())];
        for (i, b) in blocks.iter_mut().enumerate() {
            *b = self.blocks[i] & other.blocks[i];
        }
        let mut s = Self { blocks };
        s.trim();
        s
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    /// `{0, .., n-1} \ self`.
    pub fn complement_in(&self, n: usize) -> Self {
        let mut s = Self::new();
        for v in 0..n {
            if !self.contains(v) {
                s.insert(v);
            }
        }
        s
    }

    fn trim(&mut self) {
        while self.blocks.last() == Some(&0) {
            self.blocks.pop();
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the ascending member sequence, so `{0} < {0,1} <
/// {0,2} < {1}`. Used for deterministic tie-breaking.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}
