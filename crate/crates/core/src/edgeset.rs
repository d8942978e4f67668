//! Edge subsets of `T_n` as packed bit vectors over `F_2`.

use std::fmt;
use std::ops::{BitXor, BitXorAssign};

use crate::error::{Error, Result};
use crate::grid::{Edge, TriGrid};

/// Indicator vector of an edge subset. Symmetric difference is XOR.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    n: usize,
    len: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn empty(grid: &TriGrid) -> Self {
        Self::zeros(grid.n(), grid.num_edges())
    }

    pub(crate) fn zeros(n: usize, len: usize) -> Self {
        EdgeSet {
            n,
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(grid: &TriGrid, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(grid);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn from_edges<'a>(grid: &TriGrid, edges: impl IntoIterator<Item = &'a Edge>) -> Result<Self> {
        let mut s = Self::empty(grid);
        for e in edges {
            s.insert(grid.require_edge(e)?);
        }
        Ok(s)
    }

    pub(crate) fn from_words(n: usize, len: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), len.div_ceil(64));
        EdgeSet { n, len, words }
    }

    /// Grid size this set was built for.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edge slots (not the cardinality; see [`EdgeSet::count`]).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "edge index {i} out of range");
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len, "edge index {i} out of range");
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "edge index {i} out of range");
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn set(&mut self, i: usize, value: bool) {
        if value {
            self.insert(i)
        } else {
            self.remove(i)
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn edges<'g>(&'g self, grid: &'g TriGrid) -> impl Iterator<Item = Edge> + 'g {
        self.iter().map(|i| grid.edge(i))
    }

    pub fn intersection_count(&self, other: &EdgeSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        EdgeSet::from_words(self.n, self.len, words)
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        EdgeSet::from_words(self.n, self.len, words)
    }

    /// Image under an edge permutation (`perm[i]` is the image of edge `i`).
    pub fn permuted(&self, perm: impl Fn(usize) -> usize) -> EdgeSet {
        let mut out = EdgeSet::zeros(self.n, self.len);
        for i in self.iter() {
            out.insert(perm(i));
        }
        out
    }

    pub fn reflected(&self, grid: &TriGrid) -> EdgeSet {
        self.permuted(|i| grid.reflect_index(i))
    }

    pub fn rotated(&self, grid: &TriGrid) -> EdgeSet {
        self.permuted(|i| grid.rotate_index(i))
    }

    pub(crate) fn check_grid(&self, grid: &TriGrid) -> Result<()> {
        if self.n != grid.n() || self.len != grid.num_edges() {
            return Err(Error::InvalidInput(format!(
                "edge set built for T_{} does not match T_{}",
                self.n,
                grid.n()
            )));
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &EdgeSet) {
        assert!(
            self.n == other.n && self.len == other.len,
            "edge sets over different grids"
        );
    }
}

impl BitXorAssign<&EdgeSet> for EdgeSet {
    fn bitxor_assign(&mut self, rhs: &EdgeSet) {
        self.check_same_shape(rhs);
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitXor<&EdgeSet> for &EdgeSet {
    type Output = EdgeSet;

    fn bitxor(self, rhs: &EdgeSet) -> EdgeSet {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSet(n={}, ", self.n)?;
        f.debug_list().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xor_identity_and_count() {
        let g = TriGrid::new(8).unwrap();
        let a = EdgeSet::from_indices(&g, [0, 5, 64, 70]);
        let b = EdgeSet::from_indices(&g, [5, 70, 71]);
        let z = EdgeSet::empty(&g);
        assert_eq!(&a ^ &z, a);
        assert_eq!(&a ^ &a, z);
        let c = &a ^ &b;
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![0, 64, 71]);
        assert_eq!(c.count(), 3);
        assert_eq!(a.intersection_count(&b), 2);
        assert_eq!(a.len(), g.num_edges());
        assert!(z.is_empty());
    }

    #[test]
    fn grid_mismatch() {
        let g5 = TriGrid::new(5).unwrap();
        let g6 = TriGrid::new(6).unwrap();
        assert!(EdgeSet::empty(&g5).check_grid(&g6).is_err());
    }
}
