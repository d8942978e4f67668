//! Totally even edge subsets of `T_n`.
//!
//! A subset is totally even when every vertex meets an even number of its
//! edges and every finite face contains an even number of its edges. These
//! subsets form an `F_2` vector space of dimension `floor(n/2)` spanned by
//! the sets `A(i)`, where `A(i)` is the unique member whose only edge on the
//! left half of the bottom side is `{(i,1),(i+1,1)}`.
//!
//! Two independent routes are provided: the explicit construction of `A(i)`
//! ([`basis_subset`]) and Gaussian elimination over the parity constraints
//! ([`null_space_oracle`], [`BottomPropagator`]).

use std::fmt;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, ParametricSolution};
use crate::grid::{Dir, Edge, Face, Side, TriGrid, Vertex};

/// First parity failure found in an edge subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityViolation {
    Vertex(Vertex),
    Face(Face),
}

impl fmt::Display for ParityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityViolation::Vertex(v) => write!(f, "vertex {v} has odd degree"),
            ParityViolation::Face(face) => {
                let [a, b, c] = face.corners();
                write!(f, "face {a}{b}{c} contains an odd number of edges")
            }
        }
    }
}

/// Vertices are checked first (in index order), then finite faces.
pub fn parity_violation(grid: &TriGrid, set: &EdgeSet) -> Result<Option<ParityViolation>> {
    set.check_grid(grid)?;
    for (vi, v) in grid.vertices().iter().enumerate() {
        let deg = grid.vertex_edges(vi).iter().filter(|&&e| set.contains(e)).count();
        if deg % 2 == 1 {
            return Ok(Some(ParityViolation::Vertex(*v)));
        }
    }
    for (fi, f) in grid.faces().iter().enumerate() {
        let k = grid.face_edges(fi).iter().filter(|&&e| set.contains(e)).count();
        if k % 2 == 1 {
            return Ok(Some(ParityViolation::Face(*f)));
        }
    }
    Ok(None)
}

pub fn is_totally_even(grid: &TriGrid, set: &EdgeSet) -> Result<bool> {
    Ok(parity_violation(grid, set)?.is_none())
}

/// One row per vertex and one per finite face; columns are edges.
pub fn parity_matrix(grid: &TriGrid) -> BitMatrix {
    let mut m = BitMatrix::new(grid.num_edges());
    for vi in 0..grid.num_vertices() {
        m.push_row(grid.vertex_edges(vi).iter().copied());
    }
    for fi in 0..grid.num_faces() {
        m.push_row(grid.face_edges(fi));
    }
    m
}

#[derive(Clone, Debug)]
pub struct NullSpace {
    pub dimension: usize,
    pub basis: Vec<EdgeSet>,
}

/// Basis of the totally even space by elimination on [`parity_matrix`].
pub fn null_space_oracle(grid: &TriGrid) -> NullSpace {
    let m = parity_matrix(grid);
    let basis: Vec<EdgeSet> = m
        .null_space()
        .into_iter()
        .map(|words| EdgeSet::from_words(grid.n(), grid.num_edges(), words))
        .collect();
    NullSpace {
        dimension: basis.len(),
        basis,
    }
}

/// Largest valid basis index, `floor(n/2)`.
pub fn max_basis_index(n: usize) -> usize {
    n / 2
}

fn check_basis_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > max_basis_index(n) {
        return Err(Error::InvalidParameter(format!(
            "basis index {i} is outside 1..={} for T_{n}",
            max_basis_index(n)
        )));
    }
    Ok(())
}

/// The seed region of `A(i)` before rotation: horizontal edges
/// `1 <= x <= i, x + y >= i + 1, y <= n + 2 - i` together with NW edges
/// `2 <= x <= i + 1, x + y >= i + 1, y <= n + 1 - i`.
fn basis_seed(grid: &TriGrid, i: usize) -> EdgeSet {
    let n = grid.n() as i32;
    let i = i as i32;
    let mut seed = EdgeSet::empty(grid);
    for (ei, e) in grid.edges().iter().enumerate() {
        let Vertex { x, y } = e.base;
        let keep = match e.dir {
            Dir::E => (1..=i).contains(&x) && x + y > i && y <= n + 2 - i,
            Dir::NW => (2..=i + 1).contains(&x) && x + y > i && y <= n + 1 - i,
            Dir::NE => false,
        };
        if keep {
            seed.insert(ei);
        }
    }
    seed
}

/// `A(i)`: XOR of the seed region and its two rotations.
pub fn basis_subset(grid: &TriGrid, i: usize) -> Result<EdgeSet> {
    check_basis_index(grid.n(), i)?;
    let a1 = basis_seed(grid, i);
    let a2 = a1.rotated(grid);
    let a3 = a2.rotated(grid);
    let mut out = a1;
    out ^= &a2;
    out ^= &a3;
    Ok(out)
}

/// `A(i_1) xor ... xor A(i_k)`. Indices need not be sorted; repeats cancel.
pub fn subset_from_indices(grid: &TriGrid, indices: &[usize]) -> Result<EdgeSet> {
    let mut out = EdgeSet::empty(grid);
    for &i in indices {
        out ^= &basis_subset(grid, i)?;
    }
    Ok(out)
}

/// Bottom edge `{(i,1),(i+1,1)}` as an edge index.
pub(crate) fn bottom_edge(grid: &TriGrid, i: usize) -> usize {
    grid.edge_index(&Edge::new(Vertex::new(i as i32, 1), Dir::E))
        .expect("bottom edge in grid")
}

/// Indices `i_1 < ... < i_k` with `set = A(i_1) xor ... xor A(i_k)`, read
/// from the left half of the bottom side.
pub fn decompose(grid: &TriGrid, set: &EdgeSet) -> Result<Vec<usize>> {
    if let Some(v) = parity_violation(grid, set)? {
        return Err(Error::InvalidInput(format!("not totally even: {v}")));
    }
    Ok((1..=max_basis_index(grid.n()))
        .filter(|&i| set.contains(bottom_edge(grid, i)))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Propagation {
    Subset(EdgeSet),
    Infeasible,
}

/// Solves the parity constraints with the bottom side as parameters, once
/// per grid. Each bottom pattern then maps to its totally even extension
/// (if any) by evaluating precomputed parameter masks.
#[derive(Clone, Debug)]
pub struct BottomPropagator {
    n: usize,
    num_edges: usize,
    solution: ParametricSolution,
}

impl BottomPropagator {
    pub fn new(grid: &TriGrid) -> Result<Self> {
        let n = grid.n();
        if n > 64 {
            return Err(Error::InvalidParameter(format!(
                "bottom propagation supports n <= 64, got {n}"
            )));
        }
        let unknowns = grid.num_edges();
        let mut system = BitMatrix::new(unknowns + n);
        for vi in 0..grid.num_vertices() {
            system.push_row(grid.vertex_edges(vi).iter().copied());
        }
        for fi in 0..grid.num_faces() {
            system.push_row(grid.face_edges(fi));
        }
        for (k, e) in grid.side_edge_indices(Side::Bottom).into_iter().enumerate() {
            system.push_row([e, unknowns + k]);
        }
        Ok(BottomPropagator {
            n,
            num_edges: unknowns,
            solution: ParametricSolution::solve(&system, unknowns),
        })
    }

    /// Number of free edge variables once the bottom side is fixed.
    /// Zero means the bottom side determines the subset.
    pub fn nullity(&self) -> usize {
        self.solution.nullity()
    }

    pub fn propagate(&self, bottom: &[bool]) -> Result<Propagation> {
        if bottom.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "bottom pattern has length {}, expected {}",
                bottom.len(),
                self.n
            )));
        }
        let p = bottom
            .iter()
            .enumerate()
            .fold(0u64, |acc, (k, &b)| acc | (b as u64) << k);
        Ok(match self.solution.evaluate(p) {
            Some(words) => Propagation::Subset(EdgeSet::from_words(self.n, self.num_edges, words)),
            None => Propagation::Infeasible,
        })
    }
}

/// Totally even subset with the given bottom side, or `Infeasible`.
pub fn propagate_from_bottom(grid: &TriGrid, bottom: &[bool]) -> Result<Propagation> {
    BottomPropagator::new(grid)?.propagate(bottom)
}

/// Bottom-side bits of a subset, left to right.
pub fn bottom_pattern(grid: &TriGrid, set: &EdgeSet) -> Vec<bool> {
    grid.side_edge_indices(Side::Bottom)
        .into_iter()
        .map(|e| set.contains(e))
        .collect()
}

/// Gaps between consecutive basis indices, with sentinels `0` and
/// `(n+1)/2`, stored doubled so the last gap stays integral for even `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapProfile {
    n: usize,
    indices: Vec<usize>,
    doubled_gaps: Vec<u64>,
}

impl GapProfile {
    pub fn new(n: usize, indices: &[usize]) -> Result<Self> {
        for &i in indices {
            check_basis_index(n, i)?;
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(format!(
                "indices {indices:?} are not strictly increasing"
            )));
        }
        let mut marks: Vec<u64> = Vec::with_capacity(indices.len() + 2);
        marks.push(0);
        marks.extend(indices.iter().map(|&i| 2 * i as u64));
        marks.push(n as u64 + 1);
        let doubled_gaps = marks.windows(2).map(|w| w[1] - w[0]).collect();
        Ok(GapProfile {
            n,
            indices: indices.to_vec(),
            doubled_gaps,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// `2 a_s` for `s = 0..=k`.
    pub fn doubled_gaps(&self) -> &[u64] {
        &self.doubled_gaps
    }

    /// Doubled sums of the even-position and odd-position gaps.
    pub fn doubled_sums(&self) -> (u64, u64) {
        let even = self.doubled_gaps.iter().step_by(2).sum();
        let odd = self.doubled_gaps.iter().skip(1).step_by(2).sum();
        (even, odd)
    }

    /// `12 * (sum of even gaps) * (sum of odd gaps)`.
    pub fn edge_count(&self) -> u64 {
        if self.indices.is_empty() {
            return 0;
        }
        let (even, odd) = self.doubled_sums();
        3 * even * odd
    }
}

pub fn count_edges_closed_form(n: usize, indices: &[usize]) -> Result<u64> {
    Ok(GapProfile::new(n, indices)?.edge_count())
}

/// `6 (n - 2i + 1) i`.
pub fn basis_size_closed_form(n: usize, i: usize) -> Result<u64> {
    check_basis_index(n, i)?;
    Ok(6 * (n as u64 + 1 - 2 * i as u64) * i as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub reflect_invariant: bool,
    pub rotate_invariant: bool,
    pub avoids_middle: bool,
}

impl SymmetryReport {
    pub fn all(&self) -> bool {
        self.reflect_invariant && self.rotate_invariant && self.avoids_middle
    }
}

pub fn check_symmetries(grid: &TriGrid, set: &EdgeSet) -> Result<SymmetryReport> {
    set.check_grid(grid)?;
    Ok(SymmetryReport {
        reflect_invariant: set.reflected(grid) == *set,
        rotate_invariant: set.rotated(grid) == *set,
        avoids_middle: grid.middle_edges().iter().all(|&e| !set.contains(e)),
    })
}

/// All `2^floor(n/2)` totally even subsets in Gray-code order, each with its
/// index mask (bit `i - 1` set when `A(i)` is a summand).
pub struct TotallyEvenSubsets {
    basis: Vec<EdgeSet>,
    current: EdgeSet,
    mask: u64,
    step: u64,
}

impl TotallyEvenSubsets {
    pub fn new(grid: &TriGrid) -> Self {
        let m = max_basis_index(grid.n());
        assert!(m < 64, "too many totally even subsets to enumerate");
        let basis = (1..=m)
            .map(|i| basis_subset(grid, i).expect("index in range"))
            .collect();
        TotallyEvenSubsets {
            basis,
            current: EdgeSet::empty(grid),
            mask: 0,
            step: 0,
        }
    }
}

impl Iterator for TotallyEvenSubsets {
    type Item = (u64, EdgeSet);

    fn next(&mut self) -> Option<Self::Item> {
        let total = 1u64 << self.basis.len();
        if self.step >= total {
            return None;
        }
        if self.step > 0 {
            let bit = self.step.trailing_zeros() as usize;
            self.mask ^= 1 << bit;
            self.current ^= &self.basis[bit];
        }
        self.step += 1;
        Some((self.mask, self.current.clone()))
    }
}

/// Indices encoded by a Gray-code mask, ascending.
pub fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}
