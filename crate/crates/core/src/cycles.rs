//! Simple cycles of `T_n` and their Slitherlink signatures.
//!
//! The signature of a cycle records, for every finite face, how many of the
//! face's three edges the cycle uses. Two distinct cycles with equal
//! signatures differ by a totally even subset; [`verify_pair`] checks the
//! consequences of that (divisibility by 12, even smallest basis index, and
//! the per-face split of the difference).

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use rayon::prelude::*;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::evenalg::{self, max_basis_index};
use crate::grid::{Dir, Edge, Side, TriGrid, Vertex};

/// Why an edge subset is not a single simple cycle.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CycleDefect {
    #[error("edge set is empty")]
    Empty,
    #[error("vertex {0} has odd degree")]
    OddDegree(Vertex),
    #[error("vertex {0} has degree greater than 2")]
    Branching(Vertex),
    #[error("edge set is not connected")]
    Disconnected,
    #[error("edge set belongs to a different grid")]
    GridMismatch,
}

/// An edge set known to form exactly one simple cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(EdgeSet);

impl Cycle {
    pub fn edges(&self) -> &EdgeSet {
        &self.0
    }

    pub fn into_edges(self) -> EdgeSet {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Builds a cycle from a closed walk of corner vertices. Consecutive
    /// corners must lie on a common grid line; each segment is split into
    /// unit edges. The last corner may repeat the first or not.
    pub fn from_walk(grid: &TriGrid, corners: &[Vertex]) -> Result<Cycle> {
        let set = walk_edges(grid, corners)?;
        validate_cycle(grid, &set).map_err(|d| Error::InvalidInput(format!("walk is not a simple cycle: {d}")))
    }
}

/// Unit edges along a closed corner walk. Edges traversed twice cancel.
pub fn walk_edges(grid: &TriGrid, corners: &[Vertex]) -> Result<EdgeSet> {
    let mut pts = corners.to_vec();
    if pts.len() > 1 && pts.first() == pts.last() {
        pts.pop();
    }
    if pts.len() < 3 {
        return Err(Error::InvalidInput("a closed walk needs at least 3 corners".into()));
    }
    let mut set = EdgeSet::empty(grid);
    for k in 0..pts.len() {
        let (a, b) = (pts[k], pts[(k + 1) % pts.len()]);
        if !grid.contains_vertex(a) {
            return Err(Error::InvalidInput(format!("corner {a} is outside T_{}", grid.n())));
        }
        let (dx, dy) = (b.x - a.x, b.y - a.y);
        let steps = dx.abs().max(dy.abs());
        let aligned = steps > 0 && (dy == 0 || dx == 0 || dx == -dy);
        if !aligned {
            return Err(Error::InvalidInput(format!(
                "segment {a} -> {b} does not follow a grid direction"
            )));
        }
        let (ux, uy) = (dx / steps, dy / steps);
        let mut cur = a;
        for _ in 0..steps {
            let next = Vertex::new(cur.x + ux, cur.y + uy);
            let ei = grid
                .edge_between(cur, next)
                .ok_or_else(|| Error::InvalidInput(format!("segment {a} -> {b} leaves T_{}", grid.n())))?;
            set.toggle(ei);
            cur = next;
        }
    }
    Ok(set)
}

pub fn validate_cycle(grid: &TriGrid, set: &EdgeSet) -> std::result::Result<Cycle, CycleDefect> {
    if set.check_grid(grid).is_err() {
        return Err(CycleDefect::GridMismatch);
    }
    let Some(first) = set.iter().next() else {
        return Err(CycleDefect::Empty);
    };
    for (vi, v) in grid.vertices().iter().enumerate() {
        let deg = grid.vertex_edges(vi).iter().filter(|&&e| set.contains(e)).count();
        match deg {
            0 | 2 => {}
            d if d % 2 == 1 => return Err(CycleDefect::OddDegree(*v)),
            _ => return Err(CycleDefect::Branching(*v)),
        }
    }
    // walk the edges reachable from the first one
    let mut seen = EdgeSet::empty(grid);
    let mut stack = vec![first];
    seen.insert(first);
    while let Some(e) = stack.pop() {
        for v in grid.edge_vertices(e) {
            for &f in grid.vertex_edges(v) {
                if set.contains(f) && !seen.contains(f) {
                    seen.insert(f);
                    stack.push(f);
                }
            }
        }
    }
    if seen != *set {
        return Err(CycleDefect::Disconnected);
    }
    Ok(Cycle(set.clone()))
}

/// Per-face edge counts, indexed by face index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<u8>);

impl Signature {
    pub fn counts(&self) -> &[u8] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signature(")?;
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Face counts of any edge subset (the signature when the subset is a cycle).
pub fn face_counts(grid: &TriGrid, set: &EdgeSet) -> Signature {
    let mut counts = vec![0u8; grid.num_faces()];
    for e in set.iter() {
        for &f in grid.edge_faces(e) {
            counts[f] += 1;
        }
    }
    Signature(counts)
}

pub fn signature(grid: &TriGrid, cycle: &Cycle) -> Signature {
    face_counts(grid, cycle.edges())
}

/// Depth-first simple-cycle walker over a range of start vertices.
///
/// A cycle is reported once, from its lowest-indexed vertex `s`, in the
/// orientation whose second vertex has a smaller index than its last.
pub struct CycleWalker<'g> {
    grid: &'g TriGrid,
    next_start: usize,
    end_start: usize,
    start: usize,
    path: Vec<usize>,
    path_edges: Vec<usize>,
    cursor: Vec<usize>,
    on_path: Vec<bool>,
    closing_pushed: bool,
}

impl<'g> CycleWalker<'g> {
    pub fn new(grid: &'g TriGrid) -> Self {
        Self::for_starts(grid, 0..grid.num_vertices())
    }

    /// Only cycles whose lowest vertex index lies in `starts`.
    pub fn for_starts(grid: &'g TriGrid, starts: std::ops::Range<usize>) -> Self {
        CycleWalker {
            grid,
            next_start: starts.start,
            end_start: starts.end.min(grid.num_vertices()),
            start: 0,
            path: Vec::new(),
            path_edges: Vec::new(),
            cursor: Vec::new(),
            on_path: vec![false; grid.num_vertices()],
            closing_pushed: false,
        }
    }

    /// Edge indices of the next cycle in walk order, closing edge last.
    pub fn next_edges(&mut self) -> Option<&[usize]> {
        if self.closing_pushed {
            self.path_edges.pop();
            self.closing_pushed = false;
        }
        loop {
            let Some(&v) = self.path.last() else {
                if self.next_start >= self.end_start {
                    return None;
                }
                self.start = self.next_start;
                self.next_start += 1;
                self.path.push(self.start);
                self.cursor.push(0);
                self.on_path[self.start] = true;
                continue;
            };
            let depth = self.path.len() - 1;
            let incident = self.grid.vertex_edges(v);
            let Some(&e) = incident.get(self.cursor[depth]) else {
                self.on_path[v] = false;
                self.path.pop();
                self.cursor.pop();
                self.path_edges.pop();
                continue;
            };
            self.cursor[depth] += 1;
            let [a, b] = self.grid.edge_vertices(e);
            let w = if a == v { b } else { a };
            if w == self.start {
                if self.path.len() >= 3 && self.path[1] < v {
                    self.path_edges.push(e);
                    self.closing_pushed = true;
                    return Some(&self.path_edges);
                }
            } else if w > self.start && !self.on_path[w] {
                self.path.push(w);
                self.cursor.push(0);
                self.on_path[w] = true;
                self.path_edges.push(e);
            }
        }
    }
}

impl Iterator for CycleWalker<'_> {
    type Item = Cycle;

    fn next(&mut self) -> Option<Cycle> {
        let grid = self.grid;
        let edges = self.next_edges()?;
        Some(Cycle(EdgeSet::from_indices(grid, edges.iter().copied())))
    }
}

/// Cycles in canonical order, optionally stopping after `limit`.
pub struct CycleStream<'g> {
    walker: CycleWalker<'g>,
    remaining: Option<usize>,
    truncated: bool,
}

impl CycleStream<'_> {
    /// True once the stream stopped at its limit with cycles left over.
    pub fn truncated(&self) -> bool {
        self.truncated
    }
}

impl Iterator for CycleStream<'_> {
    type Item = Cycle;

    fn next(&mut self) -> Option<Cycle> {
        if self.remaining == Some(0) {
            if !self.truncated && self.walker.next_edges().is_some() {
                self.truncated = true;
            }
            return None;
        }
        let c = self.walker.next()?;
        if let Some(r) = self.remaining.as_mut() {
            *r -= 1;
        }
        Some(c)
    }
}

pub fn enumerate_cycles(grid: &TriGrid, limit: Option<usize>) -> CycleStream<'_> {
    CycleStream {
        walker: CycleWalker::new(grid),
        remaining: limit,
        truncated: false,
    }
}

/// 128-bit key for a signature: exact 2-bit packing when the grid has at
/// most 64 faces, otherwise a pair of independent hashes.
fn fingerprint(counts: &[u8]) -> u128 {
    if counts.len() <= 64 {
        counts
            .iter()
            .enumerate()
            .fold(0u128, |acc, (k, &c)| acc | (c as u128) << (2 * k))
    } else {
        let mut lo = DefaultHasher::new();
        (0u8, counts).hash(&mut lo);
        let mut hi = DefaultHasher::new();
        (1u8, counts).hash(&mut hi);
        (hi.finish() as u128) << 64 | lo.finish() as u128
    }
}

fn fingerprint_is_exact(grid: &TriGrid) -> bool {
    grid.num_faces() <= 64
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Stop after this many cycles (in canonical order); the result is then
    /// flagged partial.
    pub max_cycles: Option<u64>,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    /// Cycles kept per repeated signature.
    pub members_per_class: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            max_cycles: None,
            jobs: None,
            members_per_class: 8,
        }
    }
}

/// A signature realized by at least two enumerated cycles.
#[derive(Clone, Debug)]
pub struct SignatureClass {
    pub signature: Signature,
    pub multiplicity: u64,
    /// First cycles found with this signature, in enumeration order (capped).
    pub members: Vec<Cycle>,
}

#[derive(Clone, Debug)]
pub struct CensusResult {
    pub n: usize,
    pub total_cycles: u64,
    pub distinct_signatures: u64,
    pub partial: bool,
    /// Classes with multiplicity at least 2, sorted by signature.
    pub repeated: Vec<SignatureClass>,
    counts: HashMap<u128, u64>,
    exact: bool,
}

impl CensusResult {
    pub fn max_multiplicity(&self) -> u64 {
        let repeated = self.repeated.iter().map(|c| c.multiplicity).max();
        match repeated {
            Some(m) => m,
            None if self.total_cycles > 0 => 1,
            None => 0,
        }
    }

    /// Number of enumerated cycles with this signature.
    pub fn multiplicity(&self, sig: &Signature) -> u64 {
        if let Some(c) = self.repeated.iter().find(|c| &c.signature == sig) {
            return c.multiplicity;
        }
        match self.counts.get(&fingerprint(sig.counts())) {
            Some(&k) if self.exact || k == 1 => k,
            // a hash bucket that split into singletons
            Some(_) => 1,
            None => 0,
        }
    }

    /// Same-signature pairs `(first member, other member)` for every class.
    pub fn pairs(&self) -> impl Iterator<Item = (&Cycle, &Cycle)> + '_ {
        self.repeated
            .iter()
            .flat_map(|c| c.members[1..].iter().map(move |m| (&c.members[0], m)))
    }

    /// Sum of all multiplicities.
    pub fn multiplicity_total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Per-start work item: `None` means the whole shard.
type Plan = Vec<(usize, Option<u64>)>;

fn count_shard(grid: &TriGrid, start: usize, cap: Option<u64>) -> (HashMap<u128, u64>, u64, bool) {
    let mut counts: HashMap<u128, u64> = HashMap::new();
    let mut faces = vec![0u8; grid.num_faces()];
    let mut walker = CycleWalker::for_starts(grid, start..start + 1);
    let mut seen = 0u64;
    while let Some(edges) = walker.next_edges() {
        if cap == Some(seen) {
            return (counts, seen, true);
        }
        for &e in edges {
            for &f in grid.edge_faces(e) {
                faces[f] += 1;
            }
        }
        *counts.entry(fingerprint(&faces)).or_default() += 1;
        for &e in edges {
            for &f in grid.edge_faces(e) {
                faces[f] = 0;
            }
        }
        seen += 1;
    }
    (counts, seen, false)
}

fn collect_shard(
    grid: &TriGrid,
    start: usize,
    cap: Option<u64>,
    wanted: &HashMap<u128, u64>,
) -> Vec<(u128, Cycle)> {
    let mut out = Vec::new();
    let mut walker = CycleWalker::for_starts(grid, start..start + 1);
    let mut seen = 0u64;
    while let Some(edges) = walker.next_edges() {
        if cap == Some(seen) {
            break;
        }
        seen += 1;
        let set = EdgeSet::from_indices(grid, edges.iter().copied());
        let key = fingerprint(face_counts(grid, &set).counts());
        if wanted.contains_key(&key) {
            out.push((key, Cycle(set)));
        }
    }
    out
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Enumerates cycles and tallies signatures.
///
/// Runs in two passes. The first counts 128-bit fingerprints per start
/// vertex in parallel. The second re-walks only the shards needed to
/// collect cycles whose fingerprint repeated, then groups them by full
/// signature, which also resolves any hash collision. Results do not depend
/// on the number of workers.
pub fn census(grid: &TriGrid, opts: &CensusOptions) -> CensusResult {
    with_pool(opts.jobs, || census_inner(grid, opts))
}

fn census_inner(grid: &TriGrid, opts: &CensusOptions) -> CensusResult {
    let starts: Vec<usize> = (0..grid.num_vertices()).collect();
    let shards: Vec<(HashMap<u128, u64>, u64, bool)> = starts
        .par_iter()
        .map(|&s| count_shard(grid, s, opts.max_cycles))
        .collect();

    // Fix the canonical prefix when a limit applies.
    let mut plan: Plan = Vec::new();
    let mut counts: HashMap<u128, u64> = HashMap::new();
    let mut total = 0u64;
    let mut partial = false;
    let mut shards = shards.into_iter().enumerate();
    while let Some((s, (shard_counts, seen, hit_cap))) = shards.next() {
        let room = opts.max_cycles.map(|m| m - total);
        if room == Some(0) {
            partial = seen > 0 || hit_cap || shards.any(|(_, (_, k, _))| k > 0);
            break;
        }
        let (shard_counts, seen, cap) = match room {
            Some(r) if seen > r || (seen == r && hit_cap) => {
                partial = true;
                let (c, k, _) = count_shard(grid, s, Some(r));
                (c, k, Some(r))
            }
            _ => (shard_counts, seen, None),
        };
        for (k, v) in shard_counts {
            *counts.entry(k).or_default() += v;
        }
        total += seen;
        plan.push((s, cap));
        if cap.is_some() {
            break;
        }
    }

    let wanted: HashMap<u128, u64> = counts.iter().filter(|(_, &v)| v >= 2).map(|(&k, &v)| (k, v)).collect();
    let mut distinct = counts.len() as u64;
    let mut repeated = Vec::new();
    if !wanted.is_empty() {
        let found: Vec<Vec<(u128, Cycle)>> = plan
            .par_iter()
            .map(|&(s, cap)| collect_shard(grid, s, cap, &wanted))
            .collect();
        let mut groups: HashMap<u128, Vec<(Signature, Vec<Cycle>, u64)>> = HashMap::new();
        for (key, cycle) in found.into_iter().flatten() {
            let sig = signature(grid, &cycle);
            let bucket = groups.entry(key).or_default();
            match bucket.iter_mut().find(|(s, _, _)| *s == sig) {
                Some((_, members, count)) => {
                    *count += 1;
                    if members.len() < opts.members_per_class.max(2) {
                        members.push(cycle);
                    }
                }
                None => bucket.push((sig, vec![cycle], 1)),
            }
        }
        for (_, bucket) in groups {
            // each extra class in a bucket is a collision the first pass merged
            distinct += bucket.len() as u64 - 1;
            for (sig, members, count) in bucket {
                if count >= 2 {
                    repeated.push(SignatureClass {
                        signature: sig,
                        multiplicity: count,
                        members,
                    });
                }
            }
        }
        repeated.sort_by(|a, b| a.signature.cmp(&b.signature));
    }

    CensusResult {
        n: grid.n(),
        total_cycles: total,
        distinct_signatures: distinct,
        partial,
        repeated,
        counts,
        exact: fingerprint_is_exact(grid),
    }
}

/// Outcome of checking a same-signature pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub difference_size: usize,
    pub totally_even: bool,
    pub divisible_by_12: bool,
    pub decomposition: Vec<usize>,
    /// Smallest basis index is even (vacuous when the difference is empty).
    pub smallest_index_even: bool,
    /// Every face holding two difference edges holds one from each side.
    pub faces_split: bool,
}

impl PairReport {
    pub fn all_hold(&self) -> bool {
        self.totally_even && self.divisible_by_12 && self.smallest_index_even && self.faces_split
    }
}

/// Faces holding two edges of `c1 xor c2` split one from `c1 \ c2` and one
/// from `c2 \ c1`.
pub fn faces_split(grid: &TriGrid, c1: &EdgeSet, c2: &EdgeSet) -> bool {
    let only1 = c1.difference(c2);
    let only2 = c2.difference(c1);
    (0..grid.num_faces()).all(|f| {
        let edges = grid.face_edges(f);
        let a = edges.iter().filter(|&&e| only1.contains(e)).count();
        let b = edges.iter().filter(|&&e| only2.contains(e)).count();
        a + b != 2 || (a == 1 && b == 1)
    })
}

fn check_pair(grid: &TriGrid, c1: &Cycle, c2: &Cycle) -> Result<()> {
    c1.edges().check_grid(grid)?;
    c2.edges().check_grid(grid)?;
    if c1 == c2 {
        return Err(Error::Precondition("the two cycles are identical".into()));
    }
    if signature(grid, c1) != signature(grid, c2) {
        return Err(Error::Precondition("the two cycles have different signatures".into()));
    }
    Ok(())
}

pub fn verify_pair(grid: &TriGrid, c1: &Cycle, c2: &Cycle) -> Result<PairReport> {
    check_pair(grid, c1, c2)?;
    let diff = c1.edges() ^ c2.edges();
    let totally_even = evenalg::is_totally_even(grid, &diff)?;
    let decomposition = if totally_even {
        evenalg::decompose(grid, &diff)?
    } else {
        Vec::new()
    };
    Ok(PairReport {
        difference_size: diff.count(),
        totally_even,
        divisible_by_12: diff.count().is_multiple_of(12),
        smallest_index_even: decomposition.first().is_none_or(|i| i % 2 == 0),
        decomposition,
        faces_split: faces_split(grid, c1.edges(), c2.edges()),
    })
}

/// True when the smallest basis index of a nonempty totally even set is
/// odd, which rules it out as a same-signature cycle difference.
pub fn parity_obstruction(grid: &TriGrid, set: &EdgeSet) -> Result<bool> {
    let idx = evenalg::decompose(grid, set)?;
    match idx.first() {
        Some(i) => Ok(i % 2 == 1),
        None => Err(Error::InvalidInput("the empty set has no smallest index".into())),
    }
}

/// The `2i` edges on the staircase `x + y = i + 1`: horizontal edges and
/// NE edges based on that line.
pub fn zigzag_edges(grid: &TriGrid, i: usize) -> Result<EdgeSet> {
    if i == 0 || i > max_basis_index(grid.n()) {
        return Err(Error::InvalidParameter(format!(
            "zig-zag index {i} is outside 1..={}",
            max_basis_index(grid.n())
        )));
    }
    let i = i as i32;
    let mut set = EdgeSet::empty(grid);
    for x in 1..=i {
        let base = Vertex::new(x, i + 1 - x);
        for dir in [Dir::E, Dir::NE] {
            set.insert(grid.require_edge(&Edge::new(base, dir))?);
        }
    }
    Ok(set)
}

pub fn shares_side(grid: &TriGrid, a: &EdgeSet, b: &EdgeSet, side: Side) -> bool {
    grid.side_edge_indices(side)
        .into_iter()
        .any(|e| a.contains(e) && b.contains(e))
}

fn rotate_times(grid: &TriGrid, set: &EdgeSet, k: usize) -> EdgeSet {
    (0..k).fold(set.clone(), |s, _| s.rotated(grid))
}

/// One rewiring step on the bottom side: cut the lowest shared NW edge
/// `{(j,1),(j-1,2)}` from both cycles and toggle `{(j-1,1),(j,1)}` and
/// `{(j-1,1),(j-1,2)}` in both.
fn rewire_bottom(grid: &TriGrid, a: &mut EdgeSet, b: &mut EdgeSet) -> Result<()> {
    let n = grid.n() as i32;
    let j = (2..=n + 1)
        .find(|&j| {
            let e = grid.edge_between(Vertex::new(j, 1), Vertex::new(j - 1, 2));
            e.is_some_and(|e| a.contains(e) && b.contains(e))
        })
        .ok_or_else(|| Error::Precondition("no shared edge {(j,1),(j-1,2)} to rewire".into()))?;
    let cut = grid.require_edge(&Edge::new(Vertex::new(j, 1), Dir::NW))?;
    let base = Vertex::new(j - 1, 1);
    let horiz = grid.require_edge(&Edge::new(base, Dir::E))?;
    let up = grid.require_edge(&Edge::new(base, Dir::NE))?;
    for s in [a, b] {
        s.remove(cut);
        s.toggle(horiz);
        s.toggle(up);
    }
    Ok(())
}

/// Produces a same-signature pair sharing at least one edge on each side.
///
/// Sides lacking a shared edge are fixed one at a time by rotating that side
/// onto the bottom, rewiring, and rotating back, until all three sides are
/// shared or the iteration cap is reached.
pub fn rewire_shared_side(grid: &TriGrid, c1: &Cycle, c2: &Cycle) -> Result<(Cycle, Cycle)> {
    check_pair(grid, c1, c2)?;
    let mut a = c1.edges().clone();
    let mut b = c2.edges().clone();
    let cap = 3 * grid.n() + 3;
    for _ in 0..cap {
        let Some(side) = Side::ALL.into_iter().find(|&s| !shares_side(grid, &a, &b, s)) else {
            let r1 = validate_cycle(grid, &a).map_err(|d| Error::Precondition(format!("rewired first cycle: {d}")))?;
            let r2 = validate_cycle(grid, &b).map_err(|d| Error::Precondition(format!("rewired second cycle: {d}")))?;
            check_pair(grid, &r1, &r2)?;
            return Ok((r1, r2));
        };
        // rotation k brings the bottom onto: 0 bottom, 1 left, 2 right
        let k = match side {
            Side::Bottom => 0,
            Side::Left => 1,
            Side::Right => 2,
        };
        let mut ra = rotate_times(grid, &a, (3 - k) % 3);
        let mut rb = rotate_times(grid, &b, (3 - k) % 3);
        rewire_bottom(grid, &mut ra, &mut rb)?;
        a = rotate_times(grid, &ra, k);
        b = rotate_times(grid, &rb, k);
        for (s, name) in [(&a, "first"), (&b, "second")] {
            validate_cycle(grid, s)
                .map_err(|d| Error::Precondition(format!("rewiring broke the {name} cycle: {d}")))?;
        }
    }
    Err(Error::Precondition(format!("side rewiring did not settle within {cap} steps")))
}
