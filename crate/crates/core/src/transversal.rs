//! Transversals of a totally even subset.
//!
//! Nodes are the edges of the subset (drawn at their midpoints). Every
//! finite face holding exactly two subset edges links those two nodes. In
//! `T_n` each face has three edges, so the pairing is forced and the
//! resulting graph is a disjoint union of paths and cycles.

use std::collections::BTreeMap;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::evenalg;
use crate::grid::TriGrid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Link {
    pub face: usize,
    /// Edge indices, smaller first.
    pub ends: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalGraph {
    nodes: Vec<usize>,
    links: Vec<Link>,
}

impl TransversalGraph {
    /// Builds a graph from explicit parts without checking the subset.
    pub fn from_parts(nodes: Vec<usize>, links: Vec<Link>) -> Self {
        let mut nodes = nodes;
        nodes.sort_unstable();
        nodes.dedup();
        TransversalGraph { nodes, links }
    }

    /// Sorted edge indices.
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn neighbors(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut adj: BTreeMap<usize, Vec<usize>> = self.nodes.iter().map(|&v| (v, Vec::new())).collect();
        for l in &self.links {
            let (a, b) = l.ends;
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        for v in adj.values_mut() {
            v.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, node: usize) -> usize {
        self.links
            .iter()
            .filter(|l| l.ends.0 == node || l.ends.1 == node)
            .count()
    }
}

pub fn build_transversal(grid: &TriGrid, set: &EdgeSet) -> Result<TransversalGraph> {
    if let Some(v) = evenalg::parity_violation(grid, set)? {
        return Err(Error::InvalidInput(format!("not totally even: {v}")));
    }
    let mut links = Vec::new();
    for face in 0..grid.num_faces() {
        let inside: Vec<usize> = grid
            .face_edges(face)
            .into_iter()
            .filter(|&e| set.contains(e))
            .collect();
        if let [a, b] = inside[..] {
            links.push(Link {
                face,
                ends: (a.min(b), a.max(b)),
            });
        }
    }
    Ok(TransversalGraph {
        nodes: set.iter().collect(),
        links,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    Path,
    Loop,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub kind: ComponentKind,
    /// Edge indices in walk order. Paths start at their smaller endpoint;
    /// loops start at their smallest node and step to its smaller neighbour.
    pub nodes: Vec<usize>,
}

impl Component {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    /// Consecutive node pairs, including the closing pair of a loop.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.nodes.len();
        let wrap = self.kind == ComponentKind::Loop && k > 2;
        let count = if wrap { k } else { k.saturating_sub(1) };
        (0..count).map(move |i| (self.nodes[i], self.nodes[(i + 1) % k]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TransversalDecomposition {
    /// Ordered by smallest node.
    pub components: Vec<Component>,
}

impl TransversalDecomposition {
    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Component::size).collect()
    }

    pub fn total_nodes(&self) -> usize {
        self.components.iter().map(Component::size).sum()
    }
}

/// Splits the graph into maximal paths and loops.
///
/// # Panics
///
/// Panics if a node has more than two links; [`build_transversal`] never
/// produces such a graph.
pub fn decompose_transversals(t: &TransversalGraph) -> TransversalDecomposition {
    let adj = t.neighbors();
    for (v, ns) in &adj {
        assert!(ns.len() <= 2, "transversal node {v} has degree {}", ns.len());
    }
    let mut done: BTreeMap<usize, bool> = adj.keys().map(|&v| (v, false)).collect();
    let mut components = Vec::new();

    let walk = |from: usize, first: Option<usize>, done: &mut BTreeMap<usize, bool>| {
        let mut nodes = vec![from];
        done.insert(from, true);
        let mut prev = from;
        let mut cur = first;
        while let Some(c) = cur {
            if done[&c] {
                break;
            }
            done.insert(c, true);
            nodes.push(c);
            cur = adj[&c].iter().copied().find(|&w| w != prev && !done[&w]);
            prev = c;
        }
        nodes
    };

    // paths first from their endpoints, then loops; order fixed afterwards
    for (&v, ns) in &adj {
        if !done[&v] && ns.len() <= 1 {
            let nodes = walk(v, ns.first().copied(), &mut done);
            components.push(Component {
                kind: ComponentKind::Path,
                nodes,
            });
        }
    }
    for (&v, ns) in &adj {
        if !done[&v] {
            let nodes = walk(v, ns.first().copied(), &mut done);
            components.push(Component {
                kind: ComponentKind::Loop,
                nodes,
            });
        }
    }
    components.sort_by_key(|c| c.nodes.iter().copied().min());
    TransversalDecomposition { components }
}

/// Every component meets a multiple of 4 subset edges.
pub fn check_mod4(d: &TransversalDecomposition) -> bool {
    d.components.iter().all(|c| c.size() % 4 == 0)
}

/// Per component, how many nodes lie in `c1 \ c2` and in `c2 \ c1`.
pub fn alternation_tallies(d: &TransversalDecomposition, c1: &EdgeSet, c2: &EdgeSet) -> Vec<(usize, usize)> {
    d.components
        .iter()
        .map(|c| {
            let a = c.nodes.iter().filter(|&&e| c1.contains(e) && !c2.contains(e)).count();
            let b = c.nodes.iter().filter(|&&e| c2.contains(e) && !c1.contains(e)).count();
            (a, b)
        })
        .collect()
}

/// Every link of the graph joins a `c1 \ c2` node to a `c2 \ c1` node.
pub fn links_alternate(t: &TransversalGraph, c1: &EdgeSet, c2: &EdgeSet) -> bool {
    let side = |e: usize| match (c1.contains(e), c2.contains(e)) {
        (true, false) => Some(true),
        (false, true) => Some(false),
        _ => None,
    };
    t.links().iter().all(|l| match (side(l.ends.0), side(l.ends.1)) {
        (Some(a), Some(b)) => a != b,
        _ => false,
    })
}

/// Checks that every transversal of `set` alternates between edges of
/// `c1 \ c2` and `c2 \ c1`. Requires `set = c1 xor c2`.
pub fn alternation_check(grid: &TriGrid, set: &EdgeSet, c1: &EdgeSet, c2: &EdgeSet) -> Result<bool> {
    c1.check_grid(grid)?;
    c2.check_grid(grid)?;
    if *set != c1 ^ c2 {
        return Err(Error::Precondition(
            "subset is not the symmetric difference of the two cycles".into(),
        ));
    }
    let t = build_transversal(grid, set)?;
    Ok(links_alternate(&t, c1, c2))
}
