//! The equilateral triangular grid `T_n` and its incidence structure.
//!
//! Vertices are addressed as `(x, y)` where `y` is the row counted from the
//! bottom (starting at 1) and `x` the position within the row counted from
//! the left. Row `y` holds `n + 2 - y` vertices, so the three corners are
//! `(1, 1)`, `(n + 1, 1)` and `(1, n + 1)`.
//!
//! Every edge is stored through its base vertex and one of three directions:
//!
//! * `E`  joins `(x, y)` and `(x + 1, y)`,
//! * `NE` joins `(x, y)` and `(x, y + 1)`,
//! * `NW` joins `(x, y)` and `(x - 1, y + 1)`.
//!
//! Edges, vertices and faces all carry a dense index that is stable for a
//! given `n`; bitsets over edges use the edge index.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub x: i32,
    pub y: i32,
}

impl Vertex {
    pub const fn new(x: i32, y: i32) -> Self {
        Vertex { x, y }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    E,
    NE,
    NW,
}

impl Dir {
    pub const ALL: [Dir; 3] = [Dir::E, Dir::NE, Dir::NW];

    pub const fn index(self) -> usize {
        match self {
            Dir::E => 0,
            Dir::NE => 1,
            Dir::NW => 2,
        }
    }

    /// Coordinate offset from the base vertex to the other endpoint.
    pub const fn offset(self) -> (i32, i32) {
        match self {
            Dir::E => (1, 0),
            Dir::NE => (0, 1),
            Dir::NW => (-1, 1),
        }
    }

    /// Direction of a unit step, in either orientation.
    pub fn from_step(dx: i32, dy: i32) -> Option<(Dir, bool)> {
        match (dx, dy) {
            (1, 0) => Some((Dir::E, true)),
            (-1, 0) => Some((Dir::E, false)),
            (0, 1) => Some((Dir::NE, true)),
            (0, -1) => Some((Dir::NE, false)),
            (-1, 1) => Some((Dir::NW, true)),
            (1, -1) => Some((Dir::NW, false)),
            _ => None,
        }
    }
}

/// A unit edge in canonical base + direction form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub base: Vertex,
    pub dir: Dir,
}

impl Edge {
    pub const fn new(base: Vertex, dir: Dir) -> Self {
        Edge { base, dir }
    }

    /// The canonical edge joining two adjacent vertices, if they are adjacent
    /// in the infinite triangular lattice.
    pub fn between(a: Vertex, b: Vertex) -> Option<Edge> {
        let (dir, forward) = Dir::from_step(b.x - a.x, b.y - a.y)?;
        let base = if forward { a } else { b };
        Some(Edge { base, dir })
    }

    pub fn head(&self) -> Vertex {
        let (dx, dy) = self.dir.offset();
        Vertex::new(self.base.x + dx, self.base.y + dy)
    }

    pub fn endpoints(&self) -> [Vertex; 2] {
        [self.base, self.head()]
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.base, self.head())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orient {
    Up,
    Down,
}

/// A finite triangular face.
///
/// An `Up` face has corners `(x,y), (x+1,y), (x,y+1)`; a `Down` face has
/// corners `(x+1,y), (x,y+1), (x+1,y+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub anchor: Vertex,
    pub orient: Orient,
}

impl Face {
    pub fn corners(&self) -> [Vertex; 3] {
        let Vertex { x, y } = self.anchor;
        match self.orient {
            Orient::Up => [
                Vertex::new(x, y),
                Vertex::new(x + 1, y),
                Vertex::new(x, y + 1),
            ],
            Orient::Down => [
                Vertex::new(x + 1, y),
                Vertex::new(x, y + 1),
                Vertex::new(x + 1, y + 1),
            ],
        }
    }

    pub fn edges(&self) -> [Edge; 3] {
        let Vertex { x, y } = self.anchor;
        match self.orient {
            Orient::Up => [
                Edge::new(Vertex::new(x, y), Dir::E),
                Edge::new(Vertex::new(x, y), Dir::NE),
                Edge::new(Vertex::new(x + 1, y), Dir::NW),
            ],
            Orient::Down => [
                Edge::new(Vertex::new(x + 1, y), Dir::NW),
                Edge::new(Vertex::new(x + 1, y), Dir::NE),
                Edge::new(Vertex::new(x, y + 1), Dir::E),
            ],
        }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.orient {
            Orient::Up => "up",
            Orient::Down => "down",
        };
        write!(f, "{}{}", o, self.anchor)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Bottom,
    Left,
    Right,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Bottom, Side::Left, Side::Right];
}

const NO_EDGE: usize = usize::MAX;

/// The triangular grid `T_n`.
///
/// Immutable after construction. Symmetry maps are precomputed as edge
/// permutations.
#[derive(Clone, Debug)]
pub struct TriGrid {
    n: usize,
    row_offset: Vec<usize>,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    /// `3 * vertex_index + dir_index` to edge index, `NO_EDGE` if absent.
    edge_slot: Vec<usize>,
    vertex_edges: Vec<Vec<usize>>,
    face_edges: Vec<[usize; 3]>,
    edge_faces: Vec<Vec<usize>>,
    reflect_perm: Vec<usize>,
    rotate_perm: Vec<usize>,
}

impl TriGrid {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!(
                "grid size must be at least 1, got {n}"
            )));
        }
        if n > 4096 {
            return Err(Error::InvalidParameter(format!(
                "grid size {n} is too large"
            )));
        }
        let side = n as i32;

        let mut row_offset = Vec::with_capacity(n + 2);
        let mut vertices = Vec::with_capacity((n + 1) * (n + 2) / 2);
        for y in 1..=side + 1 {
            row_offset.push(vertices.len());
            for x in 1..=side + 2 - y {
                vertices.push(Vertex::new(x, y));
            }
        }
        row_offset.push(vertices.len());

        let mut grid = TriGrid {
            n,
            row_offset,
            vertices,
            edges: Vec::with_capacity(3 * n * (n + 1) / 2),
            faces: Vec::with_capacity(n * n),
            edge_slot: Vec::new(),
            vertex_edges: Vec::new(),
            face_edges: Vec::new(),
            edge_faces: Vec::new(),
            reflect_perm: Vec::new(),
            rotate_perm: Vec::new(),
        };

        grid.edge_slot = vec![NO_EDGE; 3 * grid.vertices.len()];
        grid.vertex_edges = vec![Vec::with_capacity(6); grid.vertices.len()];
        for vi in 0..grid.vertices.len() {
            let v = grid.vertices[vi];
            for dir in Dir::ALL {
                let e = Edge::new(v, dir);
                if grid.contains_vertex(e.head()) {
                    let ei = grid.edges.len();
                    grid.edges.push(e);
                    grid.edge_slot[3 * vi + dir.index()] = ei;
                }
            }
        }
        for (ei, e) in grid.edges.iter().enumerate() {
            for v in e.endpoints() {
                let vi = grid.vertex_index_unchecked(v);
                grid.vertex_edges[vi].push(ei);
            }
        }
        for vs in &mut grid.vertex_edges {
            vs.sort_unstable();
        }

        for y in 1..=side {
            for x in 1..=side + 1 - y {
                grid.faces.push(Face {
                    anchor: Vertex::new(x, y),
                    orient: Orient::Up,
                });
                if x + y <= side {
                    grid.faces.push(Face {
                        anchor: Vertex::new(x, y),
                        orient: Orient::Down,
                    });
                }
            }
        }
        grid.edge_faces = vec![Vec::with_capacity(2); grid.edges.len()];
        grid.face_edges = Vec::with_capacity(grid.faces.len());
        for fi in 0..grid.faces.len() {
            let f = grid.faces[fi];
            let ids = f.edges().map(|e| {
                grid.edge_index(&e)
                    .expect("face edges lie inside the grid")
            });
            for &ei in &ids {
                grid.edge_faces[ei].push(fi);
            }
            grid.face_edges.push(ids);
        }

        let reflect = |v: Vertex| Vertex::new(side + 3 - v.y - v.x, v.y);
        let rotate = |v: Vertex| Vertex::new(v.y, side + 3 - v.x - v.y);
        grid.reflect_perm = grid.edge_permutation(reflect);
        grid.rotate_perm = grid.edge_permutation(rotate);
        Ok(grid)
    }

    fn edge_permutation(&self, map: impl Fn(Vertex) -> Vertex) -> Vec<usize> {
        self.edges
            .iter()
            .map(|e| {
                let [a, b] = e.endpoints();
                let image = Edge::between(map(a), map(b)).expect("map preserves adjacency");
                self.edge_index(&image).expect("map preserves the grid")
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        let n = self.n as i32;
        v.y >= 1 && v.y <= n + 1 && v.x >= 1 && v.x <= n + 2 - v.y
    }

    fn vertex_index_unchecked(&self, v: Vertex) -> usize {
        self.row_offset[(v.y - 1) as usize] + (v.x - 1) as usize
    }

    pub fn vertex_index(&self, v: Vertex) -> Option<usize> {
        self.contains_vertex(v)
            .then(|| self.vertex_index_unchecked(v))
    }

    pub fn edge_index(&self, e: &Edge) -> Option<usize> {
        let vi = self.vertex_index(e.base)?;
        match self.edge_slot[3 * vi + e.dir.index()] {
            NO_EDGE => None,
            ei => Some(ei),
        }
    }

    /// Index of the edge joining two vertices, in either order.
    pub fn edge_between(&self, a: Vertex, b: Vertex) -> Option<usize> {
        self.edge_index(&Edge::between(a, b)?)
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edge_index(e).is_some()
    }

    pub(crate) fn require_edge(&self, e: &Edge) -> Result<usize> {
        self.edge_index(e)
            .ok_or_else(|| Error::InvalidEdge(format!("{e} is not an edge of T_{}", self.n)))
    }

    pub fn edge(&self, ei: usize) -> Edge {
        self.edges[ei]
    }

    pub fn face_index(&self, f: &Face) -> Option<usize> {
        // Faces are few; a binary search over the construction order works
        // because faces are pushed sorted by (y, x, orient).
        let key = (f.anchor.y, f.anchor.x, f.orient);
        self.faces
            .binary_search_by(|g| (g.anchor.y, g.anchor.x, g.orient).cmp(&key))
            .ok()
    }

    pub fn vertex_edges(&self, vi: usize) -> &[usize] {
        &self.vertex_edges[vi]
    }

    pub fn face_edges(&self, fi: usize) -> [usize; 3] {
        self.face_edges[fi]
    }

    /// Finite faces containing an edge: one for boundary edges, two otherwise.
    pub fn edge_faces(&self, ei: usize) -> &[usize] {
        &self.edge_faces[ei]
    }

    /// Vertex indices of both endpoints of an edge.
    pub fn edge_vertices(&self, ei: usize) -> [usize; 2] {
        self.edges[ei]
            .endpoints()
            .map(|v| self.vertex_index_unchecked(v))
    }

    pub fn side_edges(&self, side: Side) -> Vec<Edge> {
        let n = self.n as i32;
        (1..=n)
            .map(|j| match side {
                Side::Bottom => Edge::new(Vertex::new(j, 1), Dir::E),
                Side::Left => Edge::new(Vertex::new(1, j), Dir::NE),
                Side::Right => Edge::new(Vertex::new(n + 2 - j, j), Dir::NW),
            })
            .collect()
    }

    pub fn side_edge_indices(&self, side: Side) -> Vec<usize> {
        self.side_edges(side)
            .iter()
            .map(|e| self.edge_index(e).expect("side edges lie in the grid"))
            .collect()
    }

    /// Horizontal edges crossed by the middle axis; they are fixed by the
    /// middle reflection.
    pub fn middle_edges(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&ei| self.edges[ei].dir == Dir::E && self.reflect_perm[ei] == ei)
            .collect()
    }

    pub fn reflect_vertex(&self, v: Vertex) -> Vertex {
        Vertex::new(self.n as i32 + 3 - v.y - v.x, v.y)
    }

    pub fn rotate_vertex(&self, v: Vertex) -> Vertex {
        Vertex::new(v.y, self.n as i32 + 3 - v.x - v.y)
    }

    /// Mirror image of an edge across the middle axis.
    pub fn reflect_middle(&self, e: &Edge) -> Result<Edge> {
        let ei = self.require_edge(e)?;
        Ok(self.edges[self.reflect_perm[ei]])
    }

    /// Image of an edge under the order-3 rotation `(x,y) -> (y, n+3-x-y)`.
    pub fn rotate(&self, e: &Edge) -> Result<Edge> {
        let ei = self.require_edge(e)?;
        Ok(self.edges[self.rotate_perm[ei]])
    }

    pub fn reflect_index(&self, ei: usize) -> usize {
        self.reflect_perm[ei]
    }

    pub fn rotate_index(&self, ei: usize) -> usize {
        self.rotate_perm[ei]
    }
}
