//! Known configurations used by tests, the CLI and the README walkthrough.

use crate::cycles::Cycle;
use crate::error::Result;
use crate::grid::{TriGrid, Vertex};

/// Corner walks of two distinct cycles in `T_5` sharing a Slitherlink
/// signature. Their symmetric difference is `A(2)`.
pub const T5_PAIR: [&[(i32, i32)]; 2] = [
    &[
        (1, 1),
        (3, 1),
        (3, 2),
        (4, 2),
        (5, 1),
        (6, 1),
        (4, 3),
        (3, 3),
        (2, 4),
        (2, 5),
        (1, 6),
        (1, 4),
        (2, 3),
        (2, 2),
        (1, 2),
        (1, 1),
    ],
    &[
        (1, 1),
        (1, 3),
        (2, 3),
        (2, 4),
        (1, 5),
        (1, 6),
        (3, 4),
        (3, 3),
        (4, 2),
        (5, 2),
        (6, 1),
        (4, 1),
        (3, 2),
        (2, 2),
        (2, 1),
        (1, 1),
    ],
];

pub fn walk(points: &[(i32, i32)]) -> Vec<Vertex> {
    points.iter().map(|&(x, y)| Vertex::new(x, y)).collect()
}

/// The pair above, built on a fresh `T_5`.
pub fn t5_pair() -> Result<(TriGrid, Cycle, Cycle)> {
    let grid = TriGrid::new(5)?;
    let c1 = Cycle::from_walk(&grid, &walk(T5_PAIR[0]))?;
    let c2 = Cycle::from_walk(&grid, &walk(T5_PAIR[1]))?;
    Ok((grid, c1, c2))
}
