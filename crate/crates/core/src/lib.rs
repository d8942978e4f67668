//! Totally even edge subsets, Slitherlink signatures and transversals on the
//! equilateral triangular grid `T_n`.

pub mod cli;
pub mod cycles;
pub mod edgeset;
pub mod error;
pub mod evenalg;
pub mod fixtures;
pub mod gf2;
pub mod grid;
pub mod io;
pub mod svg;
pub mod transversal;

pub use edgeset::EdgeSet;
pub use error::{Error, Result};
pub use grid::{Dir, Edge, Face, Orient, Side, TriGrid, Vertex};
pub use cycles::{Cycle, Signature};
