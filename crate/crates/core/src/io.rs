//! Text formats for edge sets and cycles.
//!
//! Both formats are line oriented. Blank lines and `#` comments are
//! ignored. The first record is the grid size:
//!
//! ```text
//! n 5
//! e 1 1 2 1
//! e 2 1 2 2
//! ```
//!
//! `e x1 y1 x2 y2` names a unit edge by its endpoints in either order.
//! A cycle file may instead list the corners of a closed walk with
//! `v x y` records; each segment between corners must follow one of the
//! three grid directions. Saved files list edges in canonical order with the
//! base vertex first, so saving a loaded canonical file reproduces it.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::cycles::{validate_cycle, walk_edges, Cycle};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::grid::{TriGrid, Vertex};

enum Record {
    Edge(Vertex, Vertex),
    Corner(Vertex),
}

struct Parsed {
    grid: TriGrid,
    records: Vec<(usize, Record)>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_ints(line: usize, fields: &[&str], want: usize) -> Result<Vec<i32>> {
    if fields.len() != want {
        return Err(parse_err(
            line,
            format!("expected {want} integers, found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<i32>()
                .map_err(|_| parse_err(line, format!("`{f}` is not an integer")))
        })
        .collect()
}

fn parse(text: &str) -> Result<Parsed> {
    let mut grid: Option<TriGrid> = None;
    let mut records = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let (tag, rest) = fields.split_first().expect("non-empty line");
        match (*tag, &grid) {
            ("n", None) => {
                let v = parse_ints(line, rest, 1)?;
                let n = usize::try_from(v[0]).map_err(|_| parse_err(line, "grid size must be positive"))?;
                grid = Some(TriGrid::new(n).map_err(|e| parse_err(line, e.to_string()))?);
            }
            ("n", Some(_)) => return Err(parse_err(line, "grid size given twice")),
            (_, None) => return Err(parse_err(line, "expected `n <size>` before any other record")),
            ("e", Some(_)) => {
                let v = parse_ints(line, rest, 4)?;
                records.push((line, Record::Edge(Vertex::new(v[0], v[1]), Vertex::new(v[2], v[3]))));
            }
            ("v", Some(_)) => {
                let v = parse_ints(line, rest, 2)?;
                records.push((line, Record::Corner(Vertex::new(v[0], v[1]))));
            }
            (other, Some(_)) => return Err(parse_err(line, format!("unknown record `{other}`"))),
        }
    }
    let grid = grid.ok_or_else(|| parse_err(text.lines().count().max(1), "missing `n <size>` record"))?;
    Ok(Parsed { grid, records })
}

fn collect_edges(p: &Parsed) -> Result<EdgeSet> {
    let mut set = EdgeSet::empty(&p.grid);
    for (line, rec) in &p.records {
        match rec {
            Record::Edge(a, b) => {
                let e = p.grid.edge_between(*a, *b).ok_or_else(|| {
                    parse_err(*line, format!("{a}-{b} is not a unit edge of T_{}", p.grid.n()))
                })?;
                if set.contains(e) {
                    return Err(parse_err(*line, format!("duplicate edge {}", p.grid.edge(e))));
                }
                set.insert(e);
            }
            Record::Corner(_) => return Err(parse_err(*line, "corner records are only allowed in cycle files")),
        }
    }
    Ok(set)
}

pub fn parse_edge_set(text: &str) -> Result<(TriGrid, EdgeSet)> {
    let p = parse(text)?;
    let set = collect_edges(&p)?;
    Ok((p.grid, set))
}

pub fn format_edge_set(grid: &TriGrid, set: &EdgeSet) -> String {
    let mut out = format!("n {}\n", grid.n());
    for e in set.edges(grid) {
        let [a, b] = e.endpoints();
        writeln!(out, "e {} {} {} {}", a.x, a.y, b.x, b.y).expect("write to string");
    }
    out
}

/// Parses a cycle given either as unit edges or as a corner walk.
pub fn parse_cycle(text: &str) -> Result<(TriGrid, Cycle)> {
    let p = parse(text)?;
    let corners: Vec<Vertex> = p
        .records
        .iter()
        .filter_map(|(_, r)| match r {
            Record::Corner(v) => Some(*v),
            Record::Edge(..) => None,
        })
        .collect();
    let set = if corners.is_empty() {
        collect_edges(&p)?
    } else {
        if let Some((line, _)) = p.records.iter().find(|(_, r)| matches!(r, Record::Edge(..))) {
            return Err(parse_err(*line, "a cycle file uses either edges or corners, not both"));
        }
        let first_line = p.records[0].0;
        walk_edges(&p.grid, &corners).map_err(|e| parse_err(first_line, e.to_string()))?
    };
    let cycle = validate_cycle(&p.grid, &set)
        .map_err(|d| Error::InvalidInput(format!("not a simple cycle: {d}")))?;
    Ok((p.grid, cycle))
}

pub fn read_edge_set(path: &Path) -> Result<(TriGrid, EdgeSet)> {
    parse_edge_set(&fs::read_to_string(path)?)
}

pub fn read_cycle(path: &Path) -> Result<(TriGrid, Cycle)> {
    parse_cycle(&fs::read_to_string(path)?)
}

pub fn write_edge_set(path: &Path, grid: &TriGrid, set: &EdgeSet) -> Result<()> {
    fs::write(path, format_edge_set(grid, set))?;
    Ok(())
}
