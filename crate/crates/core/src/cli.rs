//! Command-line surface. `main` parses [`Cli`] and hands it to [`run`].
//!
//! Exit codes: 0 when the checked property holds, 1 when it is verified not
//! to hold, 2 for usage, parse and I/O errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::cycles::{
    census, parity_obstruction, signature, verify_pair, CensusOptions, Cycle, PairReport,
};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::evenalg::{
    basis_size_closed_form, check_symmetries, decompose, max_basis_index, null_space_oracle,
    parity_violation, subset_from_indices, GapProfile,
};
use crate::grid::TriGrid;
use crate::io::{format_edge_set, read_cycle, read_edge_set, write_edge_set};
use crate::svg::{render_svg, SvgOptions};
use crate::transversal::{
    alternation_check, build_transversal, check_mod4, decompose_transversals, ComponentKind,
};

#[derive(Parser, Debug)]
#[command(name = "trigrid", version, about = "Totally even subsets of the triangular grid T_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the basis subset A(i) of T_n.
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        /// Write the subset as an edge-set file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether an edge-set file is totally even.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Enumerate all simple cycles of T_n and group them by signature.
    Census(CensusArgs),
    /// Build the transversals of a totally even subset.
    Transversal {
        #[arg(long = "in")]
        input: PathBuf,
        /// Cycle files whose symmetric difference is the input.
        #[arg(long, requires = "c2")]
        c1: Option<PathBuf>,
        #[arg(long, requires = "c1")]
        c2: Option<PathBuf>,
        /// Write an SVG drawing.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 40.0)]
        unit_px: f64,
    },
    /// Draw an edge-set file as SVG; totally even sets get their transversals.
    Svg {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 40.0)]
        unit_px: f64,
    },
    /// Null-space dimension of the parity system, by elimination.
    Oracle {
        #[arg(long)]
        n: usize,
    },
    /// Closed-form edge count of a sum of basis subsets.
    Formula {
        #[arg(long)]
        n: usize,
        /// Comma-separated basis indices, e.g. 4,5.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        indices: Vec<usize>,
    },
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub max_cycles: Option<u64>,
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Directory for same-signature pairs as cycle files.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Report the multiplicity of these cycles' signatures.
    #[arg(long, requires = "c2")]
    pub c1: Option<PathBuf>,
    #[arg(long, requires = "c1")]
    pub c2: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Holds => 0,
            Status::Fails => 1,
        }
    }

    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Holds
        } else {
            Status::Fails
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status> {
    match &cli.command {
        Command::Basis { n, i, out: path } => cmd_basis(*n, *i, path.as_deref(), out),
        Command::Verify { input } => cmd_verify(input, out),
        Command::Census(args) => cmd_census(args, out),
        Command::Transversal {
            input,
            c1,
            c2,
            out: svg,
            unit_px,
        } => cmd_transversal(input, c1.as_deref().zip(c2.as_deref()), svg.as_deref(), *unit_px, out),
        Command::Svg {
            input,
            out: path,
            unit_px,
        } => cmd_svg(input, path, *unit_px, out),
        Command::Oracle { n } => cmd_oracle(*n, out),
        Command::Formula { n, indices } => cmd_formula(*n, indices, out),
    }
}

fn cmd_basis(n: usize, i: usize, path: Option<&Path>, out: &mut dyn Write) -> Result<Status> {
    let grid = TriGrid::new(n)?;
    let a = crate::evenalg::basis_subset(&grid, i)?;
    let closed = basis_size_closed_form(n, i)?;
    writeln!(out, "A({i}) in T_{n}: {} edges", a.count())?;
    writeln!(out, "closed form 6(n-2i+1)i = {closed}")?;
    if let Some(p) = path {
        write_edge_set(p, &grid, &a)?;
        writeln!(out, "wrote {}", p.display())?;
    }
    Ok(Status::from_bool(a.count() as u64 == closed))
}

fn cmd_verify(input: &Path, out: &mut dyn Write) -> Result<Status> {
    let (grid, set) = read_edge_set(input)?;
    if let Some(v) = parity_violation(&grid, &set)? {
        writeln!(out, "NOT totally even: {v}")?;
        return Ok(Status::Fails);
    }
    let idx = decompose(&grid, &set)?;
    writeln!(out, "totally even; decomposition {}; {} edges", list(&idx), set.count())?;
    let closed = GapProfile::new(grid.n(), &idx)?.edge_count();
    writeln!(out, "closed form: {closed} edges")?;
    let sym = check_symmetries(&grid, &set)?;
    writeln!(
        out,
        "symmetry: reflection {}, rotation {}, avoids middle {}",
        yes(sym.reflect_invariant),
        yes(sym.rotate_invariant),
        yes(sym.avoids_middle)
    )?;
    Ok(Status::from_bool(closed == set.count() as u64 && sym.all()))
}

fn pair_line(r: &PairReport) -> String {
    format!(
        "difference {}; decomposition {}; totally even {}; 12 divides {}; even smallest index {}; faces split {}; {}",
        r.difference_size,
        list(&r.decomposition),
        yes(r.totally_even),
        yes(r.divisible_by_12),
        yes(r.smallest_index_even),
        yes(r.faces_split),
        if r.all_hold() { "OK" } else { "FAIL" }
    )
}

fn load_cycle_on(grid: &TriGrid, path: &Path) -> Result<Cycle> {
    let (g, c) = read_cycle(path)?;
    if g.n() != grid.n() {
        return Err(Error::InvalidInput(format!(
            "{} is on T_{}, expected T_{}",
            path.display(),
            g.n(),
            grid.n()
        )));
    }
    Ok(c)
}

fn cmd_census(args: &CensusArgs, out: &mut dyn Write) -> Result<Status> {
    let grid = TriGrid::new(args.n)?;
    let supplied = match (&args.c1, &args.c2) {
        (Some(a), Some(b)) => Some((load_cycle_on(&grid, a)?, load_cycle_on(&grid, b)?)),
        _ => None,
    };
    if args.jobs == Some(0) {
        return Err(Error::InvalidParameter("--jobs must be at least 1".into()));
    }
    let opts = CensusOptions {
        max_cycles: args.max_cycles,
        jobs: args.jobs,
        ..CensusOptions::default()
    };
    let res = census(&grid, &opts);
    writeln!(out, "cycles: {}", res.total_cycles)?;
    writeln!(out, "distinct signatures: {}", res.distinct_signatures)?;
    writeln!(out, "max multiplicity: {}", res.max_multiplicity())?;
    writeln!(out, "repeated signatures: {}", res.repeated.len())?;
    writeln!(out, "partial: {}", yes(res.partial))?;

    if let Some(dir) = &args.out {
        fs::create_dir_all(dir)?;
    }
    let mut ok = true;
    for (k, (a, b)) in res.pairs().enumerate() {
        let report = verify_pair(&grid, a, b)?;
        ok &= report.all_hold();
        writeln!(out, "pair {}: {}", k + 1, pair_line(&report))?;
        if let Some(dir) = &args.out {
            for (tag, c) in [("a", a), ("b", b)] {
                let path = dir.join(format!("pair-{:03}-{tag}.txt", k + 1));
                fs::write(path, format_edge_set(&grid, c.edges()))?;
            }
        }
    }

    if let Some((c1, c2)) = &supplied {
        let (s1, s2) = (signature(&grid, c1), signature(&grid, c2));
        writeln!(out, "supplied c1: signature {s1}, multiplicity {}", res.multiplicity(&s1))?;
        writeln!(out, "supplied c2: signature {s2}, multiplicity {}", res.multiplicity(&s2))?;
        if s1 == s2 && c1 != c2 {
            let report = verify_pair(&grid, c1, c2)?;
            ok &= report.all_hold();
            writeln!(out, "supplied pair: {}", pair_line(&report))?;
        } else {
            writeln!(out, "supplied pair: not a same-signature pair")?;
        }
    }
    Ok(Status::from_bool(ok))
}

fn cmd_transversal(
    input: &Path,
    cycles: Option<(&Path, &Path)>,
    svg: Option<&Path>,
    unit_px: f64,
    out: &mut dyn Write,
) -> Result<Status> {
    let (grid, set) = read_edge_set(input)?;
    let t = build_transversal(&grid, &set)?;
    let d = decompose_transversals(&t);
    let mut ok = true;
    if d.components.is_empty() {
        writeln!(out, "no components")?;
    } else {
        let mut sizes = d.sizes();
        sizes.sort_unstable();
        let sizes: Vec<String> = sizes.iter().map(ToString::to_string).collect();
        let mod4 = check_mod4(&d);
        ok &= mod4;
        let verdict = if mod4 {
            "mod4 OK".to_string()
        } else if parity_obstruction(&grid, &set)? {
            "mod4 FAIL (consistent with odd smallest index)".to_string()
        } else {
            "mod4 FAIL".to_string()
        };
        writeln!(out, "{{{}}}; {verdict}", sizes.join(","))?;
        let loops = d.components.iter().filter(|c| c.kind == ComponentKind::Loop).count();
        writeln!(out, "paths: {}, loops: {loops}", d.components.len() - loops)?;
    }
    if let Some((p1, p2)) = cycles {
        let c1 = load_cycle_on(&grid, p1)?;
        let c2 = load_cycle_on(&grid, p2)?;
        let alt = alternation_check(&grid, &set, c1.edges(), c2.edges())?;
        ok &= alt;
        writeln!(out, "alternation {}", if alt { "OK" } else { "FAIL" })?;
    }
    if let Some(p) = svg {
        write_svg(p, &grid, &set, unit_px)?;
        writeln!(out, "wrote {}", p.display())?;
    }
    Ok(Status::from_bool(ok))
}

fn write_svg(path: &Path, grid: &TriGrid, set: &EdgeSet, unit_px: f64) -> Result<()> {
    if !(unit_px.is_finite() && unit_px > 0.0) {
        return Err(Error::InvalidParameter(format!("--unit-px must be positive, got {unit_px}")));
    }
    let t = match build_transversal(grid, set) {
        Ok(t) => Some(t),
        Err(Error::InvalidInput(_)) => None,
        Err(e) => return Err(e),
    };
    let opts = SvgOptions {
        unit_px,
        ..SvgOptions::default()
    };
    fs::write(path, render_svg(grid, set, t.as_ref(), &opts))?;
    Ok(())
}

fn cmd_svg(input: &Path, path: &Path, unit_px: f64, out: &mut dyn Write) -> Result<Status> {
    let (grid, set) = read_edge_set(input)?;
    write_svg(path, &grid, &set, unit_px)?;
    writeln!(out, "wrote {}", path.display())?;
    Ok(Status::Holds)
}

fn cmd_oracle(n: usize, out: &mut dyn Write) -> Result<Status> {
    let grid = TriGrid::new(n)?;
    let ns = null_space_oracle(&grid);
    let expected = max_basis_index(n);
    writeln!(
        out,
        "T_{n}: {} edges, {} constraints, null-space dimension {} (floor(n/2) = {expected})",
        grid.num_edges(),
        grid.num_vertices() + grid.num_faces(),
        ns.dimension
    )?;
    for (k, set) in ns.basis.iter().enumerate() {
        let idx = decompose(&grid, set)?;
        writeln!(out, "vector {}: {} edges, decomposition {}", k + 1, set.count(), list(&idx))?;
    }
    Ok(Status::from_bool(ns.dimension == expected))
}

/// Above this size the direct construction is skipped.
const FORMULA_DIRECT_MAX_N: usize = 512;

fn cmd_formula(n: usize, indices: &[usize], out: &mut dyn Write) -> Result<Status> {
    let profile = GapProfile::new(n, indices)?;
    let gaps: Vec<String> = profile.doubled_gaps().iter().map(ToString::to_string).collect();
    let (p, q) = profile.doubled_sums();
    writeln!(out, "indices {} in T_{n}", list(indices))?;
    writeln!(out, "doubled gaps: [{}]", gaps.join(", "))?;
    writeln!(out, "doubled even sum {p}, doubled odd sum {q}")?;
    writeln!(out, "closed form: {} edges", profile.edge_count())?;
    if n > FORMULA_DIRECT_MAX_N {
        writeln!(out, "direct: skipped (n > {FORMULA_DIRECT_MAX_N})")?;
        return Ok(Status::Holds);
    }
    let grid = TriGrid::new(n)?;
    let direct = subset_from_indices(&grid, indices)?.count() as u64;
    writeln!(out, "direct: {direct} edges")?;
    Ok(Status::from_bool(direct == profile.edge_count()))
}
