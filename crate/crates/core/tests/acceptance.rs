//! Acceptance criteria AC1-AC9, one line each.
//!
//! Runs without the libtest harness so every verdict is printed. The run
//! fails if a criterion outside `KNOWN_UNATTAINABLE` fails, or if a listed
//! one starts passing.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{gcd, subset_filter_cycle_count};
use trigrid::cycles::{
    census, enumerate_cycles, parity_obstruction, signature, verify_pair, CensusOptions,
};
use trigrid::evenalg::{
    basis_size_closed_form, basis_subset, bottom_pattern, check_symmetries,
    count_edges_closed_form, is_totally_even, max_basis_index, null_space_oracle,
    subset_from_indices, BottomPropagator, Propagation, TotallyEvenSubsets,
};
use trigrid::transversal::{
    alternation_check, build_transversal, check_mod4, decompose_transversals, ComponentKind,
};
use trigrid::{fixtures, TriGrid};

/// Criteria that cannot hold as stated; see the README.
const KNOWN_UNATTAINABLE: &[&str] = &["AC8"];

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit: Option<Duration>,
    check: fn() -> (bool, String),
}

fn grid(n: usize) -> TriGrid {
    TriGrid::new(n).unwrap()
}

fn ac1() -> (bool, String) {
    let bad: Vec<usize> = (1..=16)
        .filter(|&n| null_space_oracle(&grid(n)).dimension != n / 2)
        .collect();
    (bad.is_empty(), format!("n=1..16, mismatches at {bad:?}"))
}

fn ac2() -> (bool, String) {
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 1..=16 {
        let g = grid(n);
        for i in 1..=max_basis_index(n) {
            checked += 1;
            let a = basis_subset(&g, i).unwrap();
            let bottom = bottom_pattern(&g, &a);
            let left_ok = (1..=n / 2).all(|k| bottom[k - 1] == (k == i));
            let size_ok = a.count() as u64 == 6 * (n as u64 + 1 - 2 * i as u64) * i as u64
                && a.count() as u64 == basis_size_closed_form(n, i).unwrap();
            if !(is_totally_even(&g, &a).unwrap() && left_ok && size_ok) {
                bad.push((n, i));
            }
        }
    }
    (bad.is_empty(), format!("{checked} (n,i) pairs, failures {bad:?}"))
}

fn ac3() -> (bool, String) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=14 {
        let g = grid(n);
        let m = max_basis_index(n);
        for mask in 1u32..(1 << m) {
            let idx: Vec<usize> = (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            checked += 1;
            let direct = subset_from_indices(&g, &idx).unwrap().count() as u64;
            if direct != count_edges_closed_form(n, &idx).unwrap() {
                bad.push((n, idx));
            }
        }
    }
    let spot = count_edges_closed_form(11, &[4, 5]).unwrap();
    (
        bad.is_empty() && spot == 60,
        format!("{checked} index sets, failures {bad:?}; n=11 {{4,5}} -> {spot}"),
    )
}

fn ac4() -> (bool, String) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=12 {
        let g = grid(n);
        for (mask, set) in TotallyEvenSubsets::new(&g) {
            checked += 1;
            if !check_symmetries(&g, &set).unwrap().all() {
                bad.push((n, mask));
            }
        }
    }
    (bad.is_empty(), format!("{checked} subsets, failures {bad:?}"))
}

fn ac5() -> (bool, String) {
    let mut round_trips = 0;
    let mut patterns = 0;
    let mut bad = Vec::new();
    for n in 1..=12 {
        let g = grid(n);
        let p = BottomPropagator::new(&g).unwrap();
        for (_, set) in TotallyEvenSubsets::new(&g) {
            round_trips += 1;
            if p.propagate(&bottom_pattern(&g, &set)).unwrap() != Propagation::Subset(set) {
                bad.push((n, "round trip"));
            }
        }
        for bits in 0u32..(1 << n) {
            let b: Vec<bool> = (0..n).map(|k| bits >> k & 1 == 1).collect();
            let asymmetric = (0..n).any(|k| b[k] != b[n - 1 - k]);
            let middle = n % 2 == 1 && b[n / 2];
            if asymmetric || middle {
                patterns += 1;
                if p.propagate(&b).unwrap() != Propagation::Infeasible {
                    bad.push((n, "feasible asymmetric pattern"));
                }
            }
        }
    }
    (
        bad.is_empty(),
        format!("{round_trips} round trips, {patterns} infeasible patterns, failures {bad:?}"),
    )
}

fn ac6() -> (bool, String) {
    let (g, c1, c2) = fixtures::t5_pair().unwrap();
    let same_sig = signature(&g, &c1) == signature(&g, &c2);
    let diff = c1.edges() ^ c2.edges();
    let is_a2 = diff == basis_subset(&g, 2).unwrap();
    let report = verify_pair(&g, &c1, &c2).unwrap();
    let t = build_transversal(&g, &diff).unwrap();
    let d = decompose_transversals(&t);
    let mut sizes = d.sizes();
    sizes.sort_unstable();
    let mod4 = check_mod4(&d);
    let alt = alternation_check(&g, &diff, c1.edges(), c2.edges()).unwrap();
    let ok = same_sig
        && is_a2
        && diff.count() == 24
        && diff.count() % 12 == 0
        && report.all_hold()
        && sizes == [4, 4, 4, 12]
        && mod4
        && alt;
    (
        ok,
        format!(
            "same signature {same_sig}, diff = A(2) {is_a2}, |diff| {}, sizes {sizes:?}, mod4 {mod4}, alternation {alt}",
            diff.count()
        ),
    )
}

fn ac7() -> (bool, String) {
    let a = basis_subset(&grid(5), 2).unwrap().count() as u64;
    let b = subset_from_indices(&grid(11), &[4, 5]).unwrap().count() as u64;
    let d = gcd(a, b);
    (a == 24 && b == 60 && d == 12, format!("{a}, {b}, gcd {d}"))
}

fn ac8() -> (bool, String) {
    let g = grid(2);
    let a1 = basis_subset(&g, 1).unwrap();
    let d = decompose_transversals(&build_transversal(&g, &a1).unwrap());
    let single_loop = d.components.len() == 1
        && d.components[0].kind == ComponentKind::Loop
        && d.components[0].size() == 6;
    let mod4_fails = !check_mod4(&d);
    let obstruction = parity_obstruction(&g, &a1).unwrap();
    let mut pairs = 0;
    let mut pairs_ok = true;
    for n in [2, 3] {
        let res = census(&grid(n), &CensusOptions::default());
        for (x, y) in res.pairs() {
            pairs += 1;
            pairs_ok &= verify_pair(&grid(n), x, y).unwrap().all_hold();
        }
    }
    let kinds: Vec<String> = d
        .components
        .iter()
        .map(|c| format!("{:?}({})", c.kind, c.size()))
        .collect();
    (
        single_loop && mod4_fails && obstruction && pairs_ok,
        format!(
            "A(1) in T_2 transversals {kinds:?} (single 6-node loop {single_loop}), mod4 fails {mod4_fails}, \
             obstruction {obstruction}, census pairs n<=3: {pairs} all verified {pairs_ok}"
        ),
    )
}

fn ac9() -> (bool, String) {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in [2, 3] {
        let g = grid(n);
        let walked = enumerate_cycles(&g, None).count() as u64;
        let counted = census(&g, &CensusOptions::default()).total_cycles;
        let oracle = subset_filter_cycle_count(&g);
        ok &= walked == oracle && counted == oracle;
        parts.push(format!("n={n}: enumerated {walked}, census {counted}, oracle {oracle}"));
    }
    (ok, parts.join("; "))
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: "AC1", title: "null-space dimension is floor(n/2)", limit: secs(5), check: ac1 },
        Criterion { id: "AC2", title: "basis subsets and |A(i)| = 6(n-2i+1)i", limit: secs(5), check: ac2 },
        Criterion { id: "AC3", title: "closed-form edge count is exact", limit: secs(30), check: ac3 },
        Criterion { id: "AC4", title: "reflection, rotation and middle avoidance", limit: secs(30), check: ac4 },
        Criterion { id: "AC5", title: "bottom side determines the subset", limit: None, check: ac5 },
        Criterion { id: "AC6", title: "T_5 same-signature pair", limit: secs(1), check: ac6 },
        Criterion { id: "AC7", title: "gcd witness 24, 60 -> 12", limit: None, check: ac7 },
        Criterion { id: "AC8", title: "odd smallest index obstruction", limit: secs(60), check: ac8 },
        Criterion { id: "AC9", title: "cycle enumeration matches subset filter", limit: secs(60), check: ac9 },
    ];
    let mut unexpected = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let (holds, detail) = (c.check)();
        let elapsed = start.elapsed();
        let in_time = c.limit.is_none_or(|l| elapsed <= l);
        let pass = holds && in_time;
        let limit = c.limit.map_or(String::new(), |l| format!(" limit {}s", l.as_secs()));
        println!(
            "[{}] {} {}: {detail} ({:.3}s{limit})",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            elapsed.as_secs_f64()
        );
        if pass == KNOWN_UNATTAINABLE.contains(&c.id) {
            unexpected.push(c.id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: results as expected; known unattainable: {KNOWN_UNATTAINABLE:?}");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected results for {unexpected:?}");
        ExitCode::FAILURE
    }
}
