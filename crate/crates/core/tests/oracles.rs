mod common;

use common::{is_totally_even_by_coords, subset_filter_cycle_count};
use trigrid::cycles::{
    census, enumerate_cycles, rewire_shared_side, shares_side, signature, verify_pair,
    CensusOptions,
};
use trigrid::evenalg::{
    basis_subset, count_edges_closed_form, decompose, max_basis_index, null_space_oracle,
    subset_from_indices, TotallyEvenSubsets,
};
use trigrid::transversal::{alternation_check, build_transversal, check_mod4, decompose_transversals};
use trigrid::{fixtures, EdgeSet, Side, TriGrid};

fn grid(n: usize) -> TriGrid {
    TriGrid::new(n).unwrap()
}

#[test]
fn oracle_basis_lies_in_span_of_constructed_basis() {
    for n in 1..=16 {
        let g = grid(n);
        let ns = null_space_oracle(&g);
        assert_eq!(ns.dimension, max_basis_index(n), "n={n}");
        for v in &ns.basis {
            assert!(is_totally_even_by_coords(&g, v));
            let idx = decompose(&g, v).unwrap();
            assert_eq!(&subset_from_indices(&g, &idx).unwrap(), v, "n={n}");
        }
    }
}

#[test]
fn constructed_subsets_pass_coordinate_parity_check() {
    for n in 1..=14 {
        let g = grid(n);
        for (mask, set) in TotallyEvenSubsets::new(&g) {
            assert!(is_totally_even_by_coords(&g, &set), "n={n} mask={mask:b}");
        }
    }
}

#[test]
fn edge_counts_divisible_by_six() {
    for n in 1..=30 {
        let m = max_basis_index(n);
        for mask in 1u32..(1 << m.min(8)) {
            let idx: Vec<usize> = (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let c = count_edges_closed_form(n, &idx).unwrap();
            assert_eq!(c % 6, 0, "n={n} {idx:?}");
        }
    }
}

#[test]
fn single_edge_and_non_even_sets_fail_coordinate_check() {
    let g = grid(4);
    assert!(!is_totally_even_by_coords(&g, &EdgeSet::from_indices(&g, [0])));
    let mut a = basis_subset(&g, 1).unwrap();
    let e = a.iter().next().unwrap();
    a.remove(e);
    assert!(!is_totally_even_by_coords(&g, &a));
}

#[test]
fn enumeration_matches_subset_filter() {
    for n in 1..=3 {
        let g = grid(n);
        let walker = enumerate_cycles(&g, None).count() as u64;
        assert_eq!(walker, subset_filter_cycle_count(&g), "n={n}");
    }
}

#[test]
fn census_total_matches_enumeration() {
    let g = grid(4);
    let res = census(&g, &CensusOptions::default());
    assert_eq!(res.total_cycles, enumerate_cycles(&g, None).count() as u64);
    assert_eq!(res.multiplicity_total(), res.total_cycles);
    assert!(!res.partial);
}

#[test]
fn census_independent_of_job_count() {
    let g = grid(4);
    let one = census(&g, &CensusOptions { jobs: Some(1), ..Default::default() });
    let four = census(&g, &CensusOptions { jobs: Some(4), ..Default::default() });
    assert_eq!(one.total_cycles, four.total_cycles);
    assert_eq!(one.distinct_signatures, four.distinct_signatures);
    for cap in [0u64, 1, 500, 2401] {
        let a = census(&g, &CensusOptions { jobs: Some(1), max_cycles: Some(cap), ..Default::default() });
        let b = census(&g, &CensusOptions { jobs: Some(3), max_cycles: Some(cap), ..Default::default() });
        assert_eq!(a.total_cycles, cap);
        assert!(a.partial && b.partial);
        assert_eq!(a.distinct_signatures, b.distinct_signatures);
    }
}

#[test]
fn t5_census_finds_t5_pair_and_every_pair_verifies() {
    let (g, c1, c2) = fixtures::t5_pair().unwrap();
    let res = census(&g, &CensusOptions::default());
    assert_eq!(signature(&g, &c1), signature(&g, &c2));
    assert!(res.multiplicity(&signature(&g, &c1)) >= 2);
    assert!(res.max_multiplicity() >= 2);
    let mut pairs = 0;
    for (a, b) in res.pairs() {
        pairs += 1;
        let report = verify_pair(&g, a, b).unwrap();
        assert!(report.all_hold(), "{report:?}");
        let diff = a.edges() ^ b.edges();
        let t = build_transversal(&g, &diff).unwrap();
        assert!(check_mod4(&decompose_transversals(&t)));
        assert!(alternation_check(&g, &diff, a.edges(), b.edges()).unwrap());
    }
    assert_eq!(pairs, res.repeated.len());
}

#[test]
fn no_repeated_signatures_below_t5() {
    for n in 1..=4 {
        let res = census(&grid(n), &CensusOptions::default());
        assert_eq!(res.max_multiplicity(), 1, "n={n}");
        assert!(res.repeated.is_empty());
    }
}

#[test]
fn rewiring_census_pairs_keeps_signature_and_difference() {
    let g = grid(5);
    let res = census(&g, &CensusOptions::default());
    for (a, b) in res.pairs() {
        let (r1, r2) = rewire_shared_side(&g, a, b).unwrap();
        assert_eq!(signature(&g, &r1), signature(&g, &r2));
        assert_eq!(r1.edges() ^ r2.edges(), a.edges() ^ b.edges());
        for side in Side::ALL {
            assert!(shares_side(&g, r1.edges(), r2.edges(), side));
        }
    }
}
