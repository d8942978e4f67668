use proptest::prelude::*;
use trigrid::cycles::{signature, validate_cycle, zigzag_edges, Cycle};
use trigrid::evenalg::{
    basis_subset, bottom_pattern, check_symmetries, count_edges_closed_form, decompose,
    is_totally_even, max_basis_index, subset_from_indices, BottomPropagator, Propagation,
};
use trigrid::io::{format_edge_set, parse_cycle, parse_edge_set};
use trigrid::{fixtures, EdgeSet, TriGrid, Vertex};

/// A grid size and a nonempty strictly increasing index list for it.
fn grid_and_indices(max_n: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (2..=max_n).prop_flat_map(|n| {
        let m = max_basis_index(n);
        (Just(n), proptest::collection::btree_set(1..=m, 1..=m.min(6)))
            .prop_map(|(n, s)| (n, s.into_iter().collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_sums_are_even_and_symmetric((n, idx) in grid_and_indices(24)) {
        let g = TriGrid::new(n).unwrap();
        let s = subset_from_indices(&g, &idx).unwrap();
        prop_assert!(is_totally_even(&g, &s).unwrap());
        prop_assert!(check_symmetries(&g, &s).unwrap().all());
        prop_assert_eq!(decompose(&g, &s).unwrap(), idx);
    }

    #[test]
    fn closed_form_matches_construction((n, idx) in grid_and_indices(60)) {
        let g = TriGrid::new(n).unwrap();
        let direct = subset_from_indices(&g, &idx).unwrap().count() as u64;
        prop_assert_eq!(count_edges_closed_form(n, &idx).unwrap(), direct);
    }

    #[test]
    fn zigzag_inside_when_smallest_index((n, idx) in grid_and_indices(24)) {
        let g = TriGrid::new(n).unwrap();
        let s = subset_from_indices(&g, &idx).unwrap();
        let z = zigzag_edges(&g, idx[0]).unwrap();
        prop_assert_eq!(z.count(), 2 * idx[0]);
        prop_assert!(z.is_subset(&s));
    }

    #[test]
    fn bottom_side_determines_subset((n, idx) in grid_and_indices(40)) {
        let g = TriGrid::new(n).unwrap();
        let s = subset_from_indices(&g, &idx).unwrap();
        let p = BottomPropagator::new(&g).unwrap();
        prop_assert_eq!(p.propagate(&bottom_pattern(&g, &s)).unwrap(), Propagation::Subset(s));
    }

    #[test]
    fn edge_set_round_trip(
        n in 1usize..12,
        picks in proptest::collection::vec(any::<proptest::sample::Index>(), 0..60),
    ) {
        let g = TriGrid::new(n).unwrap();
        let s = EdgeSet::from_indices(&g, picks.iter().map(|p| p.index(g.num_edges())));
        let text = format_edge_set(&g, &s);
        let (g2, back) = parse_edge_set(&text).unwrap();
        prop_assert_eq!(g2.n(), n);
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(format_edge_set(&g2, &back), text);
    }

    #[test]
    fn reflected_and_rotated_basis_elements_are_fixed((n, idx) in grid_and_indices(20)) {
        let g = TriGrid::new(n).unwrap();
        for &i in &idx {
            let a = basis_subset(&g, i).unwrap();
            prop_assert_eq!(&a.reflected(&g), &a);
            prop_assert_eq!(&a.rotated(&g).rotated(&g), &a);
        }
    }
}

fn fixture_walks() -> Vec<Vec<Vertex>> {
    fixtures::T5_PAIR.iter().map(|w| fixtures::walk(w)).collect()
}

proptest! {
    #[test]
    fn signature_ignores_walk_direction_and_start(which in 0usize..2, shift in 0usize..15) {
        let g = TriGrid::new(5).unwrap();
        let walk = &fixture_walks()[which];
        let base = Cycle::from_walk(&g, walk).unwrap();
        let open = &walk[..walk.len() - 1];
        let mut turned: Vec<Vertex> = open.iter().cycle().skip(shift).take(open.len()).copied().collect();
        turned.reverse();
        turned.push(turned[0]);
        let other = Cycle::from_walk(&g, &turned).unwrap();
        prop_assert_eq!(&other, &base);
        prop_assert_eq!(signature(&g, &other), signature(&g, &base));
    }

    #[test]
    fn corner_walk_file_round_trip(which in 0usize..2) {
        let walk = &fixture_walks()[which];
        let mut text = String::from("n 5\n");
        for v in walk {
            text += &format!("v {} {}\n", v.x, v.y);
        }
        let (g, c) = parse_cycle(&text).unwrap();
        let saved = format_edge_set(&g, c.edges());
        let (_, again) = parse_cycle(&saved).unwrap();
        prop_assert_eq!(validate_cycle(&g, again.edges()).unwrap(), c);
    }
}
