//! Property tests for certificates, graphs and the brute-force oracles.

use arena_core::certificate::{
    clique_number, intersection_graph, offline_color, validate_class, Certificate, ClassSpec,
};
use arena_core::coord::Coord;
use arena_core::graph::{contains_induced_claw, graph_clique_bruteforce};
use arena_core::interval::Interval;
use arena_core::oracle::{brute_chromatic, is_unit_interval_graph, unit_representation};
use proptest::prelude::*;

/// Left ends on a quarter grid; lengths drawn from `lengths`.
fn certificate(max_n: usize, lengths: Vec<Coord>) -> impl Strategy<Value = Certificate> {
    let n_lengths = lengths.len();
    prop::collection::vec((0i64..120, 0..n_lengths), 0..=max_n).prop_map(move |raw| {
        Certificate::new(
            raw.into_iter()
                .map(|(l, i)| Interval::with_length(Coord::ratio(l, 4), &lengths[i]))
                .collect(),
        )
    })
}

fn any_lengths() -> Vec<Coord> {
    [(1, 4), (1, 1), (3, 2), (5, 2), (4, 1), (9, 1)]
        .iter()
        .map(|&(n, d)| Coord::ratio(n, d))
        .collect()
}

fn unit_certificate(max_n: usize) -> impl Strategy<Value = Certificate> {
    certificate(max_n, vec![Coord::one()])
}

proptest! {
    #[test]
    fn sweep_clique_matches_graph_clique(cert in certificate(20, any_lengths())) {
        let g = intersection_graph(&cert);
        prop_assert_eq!(clique_number(&cert), graph_clique_bruteforce(&g).unwrap());
    }

    #[test]
    fn offline_coloring_is_optimal(cert in certificate(50, any_lengths())) {
        let (colors, count) = offline_color(&cert);
        prop_assert_eq!(count, clique_number(&cert));
        let g = intersection_graph(&cert);
        for (u, v) in g.edges() {
            prop_assert_ne!(colors[u], colors[v]);
        }
    }

    #[test]
    fn chromatic_number_equals_clique(cert in certificate(12, any_lengths())) {
        let g = intersection_graph(&cert);
        prop_assert_eq!(brute_chromatic(&g).unwrap(), clique_number(&cert));
    }

    #[test]
    fn intersects_is_symmetric(a in (0i64..40, 1i64..12), b in (0i64..40, 1i64..12)) {
        let x = Interval::new(Coord::ratio(a.0, 4), Coord::ratio(a.0 + a.1, 4)).unwrap();
        let y = Interval::new(Coord::ratio(b.0, 4), Coord::ratio(b.0 + b.1, 4)).unwrap();
        prop_assert_eq!(x.intersects(&y), y.intersects(&x));
        prop_assert!(x.intersects(&x.clone()));
    }

    #[test]
    fn clique_is_translation_invariant(cert in certificate(30, any_lengths()), num in -500i64..500, den in 1i64..9) {
        let by = Coord::ratio(num, den);
        let moved = Certificate::new(cert.intervals().iter().map(|iv| iv.translate(&by)).collect());
        prop_assert_eq!(clique_number(&moved), clique_number(&cert));
        prop_assert_eq!(intersection_graph(&moved), intersection_graph(&cert));
    }

    #[test]
    fn unit_certificates_are_in_wider_classes(cert in unit_certificate(30), extra in 1i64..20) {
        prop_assert!(validate_class(&cert, &ClassSpec::Unit).ok);
        let sigma = Coord::one() + Coord::ratio(extra, 4);
        prop_assert!(validate_class(&cert, &ClassSpec::sigma(sigma)).ok);
        prop_assert!(validate_class(&cert, &ClassSpec::TwoCount).ok);
    }

    #[test]
    fn unit_certificates_are_claw_free(cert in unit_certificate(30)) {
        prop_assert!(!contains_induced_claw(&intersection_graph(&cert)));
    }

    #[test]
    fn unit_graphs_are_recognized_and_rebuilt(cert in unit_certificate(10)) {
        let g = intersection_graph(&cert);
        prop_assert!(is_unit_interval_graph(&g));
        let rebuilt = unit_representation(&g).expect("unit graph has a unit representation");
        prop_assert!(validate_class(&rebuilt, &ClassSpec::Unit).ok);
        prop_assert_eq!(intersection_graph(&rebuilt), g);
    }

    #[test]
    fn recognition_rejects_claws(cert in certificate(10, any_lengths())) {
        let g = intersection_graph(&cert);
        if contains_induced_claw(&g) {
            prop_assert!(!is_unit_interval_graph(&g));
        }
    }
}
