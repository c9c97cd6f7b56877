//! The two small graphs separating 2-count interval graphs from unit and
//! from general interval graphs.

use anyhow::{ensure, Result};
use arena_core::certificate::{intersection_graph, validate_class, Certificate, ClassSpec};
use arena_core::coord::Coord;
use arena_core::graph::{contains_induced_claw, Graph};
use arena_core::interval::Interval;
use arena_core::oracle::{brute_chromatic, is_unit_interval_graph};

fn iv(l: Coord, r: Coord) -> Interval {
    Interval::new(l, r).expect("fixture intervals are non-degenerate")
}

/// Claw: center 0, leaves 1..=3.
pub fn claw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])
}

/// Center `[1, 5/2]` of length 3/2; unit leaves touching its ends and one inside.
pub fn claw_certificate() -> Certificate {
    let c = |n, d| Coord::ratio(n, d);
    Certificate::new(vec![
        iv(c(1, 1), c(5, 2)),
        iv(c(0, 1), c(1, 1)),
        iv(c(5, 4), c(9, 4)),
        iv(c(5, 2), c(7, 2)),
    ])
}

/// Hub `z` (0) meeting three claws centered at x (1), y (2) and w (3),
/// whose leaves are 4..=6, 7..=9 and 10..=12.
pub fn triple_claw() -> Graph {
    let mut edges = Vec::new();
    for (center, first_leaf) in [(1, 4), (2, 7), (3, 10)] {
        edges.push((0, center));
        for leaf in first_leaf..first_leaf + 3 {
            edges.push((center, leaf));
            edges.push((0, leaf));
        }
    }
    Graph::from_edges(13, &edges)
}

/// An interval (not 2-count) representation: the hub spans everything.
pub fn triple_claw_certificate() -> Certificate {
    let i = |l, r| iv(Coord::from_int(l), Coord::from_int(r));
    let mut ivs = vec![i(0, 30), i(1, 5), i(11, 15), i(21, 25)];
    for base in [0, 10, 20] {
        ivs.extend([i(base, base + 1), i(base + 2, base + 3), i(base + 5, base + 6)]);
    }
    Certificate::new(ivs)
}

pub fn check() -> Result<u8> {
    let claw = claw();
    let cert = claw_certificate();
    let lengths = ClassSpec::with_lengths([Coord::one(), Coord::ratio(3, 2)]);
    ensure!(intersection_graph(&cert) == claw, "claw certificate does not realize the claw");
    ensure!(validate_class(&cert, &lengths).ok, "claw certificate uses lengths outside {{1, 3/2}}");
    ensure!(contains_induced_claw(&claw), "claw not detected");
    ensure!(!is_unit_interval_graph(&claw), "claw accepted as a unit-interval graph");
    ensure!(brute_chromatic(&claw)? == 2, "claw is not 2-chromatic");
    println!("left graph: 2-count interval graph (lengths {{1, 3/2}}, checked); not unit (induced claw)");

    let hub = triple_claw();
    let cert = triple_claw_certificate();
    ensure!(intersection_graph(&cert) == hub, "triple-claw certificate does not realize the graph");
    println!("right graph: interval graph (certificate checked); not 2-count (annotation, not checked)");
    Ok(0)
}
