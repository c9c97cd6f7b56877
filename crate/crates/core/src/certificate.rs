//! Interval representations ("certificates") and the class validators that
//! run against them.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coord::Coord;
use crate::graph::{Graph, VertexId};
use crate::interval::{hull_of, Interval};

/// Interval representation indexed by vertex id (ids `0..len`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    intervals: Vec<Interval>,
}

impl Certificate {
    pub fn new(intervals: Vec<Interval>) -> Self {
        Certificate { intervals }
    }

    pub fn push(&mut self, iv: Interval) -> VertexId {
        self.intervals.push(iv);
        self.intervals.len() - 1
    }

    pub fn set(&mut self, v: VertexId, iv: Interval) {
        self.intervals[v] = iv;
    }

    pub fn get(&self, v: VertexId) -> &Interval {
        &self.intervals[v]
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &Interval)> {
        self.intervals.iter().enumerate()
    }

    /// Ids of all intervals meeting `iv`, ascending.
    pub fn intersecting(&self, iv: &Interval) -> Vec<VertexId> {
        self.iter().filter(|(_, other)| other.intersects(iv)).map(|(v, _)| v).collect()
    }

    /// Convex hull of all intervals.
    pub fn span(&self) -> Option<Interval> {
        hull_of(&self.intervals)
    }

    pub fn distinct_lengths(&self) -> BTreeSet<Coord> {
        self.intervals.iter().map(Interval::length).collect()
    }

    /// Sub-certificate of the listed vertices, relabelled in order.
    pub fn restrict(&self, vertices: &[VertexId]) -> Certificate {
        Certificate::new(vertices.iter().map(|&v| self.intervals[v].clone()).collect())
    }
}

/// Maximum number of intervals sharing a common point. Left endpoints are
/// processed before right endpoints at equal coordinates so touching closed
/// intervals count as overlapping.
pub fn clique_number(c: &Certificate) -> usize {
    clique_number_of(c.intervals())
}

pub fn clique_number_of(ivs: &[Interval]) -> usize {
    let mut events: Vec<(&Coord, u8)> = Vec::with_capacity(ivs.len() * 2);
    for iv in ivs {
        events.push((iv.left(), 0));
        events.push((iv.right(), 1));
    }
    events.sort();
    let (mut open, mut best) = (0usize, 0usize);
    for (_, kind) in events {
        if kind == 0 {
            open += 1;
            best = best.max(open);
        } else {
            open -= 1;
        }
    }
    best
}

/// Intersection graph of the certificate, built by a sweep over left endpoints.
pub fn intersection_graph(c: &Certificate) -> Graph {
    let n = c.len();
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by(|&a, &b| c.get(a).left().cmp(c.get(b).left()));
    let mut g = Graph::with_vertices(n);
    for (i, &u) in order.iter().enumerate() {
        let right = c.get(u).right();
        for &v in &order[i + 1..] {
            if c.get(v).left() > right {
                break;
            }
            g.add_edge(u, v);
        }
    }
    g
}

/// Optimal offline coloring: greedy in left-endpoint order. Interval graphs
/// are perfect, so the color count equals the clique number (asserted).
pub fn offline_color(c: &Certificate) -> (Vec<u32>, usize) {
    let n = c.len();
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by(|&a, &b| c.get(a).left().cmp(c.get(b).left()));
    let mut colors = vec![0u32; n];
    let mut active: BinaryHeap<Reverse<(Coord, u32)>> = BinaryHeap::new();
    let mut free: BTreeSet<u32> = BTreeSet::new();
    let mut next_fresh = 1u32;
    for v in order {
        let iv = c.get(v);
        while let Some(Reverse((right, _))) = active.peek() {
            if right < iv.left() {
                let Reverse((_, col)) = active.pop().expect("peeked");
                free.insert(col);
            } else {
                break;
            }
        }
        let col = match free.pop_first() {
            Some(col) => col,
            None => {
                next_fresh += 1;
                next_fresh - 1
            }
        };
        colors[v] = col;
        active.push(Reverse((iv.right().clone(), col)));
    }
    let count = (next_fresh - 1) as usize;
    assert_eq!(count, clique_number(c), "greedy interval coloring must be optimal");
    (colors, count)
}

/// Graph classes a certificate can be validated against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassSpec {
    /// Every length equals 1.
    Unit,
    /// Every length in `[1, sigma)`.
    Sigma { sigma: Coord },
    /// At most two distinct lengths.
    TwoCount,
    /// Every length drawn from the given set (at most two members).
    TwoCountWithLengths { lengths: Vec<Coord> },
    /// Unrestricted interval graph.
    Interval,
}

impl ClassSpec {
    pub fn sigma(sigma: Coord) -> Self {
        assert!(sigma >= Coord::one(), "sigma must be at least 1");
        ClassSpec::Sigma { sigma }
    }

    pub fn with_lengths(lengths: impl IntoIterator<Item = Coord>) -> Self {
        let set: BTreeSet<Coord> = lengths.into_iter().collect();
        assert!(set.len() <= 2, "a 2-count length set has at most two members");
        assert!(set.iter().all(|l| *l >= Coord::one()), "announced lengths are at least 1");
        ClassSpec::TwoCountWithLengths {
            lengths: set.into_iter().collect(),
        }
    }

    /// Check one interval length against the per-interval part of the class.
    /// `TwoCount` has no per-interval constraint.
    pub fn admits_length(&self, len: &Coord) -> bool {
        match self {
            ClassSpec::Unit => *len == Coord::one(),
            ClassSpec::Sigma { sigma } => *len >= Coord::one() && len < sigma,
            ClassSpec::TwoCountWithLengths { lengths } => lengths.contains(len),
            ClassSpec::TwoCount | ClassSpec::Interval => true,
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::Unit => write!(f, "unit"),
            ClassSpec::Sigma { sigma } => write!(f, "sigma({sigma})"),
            ClassSpec::TwoCount => write!(f, "two_count"),
            ClassSpec::TwoCountWithLengths { lengths } => {
                let ls: Vec<String> = lengths.iter().map(Coord::to_string).collect();
                write!(f, "two_count{{{}}}", ls.join(","))
            }
            ClassSpec::Interval => write!(f, "interval"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub ok: bool,
    pub violations: Vec<String>,
}

pub fn validate_class(c: &Certificate, spec: &ClassSpec) -> ClassReport {
    let mut violations = Vec::new();
    for (v, iv) in c.iter() {
        let len = iv.length();
        if !spec.admits_length(&len) {
            violations.push(format!("vertex {v} {iv} has length {len}, not admitted by {spec}"));
        }
    }
    if matches!(spec, ClassSpec::TwoCount) {
        let lengths = c.distinct_lengths();
        if lengths.len() > 2 {
            let ls: Vec<String> = lengths.iter().map(Coord::to_string).collect();
            violations.push(format!("{} distinct lengths ({}), at most 2 allowed", lengths.len(), ls.join(", ")));
        }
    }
    ClassReport {
        ok: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cert(pairs: &[(&str, &str)]) -> Certificate {
        Certificate::new(
            pairs
                .iter()
                .map(|(l, r)| Interval::new(l.parse().unwrap(), r.parse().unwrap()).unwrap())
                .collect(),
        )
    }

    /// Oracle: count intervals containing each endpoint; maximum over endpoints.
    fn stab_max(c: &Certificate) -> usize {
        c.intervals()
            .iter()
            .flat_map(|iv| [iv.left().clone(), iv.right().clone()])
            .map(|x| c.intervals().iter().filter(|iv| iv.contains_point(&x)).count())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn clique_number_examples() {
        assert_eq!(clique_number(&Certificate::default()), 0);
        assert_eq!(clique_number(&cert(&[("0", "1"), ("1", "2"), ("1", "3")])), 3);
        let c = cert(&[("1/2", "3/2"), ("1", "2"), ("5/2", "7/2"), ("3", "4"), ("7/4", "11/4")]);
        assert_eq!(stab_max(&c), 2);
        assert_eq!(clique_number(&c), 2);
    }

    #[test]
    fn intersection_graph_examples() {
        let g = intersection_graph(&cert(&[("0", "1")]));
        assert_eq!((g.len(), g.edge_count()), (1, 0));
        let g = intersection_graph(&cert(&[("0", "1"), ("1", "2"), ("3", "4")]));
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn offline_color_examples() {
        assert_eq!(offline_color(&Certificate::default()), (vec![], 0));
        let (cols, count) = offline_color(&cert(&[("0", "1"), ("1", "2"), ("1", "3")]));
        assert_eq!(count, 3);
        let distinct: BTreeSet<u32> = cols.into_iter().collect();
        assert_eq!(distinct.len(), 3);
    }

    #[test]
    fn class_validation_examples() {
        assert!(validate_class(&cert(&[("0", "1"), ("2", "3")]), &ClassSpec::Unit).ok);
        let lengths = ClassSpec::with_lengths([Coord::one(), Coord::from_int(4)]);
        assert!(validate_class(&cert(&[("0", "1"), ("0", "4")]), &lengths).ok);
        let r = validate_class(&cert(&[("0", "1"), ("0", "2"), ("0", "4")]), &ClassSpec::TwoCount);
        assert!(!r.ok);
        assert_eq!(r.violations.len(), 1);
        let r = validate_class(&cert(&[("0", "3")]), &ClassSpec::sigma(Coord::from_int(3)));
        assert!(!r.ok, "sigma is a half-open bound");
    }
}
