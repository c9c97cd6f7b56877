//! Online coloring of interval graphs against adaptive adversaries, on
//! exact rational coordinates.
//!
//! An [`arena::Arena`] referees one game: a [`strategies::Strategy`]
//! presents intervals, an [`algorithms::OnlineAlgorithm`] colors them, and
//! the arena keeps the presented graph, the interval certificate and the
//! coloring in step. [`harness`] runs and validates whole games, audits
//! claims and sweeps parameters; [`oracle`] holds exhaustive game-value
//! solvers for tiny instances.

pub mod algorithms;
pub mod arena;
pub mod certificate;
pub mod coord;
pub mod error;
pub mod graph;
pub mod interval;
pub mod strategies;
pub mod harness;
pub mod oracle;
pub mod report;
