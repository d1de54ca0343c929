//! Globally optimal impulsive multi-flyby trajectory design.
//!
//! Given a fixed sequence of flyby bodies, this crate searches the space of
//! flyby epochs on a discretized time grid with dynamic programming, costs
//! every leg with a Lambert solver, refines the incumbent on progressively
//! finer grids, and certifies how far the gridded optimum can sit from the
//! continuous one.
//!
//! The main entry points are [`dp::solve_bi_impulse`] for the two-impulse
//! engine, [`refine::refine`] for adaptive step refinement, and
//! [`error_analysis`] for discretization-error statistics and bound
//! certificates. Everything is deterministic: identical inputs produce
//! bitwise-identical solutions regardless of worker count.

pub mod astro;
pub mod catalog;
pub mod dp;
pub mod error;
pub mod error_analysis;
pub mod lambert;
pub mod legs;
pub mod math;
pub mod refine;
pub mod solution;
pub mod synthetic;

pub use error::{Error, Result};
