//! Exact combinatorial models of directed suspensions and their loop spaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`cubical`] finitely presented cubical sets, tensor products, collapses,
//!   the cubical model of the directed suspension and canonical points of the
//!   geometric realization.
//! * [`homology`] normalized cubical chains over `Q` or `F_p`.
//! * [`loop_algebra`] graded dimensions of tensor algebras, i.e. the homology
//!   of the directed loop space of a suspension.
//! * [`path`] piecewise-linear directed Moore paths in the suspension.
//! * [`james`] the James monoid and the `sec` map from increasing loops to words.
//! * [`straighten`] the deformation of loops onto concatenations of `beta` loops.
//! * [`io`] JSON wire formats.
//!
//! All arithmetic is exact ([`Rational`] is an arbitrary precision fraction).

pub mod cubical;
pub mod error;
pub mod homology;
pub mod io;
pub mod james;
pub mod loop_algebra;
pub mod path;
pub mod rational;
pub mod straighten;

pub use error::{Error, Result};
pub use rational::Rational;
