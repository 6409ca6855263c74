//! Laplacian spectral invariants of simple graphs and a catalog of
//! degree-sequence bounds on them.
//!
//! The crate is `no_std` (it needs `alloc`) and does no IO. It covers:
//!
//! * [`graph`]: simple undirected graphs, degree and conjugate sequences,
//!   complements, structural recognizers for the equality families.
//! * [`family`]: deterministic generators for named families and seeded
//!   random graphs.
//! * [`spectra`]: Laplacian assembly, a cyclic Jacobi eigensolver and the
//!   spectral invariants (power sums, moments, Kirchhoff index, Laplacian
//!   Estrada index, spanning-tree counts).
//! * [`majorization`]: the majorization predicate and the shifted degree
//!   sequences compared against the spectrum.
//! * [`bounds`]: every bound evaluated to a verdict, with equality-case
//!   prediction.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
mod eigen;
mod error;
pub mod family;
pub mod graph;
pub mod majorization;
pub mod rng;
pub mod spectra;

pub use bounds::{
    evaluate_bound, evaluate_catalog, kf_compare, BoundId, BoundResult, EvalConfig, KfComparison,
    Param, Profile, Verdict,
};
pub use error::Error;
pub use family::{generate, FamilySpec};
pub use graph::{ConjugateSequence, DegreeSequence, Graph, GraphClass};
pub use spectra::{LaplacianMatrix, Spectrum};

pub type Result<T, E = Error> = core::result::Result<T, E>;
