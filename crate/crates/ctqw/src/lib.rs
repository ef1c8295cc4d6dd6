//! Continuous-time quantum walk analysis on finite graphs.
//!
//! A walk on a graph `X` with symmetric weight matrix `A` is the matrix
//! family `H(t) = exp(itA)`. This crate decides, at desk scale, the
//! questions that family raises: is a vertex periodic, does perfect state
//! transfer occur and between whom, what do Cayley/product/join
//! constructions do in closed form, and how does the walk mix.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `qws` crate.
//!
//! Organization:
//!
//! - [`graph`]: graph representation, named constructors, products, joins.
//! - [`partition`]: equitable partitions, distance partitions, quotients.
//! - [`autom`]: exhaustive automorphism search for small graphs.
//! - [`linalg`]: dense real/complex matrices, symmetric eigensolver,
//!   scaling-and-squaring matrix exponential (the cross-check oracle).
//! - [`exact`]: big-integer/rational algebra — characteristic polynomials,
//!   walk matrices, controllability, cospectrality.
//! - [`rational`]: continued-fraction reconstruction of rationals and
//!   quadratic integers from floating-point data.
//! - [`spectral`]: spectral decompositions, idempotents, transition
//!   matrices, eigenvalue supports and their arithmetic classification.
//! - [`transfer`]: periodicity and perfect/pretty-good state transfer
//!   decision procedures with certificates and refutation chains.
//! - [`cayley`]: cubelike graphs and circulants in closed form.
//! - [`compose`]: transfer transport across products, joins, complements.
//! - [`mixing`]: flat transition matrices and average mixing.

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod autom;
pub mod cayley;
pub mod compose;
pub mod config;
pub mod error;
pub mod exact;
pub mod graph;
pub mod linalg;
pub mod mixing;
pub mod partition;
pub mod rational;
pub mod spectral;
pub mod transfer;

pub use config::Tolerances;
pub use error::{Error, Result};
pub use graph::{Graph, Hamiltonian};
pub use spectral::SpectralDecomposition;
