//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `build_named` got a constructor name it does not know.
    UnknownConstructor(String),
    /// A constructor or operation was called with out-of-range parameters.
    InvalidParameter(String),
    /// The weight matrix handed to `Graph::from_weight_matrix` is not
    /// exactly symmetric.
    AsymmetricWeights,
    /// A vertex index is outside `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// The cells handed to `VertexPartition::new` do not partition `V`.
    InvalidPartition,
    /// `quotient` was asked for on a partition that is not equitable.
    NotEquitable,
    /// `bipartite_complement` needs a bipartite graph.
    NotBipartite,
    /// Join operations require both parts to be regular.
    NotRegular,
    /// Exact algebra requires integer weights.
    NonIntegerWeights,
    /// Exact operations are capped (walk matrices at n = 24, automorphism
    /// search at n = 16, ...).
    TooLarge { n: usize, limit: usize },
    /// The walk matrix of the given vertex is singular.
    NotControllable(usize),
    /// Walk matrices need a non-empty seed set; supports need a non-zero
    /// vector.
    EmptyInput,
    /// The Jacobi eigensolver did not reach the off-diagonal tolerance.
    EigenSolverFailed,
    /// An exhaustive search hit its enumeration budget.
    SearchBudgetExceeded,
    /// `direct_odd_pst` requires every eigenvalue of the left factor to be
    /// an odd integer.
    EigenvalueParity,
    /// A closed-form construction failed its numeric re-verification.
    CertificateInvalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownConstructor(kind) => write!(f, "unknown graph constructor `{kind}`"),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::AsymmetricWeights => write!(f, "weight matrix is not symmetric"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            Error::InvalidPartition => write!(f, "cells do not partition the vertex set"),
            Error::NotEquitable => write!(f, "partition is not equitable"),
            Error::NotBipartite => write!(f, "graph is not bipartite"),
            Error::NotRegular => write!(f, "graph is not regular"),
            Error::NonIntegerWeights => write!(f, "operation requires integer edge weights"),
            Error::TooLarge { n, limit } => {
                write!(f, "graph on {n} vertices exceeds the limit of {limit} for this operation")
            }
            Error::NotControllable(u) => write!(f, "walk matrix of vertex {u} is singular"),
            Error::EmptyInput => write!(f, "operation requires non-empty input"),
            Error::EigenSolverFailed => write!(f, "symmetric eigensolver failed to converge"),
            Error::SearchBudgetExceeded => write!(f, "exhaustive search exceeded its budget"),
            Error::EigenvalueParity => {
                write!(f, "eigenvalues must all be odd integers for this construction")
            }
            Error::CertificateInvalid(what) => {
                write!(f, "certificate failed re-verification: {what}")
            }
        }
    }
}

#[cfg(any(test, feature = "std"))]
impl std::error::Error for Error {}
