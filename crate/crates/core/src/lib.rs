//! Sheaf decision on structured decompositions of finite graphs.
//!
//! A structured decomposition covers a graph by bags glued along monic
//! adhesion spans over a shape graph. A problem functor (H-coloring or
//! reflexive H-coloring) turns it into a co-decomposition of finite solution
//! sets, which is decided by local pullback filtering: exactly on forest
//! shapes, and on general shapes by enumerating sections over a feedback
//! vertex set of the shape.

pub mod decomp;
pub mod engine;
pub mod error;
pub mod finset;
pub mod fixtures;
pub mod graph;
pub mod problems;
pub mod sections;

pub use decomp::{
    carve, colim, find_fvs, restrict_along_mono, width, AdhesionSpan, Colimit,
    StructuredDecomposition,
};
pub use engine::{decide, oracle_decide, MatchingFamily, SolverConfig, Truth, Verdict};
pub use error::{Error, Result};
pub use finset::{FinFn, FinSet};
pub use graph::{Graph, GraphHom};
pub use problems::{apply_sd, ProblemFunctor, SolCoDecomp};
pub use sections::SolutionSet;
