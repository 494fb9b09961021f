use thiserror::Error;

/// Which leg of an adhesion span a diagnostic refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Leg {
    X,
    Y,
}

impl std::fmt::Display for Leg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Leg::X => f.write_str("leg_x"),
            Leg::Y => f.write_str("leg_y"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("function table entry {index} = {value} out of range for codomain of size {cod}")]
    TableOutOfRange {
        index: usize,
        value: usize,
        cod: usize,
    },

    #[error("domain/codomain mismatch: {0}")]
    Mismatch(String),

    #[error("graph arc {arc} has endpoint {vertex} but the graph has {nv} vertices")]
    ArcOutOfRange {
        arc: usize,
        vertex: usize,
        nv: usize,
    },

    #[error("source and target tables differ in length ({src} vs {tgt})")]
    ArcTableLength { src: usize, tgt: usize },

    #[error("naturality violated at arc {arc}")]
    Naturality { arc: usize },

    #[error("target graph is not simple: arcs {first} and {second} both run {src}->{tgt}")]
    NonSimpleTarget {
        first: usize,
        second: usize,
        src: usize,
        tgt: usize,
    },

    #[error("homomorphism is not monic")]
    NotMonic,

    #[error("shape violates the decomposition shape precondition: {0}")]
    Shape(String),

    #[error("adhesion {arc}: non-monic leg ({leg})")]
    NonMonicLeg { arc: usize, leg: Leg },

    #[error(
        "adhesion {arc}: {leg} is not a homomorphism (naturality fails at apex arc {apex_arc})"
    )]
    LegNaturality {
        arc: usize,
        leg: Leg,
        apex_arc: usize,
    },

    #[error("{what} index {index} out of range (size {len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },

    #[error("restriction of section {section} is not a section of the subobject")]
    NonSection { section: usize },

    #[error("shape is not a forest")]
    NotForest,

    #[error("vertex set {0:?} is not a feedback vertex set of the shape")]
    NotFvs(Vec<usize>),

    #[error("edge order is not a permutation of the shape arcs: {0}")]
    InvalidEdgeOrder(String),

    #[error("search cap exceeded: product bound {bound} over cap {cap}")]
    CapExceeded { bound: u128, cap: u64 },

    #[error("sections are not strictly increasing at position {0}")]
    UnsortedSections(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
