//! The decision pipeline over solution co-decompositions.
//!
//! * [`filter_edge`] / [`filter_all`]: local pullback filtering along arcs.
//! * [`tree_solve`]: two-pass filtering on forest shapes, which leaves exactly
//!   the sections that extend to a matching family.
//! * [`fvs_decide`] / [`decide`]: fixes one section per feedback vertex,
//!   cuts the shape down to a forest and tree-solves, once per choice.
//! * [`limit_sections`], [`compute_a`], [`oracle_decide`]: brute-force
//!   references the fast paths are checked against.

mod decide;
mod filter;
mod oracle;
mod tree;

pub use decide::{decide, fvs_decide, fvs_decide_codecomp};
pub use filter::{filter_all, filter_edge, EdgeOrder};
pub use oracle::{
    compute_a, global_sections, glue_witness, limit_sections, naive_decide, oracle_decide,
    sheaf_check, SheafCheck,
};
pub use tree::tree_solve;

/// Default cap on backtracking nodes for the brute-force oracles.
pub const DEFAULT_ORACLE_CAP: u64 = 10_000_000;

/// Default cap on the number of feedback-vertex section choices.
pub const DEFAULT_SIGMA_CAP: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub oracle_cap: u64,
    pub sigma_cap: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            oracle_cap: DEFAULT_ORACLE_CAP,
            sigma_cap: DEFAULT_SIGMA_CAP,
        }
    }
}

/// The two-valued decision collapse: ⊤ iff the solution set is non-empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Truth {
    Bottom,
    Top,
}

impl Truth {
    pub fn of(nonempty: bool) -> Self {
        if nonempty {
            Truth::Top
        } else {
            Truth::Bottom
        }
    }

    pub fn is_top(self) -> bool {
        self == Truth::Top
    }
}

impl std::fmt::Display for Truth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Truth::Top => "top",
            Truth::Bottom => "bottom",
        })
    }
}

/// One section index per shape vertex, agreeing on every adhesion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchingFamily(pub Vec<usize>);

impl MatchingFamily {
    pub fn choice(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn is_matching(&self, c: &crate::problems::SolCoDecomp) -> bool {
        self.0.len() == c.shape().nv()
            && c.shape().arcs().enumerate().all(|(e, (x, y))| {
                let adh = c.adhesion(e);
                adh.rho_x.apply(self.0[x]) == adh.rho_y.apply(self.0[y])
            })
    }
}

/// Work counters, reported alongside verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveStats {
    pub edge_filters: usize,
    pub sigma_runs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub answer: Truth,
    pub witness: Option<MatchingFamily>,
    /// Live subset sizes at the end of the run that settled the answer.
    pub per_bag_live_counts: Vec<usize>,
    pub stats: SolveStats,
}
