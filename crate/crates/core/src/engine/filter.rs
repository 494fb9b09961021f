use crate::decomp::is_forest;
use crate::error::{Error, Result};
use crate::finset::{image, pullback};
use crate::problems::{CoDecompData, SolCoDecomp};

use super::tree::rooting;

/// Filters the cospan on arc `e`: both live subsets shrink to the images of
/// the projections out of the pullback of the live-restricted cospan.
/// Returns whether anything shrank.
pub(crate) fn filter_arc(data: &CoDecompData, live: &mut [Vec<usize>], e: usize) -> bool {
    let (x, y) = data.shape.arc(e);
    let adh = &data.adhesions[e];
    let fx = adh.rho_x.restrict_to(&live[x]);
    let fy = adh.rho_y.restrict_to(&live[y]);
    let pb = pullback(&fx, &fy).expect("both legs land in the adhesion set");

    let keep_x: Vec<usize> = image(&pb.left)
        .incl
        .table()
        .iter()
        .map(|&i| live[x][i])
        .collect();
    let mut keep_y: Vec<usize> = image(&pb.right)
        .incl
        .table()
        .iter()
        .map(|&i| live[y][i])
        .collect();
    // pullback order makes the x side already increasing
    debug_assert!(keep_x.windows(2).all(|w| w[0] < w[1]));
    keep_y.sort_unstable();

    let changed = keep_x.len() != live[x].len() || keep_y.len() != live[y].len();
    live[x] = keep_x;
    live[y] = keep_y;
    changed
}

fn check_arc(c: &SolCoDecomp, e: usize) -> Result<()> {
    if e >= c.shape().ne() {
        return Err(Error::IndexOutOfRange {
            what: "shape arc",
            index: e,
            len: c.shape().ne(),
        });
    }
    Ok(())
}

impl SolCoDecomp {
    /// In-place single-arc filtering; see [`filter_edge`].
    pub fn filter_edge_mut(&mut self, e: usize) -> Result<bool> {
        check_arc(self, e)?;
        Ok(filter_arc(&self.data, &mut self.live, e))
    }
}

/// Single-arc pullback filtering, returning the filtered co-decomposition.
pub fn filter_edge(c: &SolCoDecomp, e: usize) -> Result<SolCoDecomp> {
    let mut out = c.clone();
    out.filter_edge_mut(e)?;
    Ok(out)
}

/// Scheduling policy for repeated arc filtering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeOrder {
    /// One pass over the listed arcs, in order. The list must be a
    /// permutation of the shape arcs.
    AsGiven(Vec<usize>),
    /// One pass over a forest shape in which every arc comes after all the
    /// arcs below it (components rooted at their smallest vertex).
    LeafToRoot,
    /// Passes in arc-index order until nothing shrinks.
    Fixpoint,
}

pub fn filter_all(c: &SolCoDecomp, order: &EdgeOrder) -> Result<SolCoDecomp> {
    let mut out = c.clone();
    let m = c.shape().ne();
    match order {
        EdgeOrder::AsGiven(arcs) => {
            let mut seen = vec![false; m];
            for &e in arcs {
                if e >= m || std::mem::replace(&mut seen[e], true) {
                    return Err(Error::InvalidEdgeOrder(format!("{arcs:?} for {m} arcs")));
                }
            }
            if arcs.len() != m {
                return Err(Error::InvalidEdgeOrder(format!("{arcs:?} for {m} arcs")));
            }
            for &e in arcs {
                filter_arc(&c.data, &mut out.live, e);
            }
        }
        EdgeOrder::LeafToRoot => {
            if !is_forest(c.shape()) {
                return Err(Error::NotForest);
            }
            let active = vec![true; m];
            let r = rooting(c.shape(), &active)?;
            for e in r.leaf_to_root() {
                filter_arc(&c.data, &mut out.live, e);
            }
        }
        EdgeOrder::Fixpoint => loop {
            let mut changed = false;
            for e in 0..m {
                changed |= filter_arc(&c.data, &mut out.live, e);
            }
            if !changed {
                break;
            }
        },
    }
    Ok(out)
}
