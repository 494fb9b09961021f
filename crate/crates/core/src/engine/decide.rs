use crate::decomp::{find_fvs, is_fvs, StructuredDecomposition};
use crate::error::{Error, Result};
use crate::problems::{apply_sd, ProblemFunctor, SolCoDecomp};

use super::filter::filter_arc;
use super::tree::solve_forest;
use super::{SolveStats, SolverConfig, Truth, Verdict};

/// Decides a co-decomposition given a feedback vertex set of its shape.
///
/// For every choice `σ` of one live section per vertex of `fvs`
/// (lexicographic, first vertex most significant): shrink those bags to
/// `{σ_s}`, filter every arc incident to `fvs`, drop those arcs, and solve
/// the remaining forest. The first `σ` that survives settles ⊤.
pub fn fvs_decide_codecomp(
    c: &SolCoDecomp,
    fvs: &[usize],
    config: &SolverConfig,
) -> Result<Verdict> {
    let shape = c.shape();
    let mut fvs = fvs.to_vec();
    fvs.sort_unstable();
    fvs.dedup();
    if !is_fvs(shape, &fvs) {
        return Err(Error::NotFvs(fvs));
    }
    let bound = fvs
        .iter()
        .fold(1u128, |acc, &s| acc.saturating_mul(c.live(s).len() as u128));
    if bound > config.sigma_cap as u128 {
        return Err(Error::CapExceeded {
            bound,
            cap: config.sigma_cap,
        });
    }

    let mut in_fvs = vec![false; shape.nv()];
    for &s in &fvs {
        in_fvs[s] = true;
    }
    let incident: Vec<usize> = shape
        .arcs()
        .enumerate()
        .filter(|&(_, (x, y))| in_fvs[x] || in_fvs[y])
        .map(|(e, _)| e)
        .collect();
    let mut active = vec![true; shape.ne()];
    for &e in &incident {
        active[e] = false;
    }

    let mut stats = SolveStats::default();
    let zeros = vec![0; shape.nv()];
    if bound == 0 {
        return Ok(Verdict {
            answer: Truth::Bottom,
            witness: None,
            per_bag_live_counts: zeros,
            stats,
        });
    }

    // odometer over positions in each feedback vertex's live list
    let mut odometer = vec![0usize; fvs.len()];
    loop {
        let mut live = c.live.clone();
        for (&s, &pos) in fvs.iter().zip(&odometer) {
            live[s] = vec![c.live(s)[pos]];
        }
        for &e in &incident {
            filter_arc(&c.data, &mut live, e);
            stats.edge_filters += 1;
        }
        stats.sigma_runs += 1;
        if let Some(witness) = solve_forest(&c.data, &mut live, &active, &mut stats)? {
            debug_assert!(witness.is_matching(c));
            let per_bag_live_counts = live.iter().map(Vec::len).collect();
            return Ok(Verdict {
                answer: Truth::Top,
                witness: Some(witness),
                per_bag_live_counts,
                stats,
            });
        }

        let mut i = fvs.len();
        loop {
            if i == 0 {
                return Ok(Verdict {
                    answer: Truth::Bottom,
                    witness: None,
                    per_bag_live_counts: zeros,
                    stats,
                });
            }
            i -= 1;
            odometer[i] += 1;
            if odometer[i] < c.live(fvs[i]).len() {
                break;
            }
            odometer[i] = 0;
        }
    }
}

/// Evaluates `problem` on the decomposition and decides it with the given
/// feedback vertex set.
pub fn fvs_decide(
    problem: &ProblemFunctor,
    d: &StructuredDecomposition,
    fvs: &[usize],
    config: &SolverConfig,
) -> Result<Verdict> {
    let c = apply_sd(problem, d)?;
    fvs_decide_codecomp(&c, fvs, config)
}

/// Decides `problem` on the object `d` decomposes. Without an explicit
/// feedback vertex set, a minimum one is computed from the shape.
pub fn decide(
    problem: &ProblemFunctor,
    d: &StructuredDecomposition,
    fvs: Option<&[usize]>,
    config: &SolverConfig,
) -> Result<Verdict> {
    d.validate()?;
    let computed;
    let fvs = match fvs {
        Some(s) => s,
        None => {
            computed = find_fvs(d.shape());
            &computed
        }
    };
    fvs_decide(problem, d, fvs, config)
}
