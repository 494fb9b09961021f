//! Brute-force references: matching families by backtracking, the A-functor
//! as projections of the limit, and glue-then-solve.

use std::ops::ControlFlow;

use crate::decomp::{colim, Colimit, StructuredDecomposition};
use crate::error::{Error, Result};
use crate::problems::{apply_sd, ProblemFunctor, SolCoDecomp};
use crate::sections::SolutionSet;

use super::{MatchingFamily, SolveStats, Truth, Verdict};

fn product_bound(c: &SolCoDecomp) -> u128 {
    c.live_sets()
        .iter()
        .fold(1u128, |acc, l| acc.saturating_mul(l.len() as u128))
}

/// Every matching family over the live subsets, lexicographically ordered by
/// shape-vertex index. Aborts once more than `cap` partial assignments have
/// been tried.
pub fn limit_sections(c: &SolCoDecomp, cap: u64) -> Result<Vec<MatchingFamily>> {
    let mut out = Vec::new();
    for_each_family(c, cap, |f| out.push(MatchingFamily(f.to_vec())))?;
    Ok(out)
}

/// Number of matching families, without storing them. Same cap as
/// [`limit_sections`].
pub fn count_families(c: &SolCoDecomp, cap: u64) -> Result<usize> {
    let mut n = 0;
    for_each_family(c, cap, |_| n += 1)?;
    Ok(n)
}

fn for_each_family(c: &SolCoDecomp, cap: u64, mut visit: impl FnMut(&[usize])) -> Result<()> {
    let n = c.shape().nv();
    if n == 0 {
        visit(&[]);
        return Ok(());
    }
    // arcs linking each vertex to earlier ones: (arc, other end, v is the tail)
    let mut back = vec![Vec::new(); n];
    for (e, (x, y)) in c.shape().arcs().enumerate() {
        if x > y {
            back[x].push((e, y, true));
        } else {
            back[y].push((e, x, false));
        }
    }
    let mut choice = vec![0usize; n];
    let mut nodes = 0u64;
    // explicit-stack backtracking: stack[v] is the next live position to try at v
    let mut stack = vec![0usize; n];
    let mut v = 0;
    loop {
        if stack[v] == c.live(v).len() {
            if v == 0 {
                return Ok(());
            }
            stack[v] = 0;
            v -= 1;
            continue;
        }
        let s = c.live(v)[stack[v]];
        stack[v] += 1;
        nodes += 1;
        if nodes > cap {
            return Err(Error::CapExceeded {
                bound: product_bound(c),
                cap,
            });
        }
        let ok = back[v].iter().all(|&(e, u, v_is_tail)| {
            let adh = c.adhesion(e);
            if v_is_tail {
                adh.rho_x.apply(s) == adh.rho_y.apply(choice[u])
            } else {
                adh.rho_y.apply(s) == adh.rho_x.apply(choice[u])
            }
        });
        if !ok {
            continue;
        }
        choice[v] = s;
        if v + 1 == n {
            visit(&choice);
        } else {
            v += 1;
        }
    }
}

/// Reference A-functor: the live subset at each vertex becomes the set of
/// coordinates taken there by matching families.
pub fn compute_a(c: &SolCoDecomp, cap: u64) -> Result<SolCoDecomp> {
    let families = limit_sections(c, cap)?;
    let mut out = c.clone();
    for (v, live) in out.live.iter_mut().enumerate() {
        let mut img: Vec<usize> = families.iter().map(|f| f.choice(v)).collect();
        img.sort_unstable();
        img.dedup();
        *live = img;
    }
    Ok(out)
}

/// Conjunction of the per-bag and per-adhesion decisions, ignoring how the
/// pieces fit together.
pub fn naive_decide(c: &SolCoDecomp) -> Truth {
    let bags = (0..c.shape().nv()).all(|v| !c.bag_sections(v).is_empty());
    let adhesions = (0..c.shape().ne()).all(|e| !c.adhesion(e).sections.is_empty());
    Truth::of(bags && adhesions)
}

/// Sections of `problem` on the glued graph. Aborts once more than `cap`
/// sections have been found.
pub fn global_sections(
    problem: &ProblemFunctor,
    d: &StructuredDecomposition,
    cap: u64,
) -> Result<(Colimit, SolutionSet)> {
    let c = colim(d);
    let mut sections = SolutionSet::empty(c.total.nv());
    let mut found = 0u64;
    let broke = problem.for_each_section(&c.total, |s| {
        found += 1;
        if found > cap {
            return ControlFlow::Break(());
        }
        sections.push_unchecked(s);
        ControlFlow::Continue(())
    })?;
    if broke {
        return Err(Error::CapExceeded {
            bound: global_bound(problem, &c),
            cap,
        });
    }
    Ok((c, sections))
}

fn global_bound(problem: &ProblemFunctor, c: &Colimit) -> u128 {
    (problem.target().nv() as u128).saturating_pow(c.total.nv() as u32)
}

/// Glue the decomposition, then solve on the whole graph. Stops at the first
/// global section.
pub fn oracle_decide(problem: &ProblemFunctor, d: &StructuredDecomposition) -> Result<Verdict> {
    d.validate()?;
    let glued = colim(d);
    Ok(Verdict {
        answer: Truth::of(problem.has_section(&glued.total)?),
        witness: None,
        per_bag_live_counts: Vec::new(),
        stats: SolveStats::default(),
    })
}

/// Vertex map on the glued graph assembled from the bag sections a family
/// picks.
pub fn glue_witness(colimit: &Colimit, c: &SolCoDecomp, family: &MatchingFamily) -> Vec<usize> {
    let mut glued = vec![usize::MAX; colimit.total.nv()];
    for (v, leg) in colimit.cocone.iter().enumerate() {
        let section = c.bag_sections(v).get(family.choice(v));
        for (i, &g) in leg.vmap.table().iter().enumerate() {
            glued[g] = section[i];
        }
    }
    glued
}

/// Outcome of comparing matching families with global sections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SheafCheck {
    pub matching_families: usize,
    pub global_sections: usize,
    /// Every global section restricts, bag by bag, to a matching family.
    pub restrictions_match: bool,
    /// Distinct global sections restrict to distinct families.
    pub restriction_injective: bool,
}

impl SheafCheck {
    pub fn holds(&self) -> bool {
        self.matching_families == self.global_sections
            && self.restrictions_match
            && self.restriction_injective
    }
}

/// Counts matching families of `apply_sd(problem, d)` against sections on the
/// colimit, and checks that restriction along the cocone is a bijection
/// between the two.
///
/// Neither side is stored. Sections are vertex maps, so restriction is
/// injective exactly when the cocone legs jointly cover the glued vertices;
/// with injectivity and every restriction matching, equal counts give a
/// bijection. Aborts when either side exceeds `cap`.
pub fn sheaf_check(
    problem: &ProblemFunctor,
    d: &StructuredDecomposition,
    cap: u64,
) -> Result<SheafCheck> {
    let c = apply_sd(problem, d)?;
    let matching_families = count_families(&c, cap)?;
    let colimit = colim(d);

    let mut covered = vec![false; colimit.total.nv()];
    for leg in &colimit.cocone {
        for &g in leg.vmap.table() {
            covered[g] = true;
        }
    }
    let restriction_injective = covered.iter().all(|&b| b);

    let mut found = 0u64;
    let mut restrictions_match = true;
    let mut choice = vec![0usize; colimit.cocone.len()];
    let mut local = Vec::new();
    let broke = problem.for_each_section(&colimit.total, |g| {
        found += 1;
        if found > cap {
            return ControlFlow::Break(());
        }
        if !restrictions_match {
            return ControlFlow::Continue(());
        }
        for (v, leg) in colimit.cocone.iter().enumerate() {
            local.clear();
            local.extend(leg.vmap.table().iter().map(|&i| g[i]));
            match c.bag_sections(v).index_of(&local) {
                Some(s) => choice[v] = s,
                None => {
                    restrictions_match = false;
                    return ControlFlow::Continue(());
                }
            }
        }
        if !MatchingFamily(choice.clone()).is_matching(&c) {
            restrictions_match = false;
        }
        ControlFlow::Continue(())
    })?;
    if broke {
        return Err(Error::CapExceeded {
            bound: global_bound(problem, &colimit),
            cap,
        });
    }
    Ok(SheafCheck {
        matching_families,
        global_sections: found as usize,
        restrictions_match,
        restriction_injective,
    })
}
