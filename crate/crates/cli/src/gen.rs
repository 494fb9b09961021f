//! Seeded instance generators.
//!
//! Each generator fixes the glued graph first and carves bags out of it as
//! induced subgraphs, with adhesions induced on the pairwise overlaps. Legs
//! are inclusions, so they are monic by construction.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sheafdp_core::decomp::carve;
use sheafdp_core::fixtures::cyclic_decomposition;
use sheafdp_core::{find_fvs, Graph, ProblemFunctor, Result, StructuredDecomposition};

use crate::io::{Instance, ProblemKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Random tree shape with the running-intersection property.
    Tree,
    /// Consecutive paths around a cycle, each sharing one endpoint with the next.
    Cyclic,
    /// Random tree shape plus chords.
    Random,
}

/// Target graph of a generated problem, written `k3`, `c5`, `p4`, `e2` or
/// `r4` (complete, cycle, path, edgeless, random simple).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetSpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Edgeless(usize),
    Random(usize),
}

impl FromStr for TargetSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bad = || format!("bad target {s:?}: expected k<n>, c<n>, p<n>, e<n> or r<n>");
        let (head, n) = s.split_at(s.len().min(1));
        let n: usize = n.parse().map_err(|_| bad())?;
        match head {
            "k" | "K" => Ok(TargetSpec::Complete(n)),
            "c" | "C" if n >= 3 => Ok(TargetSpec::Cycle(n)),
            "p" | "P" => Ok(TargetSpec::Path(n)),
            "e" | "E" => Ok(TargetSpec::Edgeless(n)),
            "r" | "R" => Ok(TargetSpec::Random(n)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for TargetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetSpec::Complete(n) => write!(f, "k{n}"),
            TargetSpec::Cycle(n) => write!(f, "c{n}"),
            TargetSpec::Path(n) => write!(f, "p{n}"),
            TargetSpec::Edgeless(n) => write!(f, "e{n}"),
            TargetSpec::Random(n) => write!(f, "r{n}"),
        }
    }
}

impl TargetSpec {
    pub fn build<R: Rng>(self, rng: &mut R) -> Graph {
        match self {
            TargetSpec::Complete(n) => Graph::complete(n),
            TargetSpec::Cycle(n) => Graph::cycle(n),
            TargetSpec::Path(n) => Graph::path(n),
            TargetSpec::Edgeless(n) => Graph::edgeless(n),
            TargetSpec::Random(n) => random_symmetric(rng, n, 0.5),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub kind: Kind,
    pub bags: usize,
    /// Maximum bag vertex count.
    pub width: usize,
    /// Maximum number of chords (random kind only), bounding the shape's
    /// feedback vertex number.
    pub fvs: usize,
    pub seed: u64,
    pub target: TargetSpec,
    pub problem: ProblemKind,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            kind: Kind::Tree,
            bags: 4,
            width: 3,
            fvs: 1,
            seed: 0,
            target: TargetSpec::Complete(3),
            problem: ProblemKind::Hcoloring,
        }
    }
}

pub fn random_symmetric<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::symmetric(n, &edges).expect("endpoints in range")
}

fn orient<R: Rng>(rng: &mut R, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    pairs
        .iter()
        .map(|&(u, v)| if rng.gen_bool(0.5) { (u, v) } else { (v, u) })
        .collect()
}

/// Cover sets along a random tree: bag `v > 0` hangs off a random earlier
/// bag, shares a random part of it and is topped up with fresh vertices.
/// Returns the tree pairs, the cover, and the number of glued vertices.
fn tree_cover<R: Rng>(
    rng: &mut R,
    bags: usize,
    width: usize,
) -> (Vec<(usize, usize)>, Vec<Vec<usize>>, usize) {
    let mut next = 0;
    let mut fresh = |k: usize| {
        let out: Vec<usize> = (next..next + k).collect();
        next += k;
        out
    };
    let mut pairs = Vec::new();
    let mut cover: Vec<Vec<usize>> = Vec::with_capacity(bags);
    for v in 0..bags {
        let size = rng.gen_range(1..=width.max(1));
        if v == 0 {
            cover.push(fresh(size));
            continue;
        }
        let parent = rng.gen_range(0..v);
        pairs.push((parent, v));
        let shared = rng.gen_range(0..=size.min(cover[parent].len()));
        let mut set: Vec<usize> = cover[parent]
            .choose_multiple(rng, shared)
            .copied()
            .collect();
        set.extend(fresh(size - shared));
        set.sort_unstable();
        cover.push(set);
    }
    (pairs, cover, next)
}

/// Random simple symmetric edges inside every cover set.
fn edges_within<R: Rng>(rng: &mut R, n: usize, cover: &[Vec<usize>], p: f64) -> Graph {
    let mut edges = BTreeSet::new();
    for set in cover {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                let e = (u.min(v), u.max(v));
                if !edges.contains(&e) && rng.gen_bool(p) {
                    edges.insert(e);
                }
            }
        }
    }
    Graph::symmetric(n, &edges.into_iter().collect::<Vec<_>>()).expect("endpoints in range")
}

fn tree<R: Rng>(rng: &mut R, bags: usize, width: usize) -> Result<StructuredDecomposition> {
    let (pairs, cover, n) = tree_cover(rng, bags, width);
    let g = edges_within(rng, n, &cover, 0.5);
    let arcs = orient(rng, &pairs);
    carve(&g, Graph::from_arcs(bags, &arcs)?, &cover)
}

fn random<R: Rng>(
    rng: &mut R,
    bags: usize,
    width: usize,
    chords: usize,
) -> Result<StructuredDecomposition> {
    let (mut pairs, mut cover, mut n) = tree_cover(rng, bags, width);
    for _ in 0..chords {
        if bags < 3 {
            break;
        }
        let u = rng.gen_range(0..bags);
        let v = rng.gen_range(0..bags);
        let pair = (u.min(v), u.max(v));
        if u == v || pairs.contains(&pair) {
            continue;
        }
        pairs.push(pair);
        // usually glue the two bags along a fresh shared vertex, so the chord constrains something
        if cover[u].len() < width && cover[v].len() < width && rng.gen_bool(0.7) {
            cover[u].push(n);
            cover[v].push(n);
            n += 1;
        }
    }
    let g = edges_within(rng, n, &cover, 0.5);
    let arcs = orient(rng, &pairs);
    carve(&g, Graph::from_arcs(bags, &arcs)?, &cover)
}

pub fn decomposition(params: &Params) -> Result<StructuredDecomposition> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    match params.kind {
        Kind::Tree => tree(&mut rng, params.bags, params.width),
        Kind::Cyclic => cyclic_decomposition(params.bags, params.width),
        Kind::Random => random(&mut rng, params.bags, params.width, params.fvs),
    }
}

/// A full instance with the computed minimum feedback vertex set declared.
pub fn instance(params: &Params) -> Result<Instance> {
    let decomposition = decomposition(params)?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ 0x5eed_7a26);
    let target = params.target.build(&mut rng);
    let problem = match params.problem {
        ProblemKind::Hcoloring => ProblemFunctor::hcoloring(target)?,
        ProblemKind::ReflHcoloring => ProblemFunctor::refl_hcoloring(target),
    };
    let fvs = Some(find_fvs(decomposition.shape()));
    Ok(Instance {
        problem,
        decomposition,
        fvs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use sheafdp_core::decomp::is_forest;
    use sheafdp_core::{colim, fixtures, width};

    fn params(kind: Kind, bags: usize, width: usize, fvs: usize, seed: u64) -> Params {
        Params {
            kind,
            bags,
            width,
            fvs,
            seed,
            ..Params::default()
        }
    }

    #[test]
    fn single_tree_bag() {
        let d = decomposition(&params(Kind::Tree, 1, 3, 0, 4)).unwrap();
        assert_eq!(d.shape().nv(), 1);
        assert_eq!(d.shape().ne(), 0);
    }

    #[test]
    fn cyclic_is_the_five_cycle_family() {
        let d = decomposition(&params(Kind::Cyclic, 5, 2, 0, 0)).unwrap();
        assert_eq!(d, fixtures::cyclic_decomposition(5, 2).unwrap());
    }

    #[test]
    fn deterministic_under_seed() {
        let p = params(Kind::Random, 6, 4, 2, 7);
        assert_eq!(
            instance(&p).unwrap().to_canonical(),
            instance(&p).unwrap().to_canonical()
        );
        let q = Params { seed: 8, ..p };
        assert_ne!(
            instance(&p).unwrap().to_canonical(),
            instance(&q).unwrap().to_canonical()
        );
    }

    #[test]
    fn bounds_hold() {
        for seed in 0..200 {
            let bags = 1 + seed as usize % 8;
            let w = 1 + seed as usize % 5;
            let k = seed as usize % 3;
            let t = decomposition(&params(Kind::Tree, bags, w, 0, seed)).unwrap();
            assert!(is_forest(t.shape()) && t.shape().nv() == bags && width(&t) <= w);
            let r = decomposition(&params(Kind::Random, bags, w, k, seed)).unwrap();
            assert!(find_fvs(r.shape()).len() <= k);
            assert!(r.shape().nv() == bags && width(&r) <= w);
            r.validate().unwrap();
        }
    }

    #[test]
    fn tree_bags_glue_back_to_the_recipe() {
        // running intersection: every glued vertex appears once in the colimit
        for seed in 0..50 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (_, cover, n) = tree_cover(&mut rng, 6, 4);
            let d = decomposition(&params(Kind::Tree, 6, 4, 0, seed)).unwrap();
            assert_eq!(colim(&d).total.nv(), n);
            assert_eq!(cover.len(), 6);
        }
    }

    #[test]
    fn target_specs() {
        assert_eq!("k3".parse::<TargetSpec>().unwrap(), TargetSpec::Complete(3));
        assert_eq!("r4".parse::<TargetSpec>().unwrap().to_string(), "r4");
        assert!("c2".parse::<TargetSpec>().is_err());
        assert!("x3".parse::<TargetSpec>().is_err());
        assert!("k".parse::<TargetSpec>().is_err());
    }
}
