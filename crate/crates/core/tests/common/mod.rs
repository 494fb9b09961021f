#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use sheafdp_core::decomp::carve;
use sheafdp_core::finset::FinFn;
use sheafdp_core::problems::AdhesionSolutions;
use sheafdp_core::{Graph, SolCoDecomp, SolutionSet, StructuredDecomposition};

/// Random simple symmetric graph with edge probability `p`.
pub fn symmetric_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::symmetric(n, &edges).unwrap()
}

/// Random simple directed graph without loops.
pub fn directed_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Graph::from_arcs(n, &arcs).unwrap()
}

/// Random valid shape: a forest (each vertex joins an earlier one with
/// probability `attach`) plus up to `chords` extra arcs, randomly oriented.
pub fn shape<R: Rng>(rng: &mut R, n: usize, attach: f64, chords: usize) -> Graph {
    let mut pairs = Vec::new();
    for v in 1..n {
        if rng.gen_bool(attach) {
            pairs.push((rng.gen_range(0..v), v));
        }
    }
    for _ in 0..chords {
        if n < 2 {
            break;
        }
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !pairs.contains(&(u.min(v), u.max(v))) {
            pairs.push((u.min(v), u.max(v)));
        }
    }
    let arcs: Vec<_> = pairs
        .into_iter()
        .map(|(u, v)| if rng.gen_bool(0.5) { (u, v) } else { (v, u) })
        .collect();
    Graph::from_arcs(n, &arcs).unwrap()
}

/// Random decomposition carved out of `g`: bags are random vertex subsets of
/// size at most `max_bag`.
pub fn carved<R: Rng>(
    rng: &mut R,
    g: &Graph,
    shape: Graph,
    max_bag: usize,
) -> StructuredDecomposition {
    let all: Vec<usize> = (0..g.nv()).collect();
    let cover: Vec<Vec<usize>> = (0..shape.nv())
        .map(|_| {
            let k = rng.gen_range(0..=max_bag.min(g.nv()));
            all.choose_multiple(rng, k).copied().collect()
        })
        .collect();
    carve(g, shape, &cover).unwrap()
}

/// Random abstract co-decomposition over `shape`: bag sets of size at most
/// `kappa`, adhesion sets of size at most `adhesion`, arbitrary restriction
/// maps.
pub fn codecomp<R: Rng>(rng: &mut R, shape: Graph, kappa: usize, adhesion: usize) -> SolCoDecomp {
    let sizes: Vec<usize> = (0..shape.nv())
        .map(|_| {
            if rng.gen_bool(0.05) {
                0
            } else {
                rng.gen_range(1..=kappa)
            }
        })
        .collect();
    let adhesions = shape
        .arcs()
        .map(|(x, y)| {
            let m = rng.gen_range(1..=adhesion);
            let mut map = |dom: usize| {
                FinFn::new((0..dom).map(|_| rng.gen_range(0..m)).collect(), m).unwrap()
            };
            let rho_x = map(sizes[x]);
            let rho_y = map(sizes[y]);
            AdhesionSolutions {
                sections: SolutionSet::indexed(m),
                rho_x,
                rho_y,
            }
        })
        .collect();
    SolCoDecomp::new(
        shape,
        sizes.iter().map(|&k| SolutionSet::indexed(k)).collect(),
        adhesions,
    )
    .unwrap()
}

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}
