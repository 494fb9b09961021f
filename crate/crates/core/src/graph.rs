//! Finite directed multigraphs and their homomorphisms.
//!
//! A graph is a vertex count plus source and target tables over its arcs.
//! Undirected simple graphs are encoded with both orientations of every edge,
//! so that directed homomorphisms between such encodings are exactly the
//! undirected ones.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::finset::{pullback, FinFn};
use crate::sections::SolutionSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    nv: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
}

impl Graph {
    pub fn new(nv: usize, src: Vec<usize>, tgt: Vec<usize>) -> Result<Self> {
        if src.len() != tgt.len() {
            return Err(Error::ArcTableLength {
                src: src.len(),
                tgt: tgt.len(),
            });
        }
        for (arc, (&s, &t)) in src.iter().zip(&tgt).enumerate() {
            if s >= nv || t >= nv {
                let vertex = if s >= nv { s } else { t };
                return Err(Error::ArcOutOfRange { arc, vertex, nv });
            }
        }
        Ok(Graph { nv, src, tgt })
    }

    pub fn from_arcs(nv: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        Graph::new(
            nv,
            arcs.iter().map(|a| a.0).collect(),
            arcs.iter().map(|a| a.1).collect(),
        )
    }

    /// Symmetric encoding of an undirected simple graph: each edge `{u, v}`
    /// contributes arcs `u -> v` and `v -> u`, in that order.
    pub fn symmetric(nv: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut arcs = Vec::with_capacity(2 * edges.len());
        for &(u, v) in edges {
            arcs.push((u, v));
            arcs.push((v, u));
        }
        Graph::from_arcs(nv, &arcs)
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            nv: n,
            src: Vec::new(),
            tgt: Vec::new(),
        }
    }

    pub fn empty() -> Self {
        Graph::edgeless(0)
    }

    /// Loopless complete graph `K_n`, symmetric encoding.
    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::symmetric(n, &edges).expect("indices in range")
    }

    /// Path on `n` vertices (`n - 1` edges), symmetric encoding.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::symmetric(n, &edges).expect("indices in range")
    }

    /// Cycle on `n >= 3` vertices, symmetric encoding.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::symmetric(n, &edges).expect("indices in range")
    }

    pub fn nv(&self) -> usize {
        self.nv
    }

    pub fn ne(&self) -> usize {
        self.src.len()
    }

    pub fn src(&self) -> &[usize] {
        &self.src
    }

    pub fn tgt(&self) -> &[usize] {
        &self.tgt
    }

    pub fn arc(&self, e: usize) -> (usize, usize) {
        (self.src[e], self.tgt[e])
    }

    pub fn arcs(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.src.iter().copied().zip(self.tgt.iter().copied())
    }

    /// Index of the first pair of parallel arcs, if any.
    pub fn parallel_arcs(&self) -> Option<(usize, usize)> {
        let mut seen = HashMap::with_capacity(self.ne());
        for (e, a) in self.arcs().enumerate() {
            if let Some(&first) = seen.get(&a) {
                return Some((first, e));
            }
            seen.insert(a, e);
        }
        None
    }

    /// At most one arc per ordered vertex pair (loops allowed).
    pub fn is_simple(&self) -> bool {
        self.parallel_arcs().is_none()
    }

    pub fn adjacency(&self) -> Adjacency {
        Adjacency::new(self)
    }

    /// The arc `u -> v`, if the graph is simple or the first such arc otherwise.
    pub fn find_arc(&self, u: usize, v: usize) -> Option<usize> {
        self.arcs().position(|a| a == (u, v))
    }

    /// Induced subgraph on `vertices` (given in the order they should be
    /// numbered), together with its inclusion homomorphism.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, GraphHom) {
        let mut local = vec![usize::MAX; self.nv];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut sub = Graph::edgeless(vertices.len());
        let mut emap = Vec::new();
        for (e, (s, t)) in self.arcs().enumerate() {
            if local[s] != usize::MAX && local[t] != usize::MAX {
                sub.src.push(local[s]);
                sub.tgt.push(local[t]);
                emap.push(e);
            }
        }
        let hom = GraphHom {
            vmap: FinFn::from_table_unchecked(vertices.to_vec(), self.nv),
            emap: FinFn::from_table_unchecked(emap, self.ne()),
        };
        (sub, hom)
    }
}

/// Dense adjacency relation of a graph.
#[derive(Debug, Clone)]
pub struct Adjacency {
    n: usize,
    bits: Vec<bool>,
}

impl Adjacency {
    pub fn new(g: &Graph) -> Self {
        let n = g.nv();
        let mut bits = vec![false; n * n];
        for (s, t) in g.arcs() {
            bits[s * n + t] = true;
        }
        Adjacency { n, bits }
    }

    #[inline]
    pub fn has(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.n + v]
    }
}

/// A homomorphism of graphs: a vertex map and an arc map that commute with
/// source and target.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphHom {
    pub vmap: FinFn,
    pub emap: FinFn,
}

impl GraphHom {
    pub fn new(vmap: FinFn, emap: FinFn) -> Self {
        GraphHom { vmap, emap }
    }

    pub fn identity(g: &Graph) -> Self {
        GraphHom {
            vmap: FinFn::identity(g.nv()),
            emap: FinFn::identity(g.ne()),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GraphHom) -> Result<GraphHom> {
        Ok(GraphHom {
            vmap: self.vmap.then(&other.vmap)?,
            emap: self.emap.then(&other.emap)?,
        })
    }

    /// Both components injective.
    pub fn is_mono(&self) -> bool {
        self.vmap.is_injective() && self.emap.is_injective()
    }
}

/// Checks that `h` is a homomorphism `g -> target`.
pub fn validate_hom(h: &GraphHom, g: &Graph, target: &Graph) -> Result<()> {
    if h.vmap.dom().size() != g.nv() || h.vmap.cod().size() != target.nv() {
        return Err(Error::Mismatch(format!(
            "vertex map {} -> {} against graphs with {} and {} vertices",
            h.vmap.dom().size(),
            h.vmap.cod().size(),
            g.nv(),
            target.nv()
        )));
    }
    if h.emap.dom().size() != g.ne() || h.emap.cod().size() != target.ne() {
        return Err(Error::Mismatch(format!(
            "arc map {} -> {} against graphs with {} and {} arcs",
            h.emap.dom().size(),
            h.emap.cod().size(),
            g.ne(),
            target.ne()
        )));
    }
    for (arc, (s, t)) in g.arcs().enumerate() {
        let image = h.emap.apply(arc);
        if target.src[image] != h.vmap.apply(s) || target.tgt[image] != h.vmap.apply(t) {
            return Err(Error::Naturality { arc });
        }
    }
    Ok(())
}

pub fn is_mono(h: &GraphHom) -> bool {
    h.is_mono()
}

/// For each vertex `v`, the arcs whose later endpoint is `v`, as
/// `(other endpoint, v is the source)`. Loops appear with `other == v`.
fn back_constraints(g: &Graph) -> Vec<Vec<(usize, bool)>> {
    let mut out = vec![Vec::new(); g.nv()];
    for (s, t) in g.arcs() {
        if s >= t {
            out[s].push((t, true));
        } else {
            out[t].push((s, false));
        }
    }
    out
}

/// Rejects targets with parallel arcs.
pub fn require_simple(h: &Graph) -> Result<()> {
    match h.parallel_arcs() {
        Some((first, second)) => {
            let (src, tgt) = h.arc(first);
            Err(Error::NonSimpleTarget {
                first,
                second,
                src,
                tgt,
            })
        }
        None => Ok(()),
    }
}

/// All homomorphisms `g -> h` as vertex tuples, lexicographically ordered.
///
/// `h` must be simple, so the arc map of each homomorphism is determined by
/// its vertex map (see [`induced_emap`]).
pub fn enumerate_homs(g: &Graph, h: &Graph) -> Result<SolutionSet> {
    let mut out = SolutionSet::empty(g.nv());
    for_each_hom(g, h, |s| {
        out.push_unchecked(s);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Visits the homomorphisms `g -> h` in lexicographic order until `visit`
/// breaks. Returns whether the walk was broken off.
pub fn for_each_hom(
    g: &Graph,
    h: &Graph,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<bool> {
    require_simple(h)?;
    let adj = h.adjacency();
    let back = back_constraints(g);
    let mut assignment = vec![0usize; g.nv()];
    Ok(extend_hom(0, &back, &adj, h.nv(), &mut assignment, &mut visit).is_break())
}

fn extend_hom(
    v: usize,
    back: &[Vec<(usize, bool)>],
    adj: &Adjacency,
    hn: usize,
    assignment: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if v == assignment.len() {
        return visit(assignment);
    }
    for c in 0..hn {
        assignment[v] = c;
        let ok = back[v].iter().all(|&(u, v_is_src)| {
            let cu = assignment[u];
            if v_is_src {
                adj.has(c, cu)
            } else {
                adj.has(cu, c)
            }
        });
        if ok {
            extend_hom(v + 1, back, adj, hn, assignment, visit)?;
        }
    }
    ControlFlow::Continue(())
}

/// The arc map of the homomorphism with vertex map `vmap` into a simple `h`.
pub fn induced_emap(g: &Graph, h: &Graph, vmap: &[usize]) -> Result<FinFn> {
    let index: HashMap<(usize, usize), usize> = h.arcs().enumerate().map(|(e, a)| (a, e)).collect();
    let mut table = Vec::with_capacity(g.ne());
    for (arc, (s, t)) in g.arcs().enumerate() {
        match index.get(&(vmap[s], vmap[t])) {
            Some(&e) => table.push(e),
            None => return Err(Error::Naturality { arc }),
        }
    }
    FinFn::new(table, h.ne())
}

/// Vertex maps `f` such that an arc `f(x) -> f(y)` in `h` forces an arc
/// `x -> y` in `g`, for every ordered pair `(x, y)` including `x == y`.
pub fn enumerate_refl_homs(g: &Graph, h: &Graph) -> SolutionSet {
    let mut out = SolutionSet::empty(g.nv());
    for_each_refl_hom(g, h, |s| {
        out.push_unchecked(s);
        ControlFlow::Continue(())
    });
    out
}

/// Visits the reflexive homomorphisms `g -> h` in lexicographic order until
/// `visit` breaks. Returns whether the walk was broken off.
pub fn for_each_refl_hom(
    g: &Graph,
    h: &Graph,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> bool {
    let gadj = g.adjacency();
    let hadj = h.adjacency();
    let mut assignment = vec![0usize; g.nv()];
    extend_refl(0, &gadj, &hadj, h.nv(), &mut assignment, &mut visit).is_break()
}

fn extend_refl(
    v: usize,
    gadj: &Adjacency,
    hadj: &Adjacency,
    hn: usize,
    assignment: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if v == assignment.len() {
        return visit(assignment);
    }
    for c in 0..hn {
        if hadj.has(c, c) && !gadj.has(v, v) {
            continue;
        }
        let ok = (0..v).all(|u| {
            let cu = assignment[u];
            (!hadj.has(c, cu) || gadj.has(v, u)) && (!hadj.has(cu, c) || gadj.has(u, v))
        });
        if ok {
            assignment[v] = c;
            extend_refl(v + 1, gadj, hadj, hn, assignment, visit)?;
        }
    }
    ControlFlow::Continue(())
}

/// Checks a single vertex map against the reflexive-homomorphism condition.
pub fn is_refl_hom(g: &Graph, h: &Graph, vmap: &[usize]) -> bool {
    if vmap.len() != g.nv() || vmap.iter().any(|&c| c >= h.nv()) {
        return false;
    }
    let gadj = g.adjacency();
    let hadj = h.adjacency();
    (0..g.nv()).all(|x| (0..g.nv()).all(|y| !hadj.has(vmap[x], vmap[y]) || gadj.has(x, y)))
}

/// Pullback of `f: a -> c` and `g: b -> c`, computed on vertices and on arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphPullback {
    pub apex: Graph,
    pub left: GraphHom,
    pub right: GraphHom,
}

pub fn graph_pullback(a: &Graph, f: &GraphHom, b: &Graph, g: &GraphHom) -> Result<GraphPullback> {
    if f.vmap.cod() != g.vmap.cod() || f.emap.cod() != g.emap.cod() {
        return Err(Error::Mismatch(
            "graph pullback of homomorphisms with different codomains".into(),
        ));
    }
    if f.vmap.dom().size() != a.nv() || f.emap.dom().size() != a.ne() {
        return Err(Error::Mismatch(
            "left homomorphism does not match its domain graph".into(),
        ));
    }
    if g.vmap.dom().size() != b.nv() || g.emap.dom().size() != b.ne() {
        return Err(Error::Mismatch(
            "right homomorphism does not match its domain graph".into(),
        ));
    }
    let vertices = pullback(&f.vmap, &g.vmap)?;
    let arcs = pullback(&f.emap, &g.emap)?;
    let index: HashMap<(usize, usize), usize> =
        vertices.pairs().enumerate().map(|(i, p)| (p, i)).collect();
    let mut src = Vec::with_capacity(arcs.apex.size());
    let mut tgt = Vec::with_capacity(arcs.apex.size());
    for (ea, eb) in arcs.pairs() {
        let s = index.get(&(a.src[ea], b.src[eb]));
        let t = index.get(&(a.tgt[ea], b.tgt[eb]));
        match (s, t) {
            (Some(&s), Some(&t)) => {
                src.push(s);
                tgt.push(t);
            }
            // only reachable when f or g is not a homomorphism
            _ => return Err(Error::Naturality { arc: ea }),
        }
    }
    let apex = Graph {
        nv: vertices.apex.size(),
        src,
        tgt,
    };
    Ok(GraphPullback {
        apex,
        left: GraphHom {
            vmap: vertices.left,
            emap: arcs.left,
        },
        right: GraphHom {
            vmap: vertices.right,
            emap: arcs.right,
        },
    })
}
