//! Problem functors and the solution-space co-decomposition they induce.
//!
//! A problem functor sends a graph to its finite set of sections (vertex
//! maps into a fixed target) and a monomorphism `A -> B` to the restriction
//! map `F(B) -> F(A)` given by precomposition.

use std::ops::ControlFlow;
use std::sync::Arc;

use crate::decomp::{validate_shape, StructuredDecomposition};
use crate::error::{Error, Result};
use crate::finset::FinFn;
use crate::graph::{
    enumerate_homs, enumerate_refl_homs, for_each_hom, for_each_refl_hom, is_refl_hom,
    require_simple, Graph, GraphHom,
};
use crate::sections::SolutionSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProblemFunctor {
    /// Homomorphisms into a simple target graph.
    HColoring(Graph),
    /// Reflexive homomorphisms: an arc between images forces the arc between
    /// the preimages.
    ReflHColoring(Graph),
}

impl ProblemFunctor {
    pub fn hcoloring(target: Graph) -> Result<Self> {
        require_simple(&target)?;
        Ok(ProblemFunctor::HColoring(target))
    }

    pub fn refl_hcoloring(target: Graph) -> Self {
        ProblemFunctor::ReflHColoring(target)
    }

    pub fn target(&self) -> &Graph {
        match self {
            ProblemFunctor::HColoring(h) | ProblemFunctor::ReflHColoring(h) => h,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ProblemFunctor::HColoring(h) => require_simple(h),
            ProblemFunctor::ReflHColoring(_) => Ok(()),
        }
    }

    pub fn eval(&self, g: &Graph) -> Result<SolutionSet> {
        match self {
            ProblemFunctor::HColoring(h) => enumerate_homs(g, h),
            ProblemFunctor::ReflHColoring(h) => Ok(enumerate_refl_homs(g, h)),
        }
    }

    /// Visits the sections on `g` in lexicographic order until `visit` breaks.
    /// Returns whether the walk was broken off.
    pub fn for_each_section(
        &self,
        g: &Graph,
        visit: impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Result<bool> {
        match self {
            ProblemFunctor::HColoring(h) => for_each_hom(g, h, visit),
            ProblemFunctor::ReflHColoring(h) => Ok(for_each_refl_hom(g, h, visit)),
        }
    }

    /// Whether `g` has at least one section. Stops at the first one found.
    pub fn has_section(&self, g: &Graph) -> Result<bool> {
        self.for_each_section(g, |_| ControlFlow::Break(()))
    }

    /// Whether `vmap` is a section of this functor on `g`.
    pub fn is_section(&self, g: &Graph, vmap: &[usize]) -> bool {
        match self {
            ProblemFunctor::HColoring(h) => {
                let adj = h.adjacency();
                vmap.len() == g.nv()
                    && vmap.iter().all(|&c| c < h.nv())
                    && g.arcs().all(|(s, t)| adj.has(vmap[s], vmap[t]))
            }
            ProblemFunctor::ReflHColoring(h) => is_refl_hom(g, h, vmap),
        }
    }

    /// The restriction map `from -> to` induced by a monomorphism `m` whose
    /// domain carries the sections `to` and whose codomain carries `from`.
    ///
    /// Each precomposed section is looked up in `to`; a miss means the
    /// configuration is not functorial and is reported, not papered over.
    pub fn restriction_map(
        &self,
        m: &GraphHom,
        from: &SolutionSet,
        to: &SolutionSet,
    ) -> Result<FinFn> {
        if !m.is_mono() {
            return Err(Error::NotMonic);
        }
        let inner = m.vmap.table();
        if inner.len() != to.arity() || m.vmap.cod().size() != from.arity() {
            return Err(Error::Mismatch(format!(
                "restriction along a map {} -> {} between section sets of arity {} and {}",
                inner.len(),
                m.vmap.cod().size(),
                to.arity(),
                from.arity()
            )));
        }
        let mut scratch = vec![0; inner.len()];
        let mut table = Vec::with_capacity(from.len());
        for (i, s) in from.iter().enumerate() {
            for (slot, &v) in scratch.iter_mut().zip(inner) {
                *slot = s[v];
            }
            match to.index_of(&scratch) {
                Some(j) => table.push(j),
                None => return Err(Error::NonSection { section: i }),
            }
        }
        FinFn::new(table, to.len())
    }

    /// `F(b) -> F(a)` for a monomorphism `m: a -> b`.
    pub fn restrict(&self, a: &Graph, b: &Graph, m: &GraphHom) -> Result<FinFn> {
        let from = self.eval(b)?;
        let to = self.eval(a)?;
        self.restriction_map(m, &from, &to)
    }
}

/// Adhesion data of a co-decomposition: the section set of the apex and the
/// two restriction maps into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdhesionSolutions {
    pub sections: SolutionSet,
    pub rho_x: FinFn,
    pub rho_y: FinFn,
}

#[derive(Debug, PartialEq, Eq)]
pub(crate) struct CoDecompData {
    pub(crate) shape: Graph,
    pub(crate) bags: Vec<SolutionSet>,
    pub(crate) adhesions: Vec<AdhesionSolutions>,
}

/// A FinSet-valued co-decomposition: per shape vertex a section set with a
/// live subset, per shape arc a cospan `bag(x) -> adhesion <- bag(y)`.
///
/// The section sets and restriction maps are shared and immutable; only the
/// live subsets (sorted index lists) change under filtering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolCoDecomp {
    pub(crate) data: Arc<CoDecompData>,
    pub(crate) live: Vec<Vec<usize>>,
}

impl SolCoDecomp {
    /// Assembles a co-decomposition with every bag fully live.
    pub fn new(
        shape: Graph,
        bags: Vec<SolutionSet>,
        adhesions: Vec<AdhesionSolutions>,
    ) -> Result<Self> {
        validate_shape(&shape)?;
        if bags.len() != shape.nv() || adhesions.len() != shape.ne() {
            return Err(Error::Mismatch(format!(
                "shape with {} vertices and {} arcs given {} bag sets and {} adhesion sets",
                shape.nv(),
                shape.ne(),
                bags.len(),
                adhesions.len()
            )));
        }
        for (e, adh) in adhesions.iter().enumerate() {
            let (x, y) = shape.arc(e);
            let ok = adh.rho_x.dom().size() == bags[x].len()
                && adh.rho_y.dom().size() == bags[y].len()
                && adh.rho_x.cod().size() == adh.sections.len()
                && adh.rho_y.cod().size() == adh.sections.len();
            if !ok {
                return Err(Error::Mismatch(format!(
                    "adhesion {e}: restriction maps do not match the section sets"
                )));
            }
        }
        let live = bags.iter().map(|b| (0..b.len()).collect()).collect();
        Ok(SolCoDecomp {
            data: Arc::new(CoDecompData {
                shape,
                bags,
                adhesions,
            }),
            live,
        })
    }

    pub fn shape(&self) -> &Graph {
        &self.data.shape
    }

    pub fn bag_sections(&self, v: usize) -> &SolutionSet {
        &self.data.bags[v]
    }

    pub fn adhesion(&self, e: usize) -> &AdhesionSolutions {
        &self.data.adhesions[e]
    }

    /// Sorted indices of the live sections at shape vertex `v`.
    pub fn live(&self, v: usize) -> &[usize] {
        &self.live[v]
    }

    pub fn live_sets(&self) -> &[Vec<usize>] {
        &self.live
    }

    pub fn live_counts(&self) -> Vec<usize> {
        self.live.iter().map(Vec::len).collect()
    }

    /// Full section-set sizes per bag.
    pub fn bag_sizes(&self) -> Vec<usize> {
        self.data.bags.iter().map(SolutionSet::len).collect()
    }

    /// Largest live subset.
    pub fn kappa(&self) -> usize {
        self.live.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Replaces the live subset at `v`; indices are sorted and deduplicated.
    pub fn set_live(&mut self, v: usize, mut live: Vec<usize>) -> Result<()> {
        let n = self
            .data
            .bags
            .get(v)
            .map(SolutionSet::len)
            .ok_or(Error::IndexOutOfRange {
                what: "shape vertex",
                index: v,
                len: self.live.len(),
            })?;
        live.sort_unstable();
        live.dedup();
        if let Some(&bad) = live.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange {
                what: "section",
                index: bad,
                len: n,
            });
        }
        self.live[v] = live;
        Ok(())
    }

    /// Same structure, with the live subsets reset to the full sets.
    pub fn reset(&self) -> SolCoDecomp {
        SolCoDecomp {
            data: Arc::clone(&self.data),
            live: self
                .data
                .bags
                .iter()
                .map(|b| (0..b.len()).collect())
                .collect(),
        }
    }

    /// Image of the live sections at the tail of arc `e` in the adhesion set.
    pub fn adhesion_image(&self, e: usize) -> Vec<usize> {
        let (x, _) = self.data.shape.arc(e);
        let rho = &self.data.adhesions[e].rho_x;
        let mut img: Vec<usize> = self.live[x].iter().map(|&s| rho.apply(s)).collect();
        img.sort_unstable();
        img.dedup();
        img
    }
}

/// Evaluates `problem` on every bag and adhesion of `d`.
pub fn apply_sd(problem: &ProblemFunctor, d: &StructuredDecomposition) -> Result<SolCoDecomp> {
    problem.validate()?;
    let bags = d
        .bags()
        .iter()
        .map(|b| problem.eval(b))
        .collect::<Result<Vec<_>>>()?;
    let mut adhesions = Vec::with_capacity(d.adhesions().len());
    for (e, span) in d.adhesions().iter().enumerate() {
        let (x, y) = d.shape().arc(e);
        let sections = problem.eval(&span.apex)?;
        let rho_x = problem.restriction_map(&span.leg_x, &bags[x], &sections)?;
        let rho_y = problem.restriction_map(&span.leg_y, &bags[y], &sections)?;
        adhesions.push(AdhesionSolutions {
            sections,
            rho_x,
            rho_y,
        });
    }
    SolCoDecomp::new(d.shape().clone(), bags, adhesions)
}
