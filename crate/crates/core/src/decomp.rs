//! Structured decompositions of graphs.
//!
//! A decomposition assigns a bag graph to every vertex of a shape graph and a
//! span of monomorphisms `bag(x) <- apex -> bag(y)` to every shape arc
//! `x -> y`. Adhesion spans are stored in shape-arc order.

use std::collections::HashMap;

use crate::error::{Error, Leg, Result};
use crate::finset::FinFn;
use crate::graph::{graph_pullback, validate_hom, Graph, GraphHom};

mod fvs;

pub use fvs::{find_fvs, is_forest, is_fvs, UndirectedShape};

/// Checks the shape precondition: no loops, no antiparallel arcs, at most one
/// arc per ordered pair.
pub fn validate_shape(shape: &Graph) -> Result<()> {
    let mut seen = HashMap::with_capacity(shape.ne());
    for (e, (s, t)) in shape.arcs().enumerate() {
        if s == t {
            return Err(Error::Shape(format!("arc {e} is a loop at vertex {s}")));
        }
        if let Some(&other) = seen.get(&(s, t)) {
            return Err(Error::Shape(format!(
                "arcs {other} and {e} are parallel ({s}->{t})"
            )));
        }
        if let Some(&other) = seen.get(&(t, s)) {
            return Err(Error::Shape(format!(
                "arcs {other} and {e} are antiparallel ({s}<->{t})"
            )));
        }
        seen.insert((s, t), e);
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdhesionSpan {
    pub apex: Graph,
    pub leg_x: GraphHom,
    pub leg_y: GraphHom,
}

impl AdhesionSpan {
    pub fn new(apex: Graph, leg_x: GraphHom, leg_y: GraphHom) -> Self {
        AdhesionSpan { apex, leg_x, leg_y }
    }

    pub fn leg(&self, leg: Leg) -> &GraphHom {
        match leg {
            Leg::X => &self.leg_x,
            Leg::Y => &self.leg_y,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredDecomposition {
    shape: Graph,
    bags: Vec<Graph>,
    adhesions: Vec<AdhesionSpan>,
}

impl StructuredDecomposition {
    /// Builds and validates a decomposition. `adhesions[e]` spans shape arc `e`.
    pub fn new(shape: Graph, bags: Vec<Graph>, adhesions: Vec<AdhesionSpan>) -> Result<Self> {
        let d = StructuredDecomposition {
            shape,
            bags,
            adhesions,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn single_bag(bag: Graph) -> Self {
        StructuredDecomposition {
            shape: Graph::edgeless(1),
            bags: vec![bag],
            adhesions: Vec::new(),
        }
    }

    /// The decomposition with no bags at all.
    pub fn empty() -> Self {
        StructuredDecomposition {
            shape: Graph::empty(),
            bags: Vec::new(),
            adhesions: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Graph {
        &self.shape
    }

    pub fn bags(&self) -> &[Graph] {
        &self.bags
    }

    pub fn bag(&self, v: usize) -> &Graph {
        &self.bags[v]
    }

    pub fn adhesions(&self) -> &[AdhesionSpan] {
        &self.adhesions
    }

    pub fn adhesion(&self, e: usize) -> &AdhesionSpan {
        &self.adhesions[e]
    }

    pub fn validate(&self) -> Result<()> {
        validate_shape(&self.shape)?;
        if self.bags.len() != self.shape.nv() {
            return Err(Error::Mismatch(format!(
                "shape has {} vertices but {} bags were given",
                self.shape.nv(),
                self.bags.len()
            )));
        }
        if self.adhesions.len() != self.shape.ne() {
            return Err(Error::Mismatch(format!(
                "shape has {} arcs but {} adhesions were given",
                self.shape.ne(),
                self.adhesions.len()
            )));
        }
        for (e, span) in self.adhesions.iter().enumerate() {
            let (x, y) = self.shape.arc(e);
            for (leg, bag) in [(Leg::X, &self.bags[x]), (Leg::Y, &self.bags[y])] {
                let hom = span.leg(leg);
                match validate_hom(hom, &span.apex, bag) {
                    Ok(()) => {}
                    Err(Error::Naturality { arc }) => {
                        return Err(Error::LegNaturality {
                            arc: e,
                            leg,
                            apex_arc: arc,
                        })
                    }
                    Err(Error::Mismatch(msg)) => {
                        return Err(Error::Mismatch(format!("adhesion {e}, {leg}: {msg}")))
                    }
                    Err(other) => return Err(other),
                }
                if !hom.is_mono() {
                    return Err(Error::NonMonicLeg { arc: e, leg });
                }
            }
        }
        Ok(())
    }
}

/// Largest bag vertex count, 0 when there are no bags.
pub fn width(d: &StructuredDecomposition) -> usize {
    d.bags.iter().map(Graph::nv).max().unwrap_or(0)
}

/// Union-find whose representative is always the smallest member.
struct MinUnionFind {
    parent: Vec<usize>,
}

impl MinUnionFind {
    fn new(n: usize) -> Self {
        MinUnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Dense class labels, numbered in increasing order of representative.
    fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for i in 0..n {
            let r = self.find(i);
            if r == i {
                label[i] = count;
                count += 1;
            }
            label[i] = label[r];
        }
        (label, count)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colimit {
    pub total: Graph,
    /// One homomorphism `bag(v) -> total` per shape vertex.
    pub cocone: Vec<GraphHom>,
}

/// Glues the bags along every adhesion span.
///
/// Vertices and arcs of the disjoint union of bags are identified by
/// union-find; each class is labelled by the position of its smallest
/// global index, so the output does not depend on arc processing order.
pub fn colim(d: &StructuredDecomposition) -> Colimit {
    let n = d.bags.len();
    let mut voff = Vec::with_capacity(n + 1);
    let mut eoff = Vec::with_capacity(n + 1);
    voff.push(0);
    eoff.push(0);
    for bag in &d.bags {
        voff.push(voff.last().unwrap() + bag.nv());
        eoff.push(eoff.last().unwrap() + bag.ne());
    }
    let mut vuf = MinUnionFind::new(voff[n]);
    let mut euf = MinUnionFind::new(eoff[n]);
    for (e, span) in d.adhesions.iter().enumerate() {
        let (x, y) = d.shape.arc(e);
        for a in 0..span.apex.nv() {
            vuf.union(
                voff[x] + span.leg_x.vmap.apply(a),
                voff[y] + span.leg_y.vmap.apply(a),
            );
        }
        for a in 0..span.apex.ne() {
            euf.union(
                eoff[x] + span.leg_x.emap.apply(a),
                eoff[y] + span.leg_y.emap.apply(a),
            );
        }
    }
    let (vlabel, nv) = vuf.labels();
    let (elabel, ne) = euf.labels();

    let mut src = vec![0; ne];
    let mut tgt = vec![0; ne];
    for (v, bag) in d.bags.iter().enumerate() {
        for (a, (s, t)) in bag.arcs().enumerate() {
            let class = elabel[eoff[v] + a];
            src[class] = vlabel[voff[v] + s];
            tgt[class] = vlabel[voff[v] + t];
        }
    }
    let total = Graph::new(nv, src, tgt).expect("labels are in range");
    let cocone = d
        .bags
        .iter()
        .enumerate()
        .map(|(v, bag)| {
            GraphHom::new(
                FinFn::from_table_unchecked(vlabel[voff[v]..voff[v] + bag.nv()].to_vec(), nv),
                FinFn::from_table_unchecked(elabel[eoff[v]..eoff[v] + bag.ne()].to_vec(), ne),
            )
        })
        .collect();
    Colimit { total, cocone }
}

fn pair_index(left: &FinFn, right: &FinFn) -> HashMap<(usize, usize), usize> {
    left.table()
        .iter()
        .copied()
        .zip(right.table().iter().copied())
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect()
}

/// Restricts `d` along a monomorphism `f: sub -> colim(d).total` by pulling
/// back every bag and every adhesion along `f`.
pub fn restrict_along_mono(
    d: &StructuredDecomposition,
    sub: &Graph,
    f: &GraphHom,
) -> Result<StructuredDecomposition> {
    let c = colim(d);
    validate_hom(f, sub, &c.total)?;
    if !f.is_mono() {
        return Err(Error::NotMonic);
    }
    let mut bags = Vec::with_capacity(d.bags.len());
    let mut lookups = Vec::with_capacity(d.bags.len());
    for (v, bag) in d.bags.iter().enumerate() {
        let p = graph_pullback(sub, f, bag, &c.cocone[v])?;
        lookups.push((
            pair_index(&p.left.vmap, &p.right.vmap),
            pair_index(&p.left.emap, &p.right.emap),
        ));
        bags.push(p.apex);
    }

    let mut adhesions = Vec::with_capacity(d.adhesions.len());
    for (e, span) in d.adhesions.iter().enumerate() {
        let (x, y) = d.shape.arc(e);
        let into_total = span.leg_x.then(&c.cocone[x])?;
        let q = graph_pullback(sub, f, &span.apex, &into_total)?;
        let leg_into = |target: usize, leg: &GraphHom| -> GraphHom {
            let (vl, el) = &lookups[target];
            let vmap = q
                .left
                .vmap
                .table()
                .iter()
                .zip(q.right.vmap.table())
                .map(|(&xi, &a)| vl[&(xi, leg.vmap.apply(a))])
                .collect();
            let emap = q
                .left
                .emap
                .table()
                .iter()
                .zip(q.right.emap.table())
                .map(|(&xi, &a)| el[&(xi, leg.emap.apply(a))])
                .collect();
            GraphHom::new(
                FinFn::from_table_unchecked(vmap, bags[target].nv()),
                FinFn::from_table_unchecked(emap, bags[target].ne()),
            )
        };
        let leg_x = leg_into(x, &span.leg_x);
        let leg_y = leg_into(y, &span.leg_y);
        adhesions.push(AdhesionSpan::new(q.apex.clone(), leg_x, leg_y));
    }
    StructuredDecomposition::new(d.shape.clone(), bags, adhesions)
}

/// Carves a decomposition out of a known graph: bag `v` is the subgraph of
/// `g` induced on `cover[v]`, and the adhesion on each shape arc `x -> y` is
/// the subgraph induced on `cover[x] ∩ cover[y]`, with inclusions as legs.
///
/// Cover lists may be in any order and must not repeat vertices.
pub fn carve(g: &Graph, shape: Graph, cover: &[Vec<usize>]) -> Result<StructuredDecomposition> {
    if cover.len() != shape.nv() {
        return Err(Error::Mismatch(format!(
            "{} cover sets for {} shape vertices",
            cover.len(),
            shape.nv()
        )));
    }
    let mut position = Vec::with_capacity(cover.len());
    let mut bags = Vec::with_capacity(cover.len());
    let mut arc_position = Vec::with_capacity(cover.len());
    for set in cover {
        let mut pos = HashMap::with_capacity(set.len());
        for (i, &u) in set.iter().enumerate() {
            if u >= g.nv() {
                return Err(Error::IndexOutOfRange {
                    what: "cover vertex",
                    index: u,
                    len: g.nv(),
                });
            }
            if pos.insert(u, i).is_some() {
                return Err(Error::Mismatch(format!(
                    "cover set {set:?} repeats vertex {u}"
                )));
            }
        }
        let (bag, incl) = g.induced(set);
        arc_position.push(
            incl.emap
                .table()
                .iter()
                .enumerate()
                .map(|(a, &ge)| (ge, a))
                .collect::<HashMap<_, _>>(),
        );
        position.push(pos);
        bags.push(bag);
    }
    let mut adhesions = Vec::with_capacity(shape.ne());
    for (x, y) in shape.arcs() {
        let mut shared: Vec<usize> = cover[x]
            .iter()
            .copied()
            .filter(|u| position[y].contains_key(u))
            .collect();
        shared.sort_unstable();
        let (apex, incl) = g.induced(&shared);
        let leg = |v: usize| {
            let vmap = shared.iter().map(|u| position[v][u]).collect();
            let emap = incl
                .emap
                .table()
                .iter()
                .map(|ge| arc_position[v][ge])
                .collect();
            GraphHom::new(
                FinFn::from_table_unchecked(vmap, bags[v].nv()),
                FinFn::from_table_unchecked(emap, bags[v].ne()),
            )
        };
        let (leg_x, leg_y) = (leg(x), leg(y));
        adhesions.push(AdhesionSpan::new(apex, leg_x, leg_y));
    }
    StructuredDecomposition::new(shape, bags, adhesions)
}
