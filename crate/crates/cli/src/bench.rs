//! Wall-time sweeps over the edge count, the solution-space width κ, and
//! the feedback vertex number of the shape.

use std::io::Write;
use std::time::Instant;

use sheafdp_core::decomp::carve;
use sheafdp_core::fixtures::cyclic_decomposition;
use sheafdp_core::{
    apply_sd, colim, decide, find_fvs, Graph, ProblemFunctor, Result, SolverConfig,
    StructuredDecomposition, Truth,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    /// Cyclic decompositions of `C_n` into edges, 3-coloring:
    /// κ = 6, |S| = 1, |EG| ∈ {50, 100, 200, 400, 800}.
    Edges,
    /// Edge bags, 2-coloring, |S| ∈ {0, 1, 2} at fixed |EG|, with an
    /// unsatisfiable two-path component so every σ is tried.
    Fvs,
    /// Path of edge bags, `K_q`-coloring for q = 2..=6.
    Kappa,
}

pub const EDGE_COUNTS: [usize; 5] = [50, 100, 200, 400, 800];
/// Edges in the cycle or path part of each fvs-series instance.
pub const FVS_EDGES: usize = 240;
pub const KAPPA_EDGES: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub param: usize,
    pub edges: usize,
    pub kappa: usize,
    pub fvs: usize,
    pub time_ms: f64,
    pub verdict: Truth,
}

pub struct Case {
    pub param: usize,
    pub problem: ProblemFunctor,
    pub decomposition: StructuredDecomposition,
}

/// Gluing recipe for decompositions whose bags are single edges.
#[derive(Default)]
struct Recipe {
    nv: usize,
    edges: Vec<(usize, usize)>,
    shape_arcs: Vec<(usize, usize)>,
    cover: Vec<Vec<usize>>,
}

impl Recipe {
    /// `len` edge bags along a path (closed into a cycle when `closed`).
    fn edge_chain(&mut self, len: usize, closed: bool) {
        let (v0, b0) = (self.nv, self.cover.len());
        let nv = if closed { len } else { len + 1 };
        for i in 0..len {
            let (u, w) = (v0 + i, v0 + (i + 1) % nv);
            self.edges.push((u, w));
            self.cover.push(vec![u, w]);
            if i + 1 < len {
                self.shape_arcs.push((b0 + i, b0 + i + 1));
            }
        }
        if closed {
            self.shape_arcs.push((b0 + len - 1, b0));
        }
        self.nv += nv;
    }

    /// A 5-cycle covered by a 3-vertex and a 4-vertex path sharing endpoints.
    fn two_paths(&mut self) {
        let (v0, b0) = (self.nv, self.cover.len());
        for i in 0..5 {
            self.edges.push((v0 + i, v0 + (i + 1) % 5));
        }
        self.cover.push(vec![v0, v0 + 1, v0 + 2]);
        self.cover.push(vec![v0 + 2, v0 + 3, v0 + 4, v0]);
        self.shape_arcs.push((b0, b0 + 1));
        self.nv += 5;
    }

    fn build(self) -> Result<StructuredDecomposition> {
        let g = Graph::symmetric(self.nv, &self.edges)?;
        carve(
            &g,
            Graph::from_arcs(self.cover.len(), &self.shape_arcs)?,
            &self.cover,
        )
    }
}

fn colouring(q: usize) -> ProblemFunctor {
    ProblemFunctor::hcoloring(Graph::complete(q)).expect("complete graphs are simple")
}

pub fn cases(series: Series) -> Result<Vec<Case>> {
    match series {
        Series::Edges => EDGE_COUNTS
            .iter()
            .map(|&n| {
                Ok(Case {
                    param: n,
                    problem: colouring(3),
                    decomposition: cyclic_decomposition(n, 2)?,
                })
            })
            .collect(),
        Series::Fvs => (0..=2)
            .map(|s| {
                let mut r = Recipe::default();
                match s {
                    0 => r.edge_chain(FVS_EDGES, false),
                    _ => (0..s).for_each(|_| r.edge_chain(FVS_EDGES / s, true)),
                }
                r.two_paths();
                Ok(Case {
                    param: s,
                    problem: colouring(2),
                    decomposition: r.build()?,
                })
            })
            .collect(),
        Series::Kappa => (2..=6)
            .map(|q| {
                let mut r = Recipe::default();
                r.edge_chain(KAPPA_EDGES, false);
                Ok(Case {
                    param: q,
                    problem: colouring(q),
                    decomposition: r.build()?,
                })
            })
            .collect(),
    }
}

/// Times `decide` (evaluation plus σ enumeration) on one case, taking the
/// median over `reps` runs. The feedback vertex set is computed up front.
pub fn measure(case: &Case, reps: usize) -> Result<Row> {
    let d = &case.decomposition;
    let fvs = find_fvs(d.shape());
    let config = SolverConfig::default();
    let mut times = Vec::with_capacity(reps.max(1));
    let mut verdict = Truth::Bottom;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        verdict = decide(&case.problem, d, Some(&fvs), &config)?.answer;
        times.push(start.elapsed().as_secs_f64() * 1e3);
    }
    times.sort_by(f64::total_cmp);
    let kappa = apply_sd(&case.problem, d)?.kappa();
    Ok(Row {
        param: case.param,
        edges: colim(d).total.ne() / 2,
        kappa,
        fvs: fvs.len(),
        time_ms: times[times.len() / 2],
        verdict,
    })
}

pub fn run(series: Series, reps: usize) -> Result<Vec<Row>> {
    cases(series)?.iter().map(|c| measure(c, reps)).collect()
}

pub fn write_csv<W: Write>(rows: &[Row], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["param", "|EG|", "kappa", "|S|", "time_ms", "verdict"])?;
    for r in rows {
        w.write_record([
            r.param.to_string(),
            r.edges.to_string(),
            r.kappa.to_string(),
            r.fvs.to_string(),
            format!("{:.4}", r.time_ms),
            r.verdict.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
