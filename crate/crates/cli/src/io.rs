//! JSON instance files.
//!
//! Graphs are `{"nv","src","tgt"}`, homomorphisms `{"vmap","emap"}`, and a
//! decomposition lists its adhesions in shape-arc order, each repeating the
//! arc it spans. Canonical output is compact JSON with a trailing newline, so
//! parsing and re-serializing a canonical file reproduces it byte for byte.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sheafdp_core::decomp::is_fvs;
use sheafdp_core::error::Leg;
use sheafdp_core::{
    AdhesionSpan, Error, FinFn, Graph, GraphHom, ProblemFunctor, StructuredDecomposition,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub nv: usize,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomJson {
    pub vmap: Vec<usize>,
    pub emap: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdhesionJson {
    pub edge: [usize; 2],
    pub apex: GraphJson,
    pub leg_x: HomJson,
    pub leg_y: HomJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionJson {
    pub shape: GraphJson,
    pub bags: Vec<GraphJson>,
    pub adhesions: Vec<AdhesionJson>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProblemKind {
    Hcoloring,
    ReflHcoloring,
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProblemKind::Hcoloring => "hcoloring",
            ProblemKind::ReflHcoloring => "refl_hcoloring",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemJson {
    pub kind: ProblemKind,
    pub target: GraphJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceJson {
    pub problem: ProblemJson,
    pub decomposition: DecompositionJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fvs: Option<Vec<usize>>,
}

/// A parsed and validated instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub problem: ProblemFunctor,
    pub decomposition: StructuredDecomposition,
    pub fvs: Option<Vec<usize>>,
}

/// Why an instance file was rejected, with the position of the offending
/// value: a line and column for malformed JSON, a field path otherwise.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{at}: {error}")]
    Invalid { at: String, error: Error },
}

fn invalid(at: impl Into<String>, error: Error) -> InputError {
    InputError::Invalid {
        at: at.into(),
        error,
    }
}

pub fn graph_from_json(g: &GraphJson, at: &str) -> Result<Graph, InputError> {
    Graph::new(g.nv, g.src.clone(), g.tgt.clone()).map_err(|e| invalid(at, e))
}

pub fn graph_to_json(g: &Graph) -> GraphJson {
    GraphJson {
        nv: g.nv(),
        src: g.src().to_vec(),
        tgt: g.tgt().to_vec(),
    }
}

fn table(values: &[usize], cod: usize, at: &str) -> Result<FinFn, InputError> {
    FinFn::new(values.to_vec(), cod).map_err(|e| match e {
        Error::TableOutOfRange { index, .. } => invalid(format!("{at}[{index}]"), e),
        other => invalid(at, other),
    })
}

fn hom_from_json(h: &HomJson, cod: &Graph, at: &str) -> Result<GraphHom, InputError> {
    Ok(GraphHom::new(
        table(&h.vmap, cod.nv(), &format!("{at}.vmap"))?,
        table(&h.emap, cod.ne(), &format!("{at}.emap"))?,
    ))
}

pub fn hom_to_json(h: &GraphHom) -> HomJson {
    HomJson {
        vmap: h.vmap.table().to_vec(),
        emap: h.emap.table().to_vec(),
    }
}

pub fn decomposition_from_json(
    d: &DecompositionJson,
) -> Result<StructuredDecomposition, InputError> {
    const AT: &str = "decomposition";
    let shape = graph_from_json(&d.shape, "decomposition.shape")?;
    sheafdp_core::decomp::validate_shape(&shape).map_err(|e| invalid("decomposition.shape", e))?;
    if d.bags.len() != shape.nv() {
        let msg = format!(
            "shape has {} vertices but {} bags were given",
            shape.nv(),
            d.bags.len()
        );
        return Err(invalid("decomposition.bags", Error::Mismatch(msg)));
    }
    if d.adhesions.len() != shape.ne() {
        let msg = format!(
            "shape has {} arcs but {} adhesions were given",
            shape.ne(),
            d.adhesions.len()
        );
        return Err(invalid("decomposition.adhesions", Error::Mismatch(msg)));
    }
    let bags = d
        .bags
        .iter()
        .enumerate()
        .map(|(v, b)| graph_from_json(b, &format!("{AT}.bags[{v}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let mut adhesions = Vec::with_capacity(d.adhesions.len());
    for (e, a) in d.adhesions.iter().enumerate() {
        let at = format!("{AT}.adhesions[{e}]");
        let (x, y) = shape.arc(e);
        if a.edge != [x, y] {
            let msg = format!(
                "adhesion spans {:?} but shape arc {e} is [{x}, {y}]",
                a.edge
            );
            return Err(invalid(format!("{at}.edge"), Error::Mismatch(msg)));
        }
        let apex = graph_from_json(&a.apex, &format!("{at}.apex"))?;
        let leg_x = hom_from_json(&a.leg_x, &bags[x], &format!("{at}.leg_x"))?;
        let leg_y = hom_from_json(&a.leg_y, &bags[y], &format!("{at}.leg_y"))?;
        adhesions.push(AdhesionSpan::new(apex, leg_x, leg_y));
    }
    StructuredDecomposition::new(shape, bags, adhesions).map_err(|e| match e {
        Error::LegNaturality { arc, leg, apex_arc } => {
            invalid(format!("{AT}.adhesions[{arc}].{leg}.emap[{apex_arc}]"), e)
        }
        Error::NonMonicLeg { arc, leg } => invalid(format!("{AT}.adhesions[{arc}].{leg}"), e),
        other => invalid(AT, other),
    })
}

pub fn decomposition_to_json(d: &StructuredDecomposition) -> DecompositionJson {
    DecompositionJson {
        shape: graph_to_json(d.shape()),
        bags: d.bags().iter().map(graph_to_json).collect(),
        adhesions: d
            .adhesions()
            .iter()
            .zip(d.shape().arcs())
            .map(|(span, (x, y))| AdhesionJson {
                edge: [x, y],
                apex: graph_to_json(&span.apex),
                leg_x: hom_to_json(span.leg(Leg::X)),
                leg_y: hom_to_json(span.leg(Leg::Y)),
            })
            .collect(),
    }
}

pub fn problem_from_json(p: &ProblemJson) -> Result<ProblemFunctor, InputError> {
    let target = graph_from_json(&p.target, "problem.target")?;
    match p.kind {
        ProblemKind::Hcoloring => {
            ProblemFunctor::hcoloring(target).map_err(|e| invalid("problem.target", e))
        }
        ProblemKind::ReflHcoloring => Ok(ProblemFunctor::refl_hcoloring(target)),
    }
}

pub fn problem_to_json(p: &ProblemFunctor) -> ProblemJson {
    let kind = match p {
        ProblemFunctor::HColoring(_) => ProblemKind::Hcoloring,
        ProblemFunctor::ReflHColoring(_) => ProblemKind::ReflHcoloring,
    };
    ProblemJson {
        kind,
        target: graph_to_json(p.target()),
    }
}

impl Instance {
    pub fn from_json(doc: &InstanceJson) -> Result<Self, InputError> {
        let problem = problem_from_json(&doc.problem)?;
        let decomposition = decomposition_from_json(&doc.decomposition)?;
        if let Some(s) = &doc.fvs {
            if !is_fvs(decomposition.shape(), s) {
                return Err(invalid("fvs", Error::NotFvs(s.clone())));
            }
        }
        Ok(Instance {
            problem,
            decomposition,
            fvs: doc.fvs.clone(),
        })
    }

    pub fn to_json(&self) -> InstanceJson {
        InstanceJson {
            problem: problem_to_json(&self.problem),
            decomposition: decomposition_to_json(&self.decomposition),
            fvs: self.fvs.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, InputError> {
        let doc: InstanceJson = serde_json::from_str(text).map_err(|e| InputError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Self::from_json(&doc)
    }

    pub fn read(path: &Path) -> Result<Self, InputError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Canonical serialization.
    pub fn to_canonical(&self) -> String {
        to_canonical(&self.to_json())
    }
}

/// Compact JSON plus a trailing newline.
pub fn to_canonical<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}
