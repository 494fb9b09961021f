//! Decision runs and their JSON report.

use std::time::Instant;

use serde::Serialize;
use sheafdp_core::engine::{fvs_decide_codecomp, glue_witness, oracle_decide, sheaf_check};
use sheafdp_core::{apply_sd, colim, find_fvs, Error, Result, SolverConfig, Truth};

use crate::io::Instance;

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    /// Chosen section index per bag.
    pub family: Vec<usize>,
    /// The glued section on the colimit, as a vertex map.
    pub vmap: Vec<usize>,
    pub valid: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub verdict: String,
    pub agrees: bool,
    /// Matching family count, absent when the oracle cap was hit.
    pub matching_families: Option<usize>,
    /// Section count on the glued graph, absent when the oracle cap was hit.
    pub global_sections: Option<usize>,
    /// Whether restriction along the cocone is a bijection onto matching
    /// families; absent when the oracle cap was hit.
    pub sheaf_condition: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub verdict: String,
    /// Solution-set size per bag.
    pub bag_kappas: Vec<usize>,
    pub kappa: usize,
    pub fvs: Vec<usize>,
    pub fvs_size: usize,
    pub time_ms: f64,
    pub sigma_runs: usize,
    pub edge_filters: usize,
    pub per_bag_live_counts: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

impl RunReport {
    pub fn answer(&self) -> Truth {
        Truth::of(self.verdict == "top")
    }

    /// 0 for ⊤, 1 for ⊥, 3 when the oracle disagrees.
    pub fn exit_code(&self) -> i32 {
        match &self.oracle {
            Some(o) if !o.agrees => 3,
            _ if self.answer().is_top() => 0,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub witness: bool,
    pub oracle: bool,
}

/// Decides an instance with its declared feedback vertex set (or a computed
/// minimum one).
pub fn run(instance: &Instance, options: RunOptions, config: &SolverConfig) -> Result<RunReport> {
    let (problem, d) = (&instance.problem, &instance.decomposition);
    let fvs = instance.fvs.clone().unwrap_or_else(|| find_fvs(d.shape()));
    let start = Instant::now();
    d.validate()?;
    let c = apply_sd(problem, d)?;
    let verdict = fvs_decide_codecomp(&c, &fvs, config)?;
    let time_ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;

    let witness = match (&verdict.witness, options.witness) {
        (Some(w), true) => {
            let glued = colim(d);
            let vmap = glue_witness(&glued, &c, w);
            let valid = problem.is_section(&glued.total, &vmap);
            Some(WitnessReport {
                family: w.0.clone(),
                vmap,
                valid,
            })
        }
        _ => None,
    };

    let oracle = if options.oracle {
        let truth = oracle_decide(problem, d)?.answer;
        let (matching_families, global_sections, sheaf_condition) =
            match sheaf_check(problem, d, config.oracle_cap) {
                Ok(s) => (
                    Some(s.matching_families),
                    Some(s.global_sections),
                    Some(s.holds()),
                ),
                Err(Error::CapExceeded { .. }) => (None, None, None),
                Err(e) => return Err(e),
            };
        Some(OracleReport {
            verdict: truth.to_string(),
            agrees: truth == verdict.answer,
            matching_families,
            global_sections,
            sheaf_condition,
        })
    } else {
        None
    };

    let bag_kappas = c.bag_sizes();
    Ok(RunReport {
        verdict: verdict.answer.to_string(),
        kappa: bag_kappas.iter().copied().max().unwrap_or(0),
        bag_kappas,
        fvs_size: fvs.len(),
        fvs,
        time_ms,
        sigma_runs: verdict.stats.sigma_runs,
        edge_filters: verdict.stats.edge_filters,
        per_bag_live_counts: verdict.per_bag_live_counts,
        witness,
        oracle,
    })
}
