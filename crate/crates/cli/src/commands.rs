//! Subcommand bodies. Each returns its standard output text and exit code;
//! `main` only parses flags and prints.

use std::path::Path;

use anyhow::{bail, Context};
use serde::Serialize;
use sheafdp_core::engine::{filter_all, EdgeOrder};
use sheafdp_core::{apply_sd, colim, SolverConfig};

use crate::bench::{self, Series};
use crate::gen;
use crate::io::{graph_to_json, to_canonical, GraphJson, Instance};
use crate::report::{self, RunOptions};
use crate::selftest;

pub const EXIT_TOP: i32 = 0;
pub const EXIT_BOTTOM: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

fn read(path: &Path) -> anyhow::Result<Instance> {
    Instance::read(path).with_context(|| format!("{}", path.display()))
}

pub fn decide(path: &Path, options: RunOptions, config: &SolverConfig) -> anyhow::Result<Output> {
    let instance = read(path)?;
    let report = report::run(&instance, options, config)?;
    Ok(Output {
        stdout: to_canonical(&report),
        code: report.exit_code(),
    })
}

pub fn colim_cmd(path: &Path) -> anyhow::Result<Output> {
    let instance = read(path)?;
    Ok(Output::ok(to_canonical(&graph_to_json(
        &colim(&instance.decomposition).total,
    ))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderArg {
    AsGiven,
    LeafToRoot,
    Fixpoint,
}

#[derive(Serialize)]
struct FilterOutput {
    shape: GraphJson,
    bag_sizes: Vec<usize>,
    live_counts: Vec<usize>,
    live: Vec<Vec<usize>>,
}

/// Filters the instance's co-decomposition. `edges` is the arc list for the
/// as-given order (all arcs in index order when absent).
pub fn filter(path: &Path, order: OrderArg, edges: Option<Vec<usize>>) -> anyhow::Result<Output> {
    let instance = read(path)?;
    let c = apply_sd(&instance.problem, &instance.decomposition)?;
    let policy = match (order, edges) {
        (OrderArg::AsGiven, Some(list)) => EdgeOrder::AsGiven(list),
        (OrderArg::AsGiven, None) => EdgeOrder::AsGiven((0..c.shape().ne()).collect()),
        (_, Some(_)) => bail!("--edges only applies to --order as-given"),
        (OrderArg::LeafToRoot, None) => EdgeOrder::LeafToRoot,
        (OrderArg::Fixpoint, None) => EdgeOrder::Fixpoint,
    };
    let f = filter_all(&c, &policy)?;
    Ok(Output::ok(to_canonical(&FilterOutput {
        shape: graph_to_json(f.shape()),
        bag_sizes: f.bag_sizes(),
        live_counts: f.live_counts(),
        live: f.live_sets().to_vec(),
    })))
}

pub fn gen_cmd(params: &gen::Params) -> anyhow::Result<Output> {
    Ok(Output::ok(gen::instance(params)?.to_canonical()))
}

pub fn bench_cmd(series: Series, reps: usize, out: Option<&Path>) -> anyhow::Result<Output> {
    let rows = bench::run(series, reps)?;
    let mut buf = Vec::new();
    bench::write_csv(&rows, &mut buf)?;
    let text = String::from_utf8(buf).expect("csv output is UTF-8");
    match out {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("{}", path.display()))?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(text)),
    }
}

pub fn selftest_cmd(config: &SolverConfig) -> anyhow::Result<Output> {
    let checks = selftest::run(config)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut stdout: String = checks.iter().map(|c| format!("{c}\n")).collect();
    stdout.push_str(&format!(
        "{} passed, {} failed\n",
        checks.len() - failed,
        failed
    ));
    Ok(Output {
        stdout,
        code: if failed == 0 { 0 } else { 1 },
    })
}
