//! Golden end-to-end checks on the small instances with known answers.

use std::fmt;

use sheafdp_core::engine::{
    filter_all, fvs_decide_codecomp, limit_sections, naive_decide, oracle_decide, sheaf_check,
    tree_solve, EdgeOrder,
};
use sheafdp_core::{
    apply_sd, decide, find_fvs, fixtures, Graph, ProblemFunctor, Result, SolverConfig, Truth,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        name,
        passed,
        detail,
    }
}

fn colouring(q: usize) -> ProblemFunctor {
    ProblemFunctor::hcoloring(Graph::complete(q)).expect("complete graphs are simple")
}

/// Per-bag conjunction against the real decision on the two-path 5-cycle.
pub fn naive_square(config: &SolverConfig) -> Result<(Truth, Truth)> {
    let d = fixtures::two_paths_five_cycle();
    let naive = naive_decide(&apply_sd(&colouring(2), &d)?);
    let real = decide(&colouring(2), &d, None, config)?.answer;
    Ok((naive, real))
}

pub fn run(config: &SolverConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let two_paths = fixtures::two_paths_five_cycle();
    let cyclic = fixtures::cyclic_decomposition(5, 2)?;

    let (naive, real) = naive_square(config)?;
    out.push(check(
        "two-path 5-cycle, 2-coloring: per-bag conjunction differs from decide",
        naive == Truth::Top && real == Truth::Bottom && naive != real,
        format!("per-bag conjunction = {naive}, decide = {real}"),
    ));

    let v = decide(&colouring(3), &two_paths, None, config)?;
    let check3 = sheaf_check(&colouring(3), &two_paths, config.oracle_cap)?;
    out.push(check(
        "two-path 5-cycle, 3-coloring: decide and sheaf count",
        v.answer == Truth::Top
            && check3.holds()
            && check3.matching_families == 30
            && check3.global_sections == 30,
        format!(
            "decide = {}, matching families = {}, global sections = {}",
            v.answer, check3.matching_families, check3.global_sections
        ),
    ));

    let c = apply_sd(&colouring(2), &cyclic)?;
    let fixpoint = filter_all(&c, &EdgeOrder::Fixpoint)?.live_counts();
    let fvs = find_fvs(cyclic.shape());
    let v = fvs_decide_codecomp(&c, &fvs, config)?;
    out.push(check(
        "cyclic 5-cycle, 2-coloring: filtering is stable but the answer is bottom",
        fixpoint == vec![2; 5] && fvs.len() == 1 && v.answer == Truth::Bottom,
        format!(
            "fixpoint live sizes = {fixpoint:?}, |S| = {}, fvs decide = {}",
            fvs.len(),
            v.answer
        ),
    ));

    let chain = fixtures::equality_chain();
    let one_pass = filter_all(&chain, &EdgeOrder::AsGiven(vec![1, 0, 2]))?.live_counts();
    let (_, tree) = tree_solve(&chain)?;
    let families = limit_sections(&chain, config.oracle_cap)?.len();
    out.push(check(
        "equality chain: one pass in order bc, ab, cd misses the contradiction",
        one_pass.iter().all(|&k| k > 0) && tree.answer == Truth::Bottom && families == 0,
        format!(
            "one-pass live sizes = {one_pass:?}, tree solve = {}, matching families = {families}",
            tree.answer
        ),
    ));

    let oracle = oracle_decide(&colouring(2), &two_paths)?.answer;
    out.push(check(
        "two-path 5-cycle, 2-coloring: glue-then-solve agrees",
        oracle == Truth::Bottom,
        format!("oracle = {oracle}"),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        let checks = run(&SolverConfig::default()).unwrap();
        assert_eq!(checks.len(), 5);
        for c in &checks {
            assert!(c.passed, "{c}");
        }
        assert!(checks[0].to_string().starts_with("PASS "));
    }
}
