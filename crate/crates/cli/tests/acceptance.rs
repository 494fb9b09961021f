//! Acceptance gate. Runs without the libtest harness so every criterion
//! prints its PASS/FAIL line even when the run succeeds; exits non-zero if
//! any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sheafdp_cli::bench::{self, Series};
use sheafdp_cli::gen::{self, Kind, Params, TargetSpec};
use sheafdp_cli::io::ProblemKind;
use sheafdp_cli::selftest;
use sheafdp_core::engine::{
    compute_a, filter_all, fvs_decide_codecomp, limit_sections, naive_decide, oracle_decide,
    sheaf_check, tree_solve, EdgeOrder,
};
use sheafdp_core::finset::FinFn;
use sheafdp_core::problems::AdhesionSolutions;
use sheafdp_core::{
    apply_sd, decide, find_fvs, fixtures, Error, Graph, ProblemFunctor, SolCoDecomp, SolutionSet,
    SolverConfig, Truth,
};

struct Outcome {
    passed: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn colouring(q: usize) -> ProblemFunctor {
    ProblemFunctor::hcoloring(Graph::complete(q)).unwrap()
}

fn two_path_counterexample() -> Outcome {
    let start = Instant::now();
    let d = fixtures::two_paths_five_cycle();
    let c = apply_sd(&colouring(2), &d).unwrap();
    let per_bag: Vec<bool> = (0..c.shape().nv())
        .map(|v| !c.bag_sections(v).is_empty())
        .collect();
    let per_adhesion = !c.adhesion(0).sections.is_empty();
    let naive = naive_decide(&c);
    let real = decide(&colouring(2), &d, None, &SolverConfig::default())
        .unwrap()
        .answer;
    let elapsed = start.elapsed();
    outcome(
        per_bag == [true, true] && per_adhesion && naive == Truth::Top && real == Truth::Bottom
            && elapsed < Duration::from_secs(1),
        format!(
            "bags/adhesion non-empty = {per_bag:?}/{per_adhesion}, conjunction = {naive}, decide = {real}, {:.2} ms",
            elapsed.as_secs_f64() * 1e3
        ),
    )
}

fn cyclic_counterexample() -> Outcome {
    let start = Instant::now();
    let d = fixtures::cyclic_decomposition(5, 2).unwrap();
    let c = apply_sd(&colouring(2), &d).unwrap();
    let fixpoint = filter_all(&c, &EdgeOrder::Fixpoint).unwrap().live_counts();
    let s = find_fvs(d.shape());
    let v = fvs_decide_codecomp(&c, &s, &SolverConfig::default()).unwrap();
    let elapsed = start.elapsed();
    outcome(
        fixpoint == vec![2; 5]
            && s.len() == 1
            && v.answer == Truth::Bottom
            && elapsed < Duration::from_secs(1),
        format!(
            "fixpoint live sizes = {fixpoint:?}, |S| = {}, fvs decide = {}, {:.2} ms",
            s.len(),
            v.answer,
            elapsed.as_secs_f64() * 1e3
        ),
    )
}

fn random_params(rng: &mut ChaCha8Rng, seed: u64, kind: Kind) -> Params {
    let target = match rng.gen_range(0..4) {
        0 => TargetSpec::Complete(2),
        1 => TargetSpec::Complete(3),
        2 => TargetSpec::Complete(4),
        _ => TargetSpec::Random(rng.gen_range(2..=4)),
    };
    let problem = if rng.gen_bool(0.5) {
        ProblemKind::Hcoloring
    } else {
        ProblemKind::ReflHcoloring
    };
    Params {
        kind,
        bags: rng.gen_range(1..=8),
        width: rng.gen_range(1..=5),
        fvs: rng.gen_range(0..=2),
        seed,
        target,
        problem,
    }
}

fn oracle_equivalence() -> Outcome {
    const INSTANCES: u64 = 600;
    let start = Instant::now();
    let config = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    let (mut checked, mut agree, mut non_sheaf, mut non_sheaf_diverge, mut capped, mut max_fvs) =
        (0, 0, 0, 0, 0, 0);
    let mut capped_agree = 0;
    let mut failures = Vec::new();
    for seed in 0..INSTANCES {
        let kind = if seed % 4 == 0 {
            Kind::Tree
        } else {
            Kind::Random
        };
        let params = random_params(&mut rng, seed, kind);
        let inst = gen::instance(&params).unwrap();
        let d = &inst.decomposition;
        max_fvs = max_fvs.max(find_fvs(d.shape()).len());
        let verdict = decide(&inst.problem, d, inst.fvs.as_deref(), &config)
            .unwrap()
            .answer;
        let oracle = oracle_decide(&inst.problem, d).unwrap().answer;
        match sheaf_check(&inst.problem, d, config.oracle_cap) {
            Ok(check) if check.matching_families == check.global_sections => {
                checked += 1;
                if verdict == oracle {
                    agree += 1;
                } else {
                    failures.push(seed);
                }
            }
            Ok(_) => {
                non_sheaf += 1;
                if verdict != oracle {
                    non_sheaf_diverge += 1;
                }
            }
            Err(Error::CapExceeded { .. }) => {
                capped += 1;
                capped_agree += usize::from(verdict == oracle);
            }
            Err(e) => panic!("seed {seed}: {e}"),
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures.is_empty() && checked + non_sheaf + capped == INSTANCES as usize && max_fvs <= 2
            && elapsed < Duration::from_secs(60),
        format!(
            "{INSTANCES} instances, {agree}/{checked} agree where the sheaf count holds (failing seeds {failures:?}); \
             {non_sheaf} fail the sheaf count ({non_sheaf_diverge} of them diverge); {capped} over the oracle cap ({capped_agree} of them agree anyway); \
             max |S| = {max_fvs}; {:.1} s",
            elapsed.as_secs_f64()
        ),
    )
}

fn sheaf_condition_on_trees() -> Outcome {
    const INSTANCES: u64 = 250;
    let config = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eaf);
    let (mut holds, mut families, mut failures) = (0, 0, Vec::new());
    let (mut refl_holds, mut refl_total) = (0, 0);
    for seed in 0..INSTANCES {
        let mut params = random_params(&mut rng, 10_000 + seed, Kind::Tree);
        // desk scale: both sides are enumerated outright
        params.bags = params.bags.min(5);
        params.width = params.width.min(4);
        let inst = gen::instance(&params).unwrap();
        let hcol = ProblemFunctor::hcoloring(inst.problem.target().clone()).unwrap();
        match sheaf_check(&hcol, &inst.decomposition, config.oracle_cap) {
            Ok(check) if check.holds() => {
                holds += 1;
                families += check.matching_families;
            }
            _ => failures.push(seed),
        }
        let refl = ProblemFunctor::refl_hcoloring(inst.problem.target().clone());
        if let Ok(r) = sheaf_check(&refl, &inst.decomposition, config.oracle_cap) {
            refl_total += 1;
            refl_holds += usize::from(r.holds());
        }
    }
    outcome(
        holds == INSTANCES as usize,
        format!(
            "H-coloring: {holds}/{INSTANCES} tree instances with equal counts, matching restrictions and injective \
             restriction ({families} families in total; failing seeds {failures:?}); \
             reflexive H-coloring, informational: {refl_holds}/{refl_total}"
        ),
    )
}

fn random_forest_codecomp(rng: &mut ChaCha8Rng) -> SolCoDecomp {
    let n = rng.gen_range(1..=7);
    let mut arcs = Vec::new();
    for v in 1..n {
        if rng.gen_bool(0.8) {
            let p = rng.gen_range(0..v);
            arcs.push(if rng.gen_bool(0.5) { (p, v) } else { (v, p) });
        }
    }
    let shape = Graph::from_arcs(n, &arcs).unwrap();
    let sizes: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=20)).collect();
    let adhesions = arcs
        .iter()
        .map(|&(x, y)| {
            let m = rng.gen_range(3..=12);
            let mut map =
                |k: usize| FinFn::new((0..k).map(|_| rng.gen_range(0..m)).collect(), m).unwrap();
            let (rho_x, rho_y) = (map(sizes[x]), map(sizes[y]));
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

fn tree_solve_matches_reference() -> Outcome {
    const INSTANCES: usize = 250;
    let config = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ee5);
    let (mut equal, mut max_kappa, mut bottoms, mut failures) = (0, 0, 0, Vec::new());
    for i in 0..INSTANCES {
        let c = random_forest_codecomp(&mut rng);
        max_kappa = max_kappa.max(c.kappa());
        let (a, verdict) = tree_solve(&c).unwrap();
        let reference = compute_a(&c, config.oracle_cap).unwrap();
        bottoms += usize::from(verdict.answer == Truth::Bottom);
        if a.live_sets() == reference.live_sets() {
            equal += 1;
        } else {
            failures.push(i);
        }
    }
    outcome(
        equal == INSTANCES && max_kappa <= 20,
        format!(
            "{equal}/{INSTANCES} forest co-decompositions equal bag for bag (max κ = {max_kappa}, {bottoms} bottom; \
             failing {failures:?})"
        ),
    )
}

/// Coefficient of determination of the least-squares line through the points.
fn linear_r2(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if syy == 0.0 {
        return 1.0;
    }
    sxy * sxy / (sxx * syy)
}

fn scaling() -> Outcome {
    const REPS: usize = 9;
    let edges = bench::run(Series::Edges, REPS).unwrap();
    let xs: Vec<f64> = edges.iter().map(|r| r.edges as f64).collect();
    let ys: Vec<f64> = edges.iter().map(|r| r.time_ms).collect();
    let r2 = linear_r2(&xs, &ys);
    let fixed = edges.iter().all(|r| r.kappa == 6 && r.fvs == 1)
        && xs == [50.0, 100.0, 200.0, 400.0, 800.0];

    let fvs = bench::run(Series::Fvs, REPS).unwrap();
    let kappa = fvs[0].kappa as f64;
    let ratios: Vec<f64> = fvs
        .windows(2)
        .map(|w| w[1].time_ms / w[0].time_ms)
        .collect();
    let c = ratios.iter().fold(0.0f64, |m, r| m.max(r / kappa));
    let sweep = fvs.iter().map(|r| r.fvs).collect::<Vec<_>>() == [0, 1, 2]
        && fvs.iter().all(|r| r.kappa == fvs[0].kappa);

    let fmt = |rows: &[bench::Row]| {
        rows.iter()
            .map(|r| format!("{:.3}", r.time_ms))
            .collect::<Vec<_>>()
            .join(", ")
    };
    outcome(
        fixed && r2 >= 0.95 && sweep && c <= 4.0,
        format!(
            "edges series ms [{}] over |EG| {xs:?}: R² = {r2:.4}; fvs series ms [{}] at κ = {kappa}: \
             ratios {ratios:.2?}, c = {c:.2}",
            fmt(&edges),
            fmt(&fvs)
        ),
    )
}

fn selftest_square() -> Outcome {
    let config = SolverConfig::default();
    let (naive, real) = selftest::naive_square(&config).unwrap();
    let checks = selftest::run(&config).unwrap();
    let all = checks.iter().all(|c| c.passed);
    outcome(
        naive == Truth::Top && real == Truth::Bottom && naive != real && all,
        format!(
            "per-bag conjunction = {naive}, decide = {real}; self-test {}/{} checks pass",
            checks.iter().filter(|c| c.passed).count(),
            checks.len()
        ),
    )
}

fn chain_counterexample() -> Outcome {
    let chain = fixtures::equality_chain();
    let one_pass = filter_all(&chain, &EdgeOrder::AsGiven(vec![1, 0, 2]))
        .unwrap()
        .live_counts();
    let (_, tree) = tree_solve(&chain).unwrap();
    let families = limit_sections(&chain, SolverConfig::default().oracle_cap).unwrap();
    let oracle = Truth::of(!families.is_empty());
    outcome(
        one_pass.iter().all(|&k| k > 0) && tree.answer == Truth::Bottom && oracle == Truth::Bottom,
        format!(
            "one pass (bc, ab, cd) live sizes = {one_pass:?}; tree solve = {}; oracle = {oracle}",
            tree.answer
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 two-path 5-cycle counterexample", two_path_counterexample),
        ("2 cyclic 5-cycle counterexample", cyclic_counterexample),
        ("3 oracle equivalence", oracle_equivalence),
        ("4 sheaf condition on trees", sheaf_condition_on_trees),
        (
            "5 tree solve equals the A-functor",
            tree_solve_matches_reference,
        ),
        ("6 scaling shape", scaling),
        ("7 naive lifted square fails", selftest_square),
        ("8 edge order counterexample", chain_counterexample),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let o = run();
        println!(
            "{} [{name}] {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += usize::from(!o.passed);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
