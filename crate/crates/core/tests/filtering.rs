mod common;

use common::{codecomp, is_subset, shape};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sheafdp_core::engine::{
    compute_a, filter_all, filter_edge, fvs_decide_codecomp, limit_sections, tree_solve, EdgeOrder,
    DEFAULT_ORACLE_CAP,
};
use sheafdp_core::{find_fvs, SolCoDecomp, SolverConfig, Truth};

fn instance(seed: u64, forest: bool) -> SolCoDecomp {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 1 + (seed % 7) as usize;
    let chords = if forest { 0 } else { 3 };
    let s = shape(&mut rng, n, 0.85, chords);
    codecomp(&mut rng, s, 4, 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn filter_edge_shrinks_keeps_limit_and_is_idempotent(seed in any::<u64>(), forest in any::<bool>()) {
        let c = instance(seed, forest);
        let families = limit_sections(&c, DEFAULT_ORACLE_CAP).unwrap();
        for e in 0..c.shape().ne() {
            let f = filter_edge(&c, e).unwrap();
            for v in 0..c.shape().nv() {
                prop_assert!(is_subset(f.live(v), c.live(v)));
            }
            prop_assert_eq!(&limit_sections(&f, DEFAULT_ORACLE_CAP).unwrap(), &families);
            prop_assert_eq!(filter_edge(&f, e).unwrap(), f);
        }
    }

    #[test]
    fn global_sections_survive_the_fixpoint(seed in any::<u64>()) {
        let c = instance(seed, false);
        let a = compute_a(&c, DEFAULT_ORACLE_CAP).unwrap();
        let fix = filter_all(&c, &EdgeOrder::Fixpoint).unwrap();
        for v in 0..c.shape().nv() {
            prop_assert!(is_subset(a.live(v), fix.live(v)));
        }
    }

    #[test]
    fn tree_solve_is_the_a_functor(seed in any::<u64>()) {
        let c = instance(seed, true);
        let (a, verdict) = tree_solve(&c).unwrap();
        prop_assert_eq!(&a, &compute_a(&c, DEFAULT_ORACLE_CAP).unwrap());
        let families = limit_sections(&c, DEFAULT_ORACLE_CAP).unwrap();
        prop_assert_eq!(verdict.answer, Truth::of(!families.is_empty()));
        if let Some(w) = verdict.witness {
            prop_assert!(families.binary_search(&w).is_ok());
        }
    }

    #[test]
    fn fvs_decide_matches_the_limit(seed in any::<u64>()) {
        let c = instance(seed, false);
        let fvs = find_fvs(c.shape());
        let verdict = fvs_decide_codecomp(&c, &fvs, &SolverConfig::default()).unwrap();
        let families = limit_sections(&c, DEFAULT_ORACLE_CAP).unwrap();
        prop_assert_eq!(verdict.answer, Truth::of(!families.is_empty()));
        match verdict.witness {
            Some(w) => prop_assert!(families.binary_search(&w).is_ok()),
            None => prop_assert!(families.is_empty()),
        }
        // any larger feedback vertex set decides the same way
        let all: Vec<usize> = (0..c.shape().nv()).collect();
        let wide = fvs_decide_codecomp(&c, &all, &SolverConfig::default()).unwrap();
        prop_assert_eq!(wide.answer, verdict.answer);
    }

    #[test]
    fn live_subsets_only_shrink_under_every_policy(seed in any::<u64>()) {
        let c = instance(seed, true);
        let mut order: Vec<usize> = (0..c.shape().ne()).rev().collect();
        let k = seed as usize % order.len().max(1);
        order.rotate_left(k);
        for policy in [EdgeOrder::AsGiven(order), EdgeOrder::LeafToRoot, EdgeOrder::Fixpoint] {
            let f = filter_all(&c, &policy).unwrap();
            for v in 0..c.shape().nv() {
                prop_assert!(is_subset(f.live(v), c.live(v)));
            }
        }
    }
}

#[test]
fn larger_forests_agree_with_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..100 {
        let s = shape(&mut rng, 6, 0.8, 0);
        let c = codecomp(&mut rng, s, 12, 6);
        let (a, _) = tree_solve(&c).unwrap();
        assert_eq!(a, compute_a(&c, DEFAULT_ORACLE_CAP).unwrap());
    }
}
