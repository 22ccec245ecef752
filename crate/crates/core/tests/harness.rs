mod common;

use p3conn::harness::{
    canonical_key, check_theorem, dedup_by_isomorphism, enumerate_graphs, graphs_up_to_iso,
    proof_decomposition, random_gnp, random_triangle_free, verify_range, VerifyOptions,
};
use p3conn::{is_p3_connected, Execution, Graph};
use proptest::prelude::*;

use common::{brute_isomorphic, connected_labelled_count, ALL_UNLABELLED, CONNECTED_UNLABELLED};

#[test]
fn connected_labelled_counts_match_recurrence() {
    for n in 1..=6 {
        let count = enumerate_graphs(n, true).unwrap().count() as u64;
        assert_eq!(count, connected_labelled_count(n), "n={n}");
    }
    assert_eq!(connected_labelled_count(4), 38);
}

#[test]
fn dedup_of_labelled_enumeration_matches_known_counts() {
    for n in 1..=6 {
        let all = dedup_by_isomorphism(enumerate_graphs(n, false).unwrap()).unwrap();
        assert_eq!(all.len() as u64, ALL_UNLABELLED[n], "n={n}");
        let connected = dedup_by_isomorphism(enumerate_graphs(n, true).unwrap()).unwrap();
        assert_eq!(connected.len() as u64, CONNECTED_UNLABELLED[n], "n={n}");
    }
}

#[test]
fn vertex_extension_matches_known_counts() {
    for n in 1..=7 {
        assert_eq!(graphs_up_to_iso(n, false).unwrap().len() as u64, ALL_UNLABELLED[n]);
        assert_eq!(graphs_up_to_iso(n, true).unwrap().len() as u64, CONNECTED_UNLABELLED[n]);
    }
}

#[test]
fn representatives_are_pairwise_non_isomorphic() {
    let reps = graphs_up_to_iso(5, false).unwrap();
    for (i, g) in reps.iter().enumerate() {
        for h in &reps[i + 1..] {
            assert!(!brute_isomorphic(g, h));
        }
    }
}

#[test]
fn labelled_and_deduplicated_verification_agree() {
    let labelled = verify_range(&VerifyOptions::up_to(6).connected_only(true)).unwrap();
    let dedup = verify_range(&VerifyOptions::up_to(6).connected_only(true).dedup(true)).unwrap();
    assert!(labelled.passed() && dedup.passed());
    let scanned: Vec<u64> = labelled.per_order.iter().map(|s| s.scanned).collect();
    assert_eq!(scanned, vec![1, 1, 4, 38, 728, 26704]);
    let classes: Vec<u64> = dedup.per_order.iter().map(|s| s.scanned).collect();
    assert_eq!(classes, CONNECTED_UNLABELLED[1..=6].to_vec());
}

#[test]
fn sequential_and_parallel_reports_are_identical() {
    let opts = VerifyOptions::up_to(6);
    let seq = verify_range(&opts.clone().execution(Execution::Sequential)).unwrap();
    let par = verify_range(&opts.execution(Execution::Parallel)).unwrap();
    assert_eq!(seq, par);
}

#[test]
fn fixed_verdicts() {
    let k4 = check_theorem(&Graph::complete(4));
    assert!(!k4.direct && k4.agree);
    assert_eq!(k4.witness.unwrap().members.len(), 2);
    let k23 = check_theorem(&Graph::complete_bipartite(2, 3));
    assert!(k23.direct && k23.fast && k23.class_count == 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_key_is_invariant_under_relabelling(n in 1..=7usize, p in 0.0..=1.0f64, seed in any::<u64>(), perm_seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let g = random_gnp(n, p, seed).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut p3conn::harness::rng_from_seed(perm_seed));
        let h = Graph::from_edges(n, g.edges().iter().map(|e| (perm[e.u()], perm[e.v()]))).unwrap();
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
    }

    #[test]
    fn unconditional_claims_hold(n in 3..=14usize, p in 0.1..=0.9f64, seed in any::<u64>()) {
        let g = random_gnp(n, p, seed).unwrap();
        prop_assume!(g.is_connected());
        let verdict = check_theorem(&g);
        for x in g.vertices() {
            if g.degree(x) + 1 == n {
                continue;
            }
            let d = proof_decomposition(&g, x).unwrap();
            let parts: usize = d.parts.iter().map(|p| p.members.len()).sum();
            prop_assert_eq!(parts, g.degree(x));
            if verdict.fast {
                prop_assert_eq!(d.parts.len(), 1);
            }
            prop_assert_eq!(
                d.arcs.len() + d.dichotomy_failures.len(),
                pair_count(&d)
            );
        }
    }

    #[test]
    fn triangle_free_generator(n in 1..=40usize, p in 0.0..=1.0f64, seed in any::<u64>()) {
        let g = random_triangle_free(n, p, seed).unwrap();
        prop_assert!(common::brute_triangle_free(&g));
        prop_assert_eq!(&g, &random_triangle_free(n, p, seed).unwrap());
        for c in g.components() {
            prop_assert!(is_p3_connected(&g.induced(&c)));
        }
    }
}

/// Number of block pairs taken from two different parts.
fn pair_count(d: &p3conn::harness::ProofDecomposition) -> usize {
    let sizes: Vec<usize> = d.parts.iter().map(|p| p.blocks.len()).collect();
    let mut total = 0;
    for i in 0..sizes.len() {
        for j in i + 1..sizes.len() {
            total += sizes[i] * sizes[j];
        }
    }
    total
}
