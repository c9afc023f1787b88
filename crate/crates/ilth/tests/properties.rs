//! Property tests over randomly generated instances.

mod common;

use common::random_hypergraph;
use ilth::clustering::{tuple_counts, tuple_counts_bruteforce};
use ilth::hgf::{parse_hgf, write_hgf};
use ilth::hypergraph::Hypergraph;
use ilth::motif::{census, census_bruteforce, CensusOptions};
use proptest::prelude::*;

fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (3usize..=5, 0usize..=12, any::<u64>()).prop_map(|(k, m, seed)| {
        let n = k + 2 + (seed % 7) as usize;
        random_hypergraph(k, n, m, seed)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn section_of_step_is_step_of_section(h in arb_hypergraph()) {
        let (h1, _) = h.step();
        prop_assert_eq!(h1.two_section(), h.two_section().clone_step());
    }

    #[test]
    fn multi_section_commutes_through_clone_family(h in arb_hypergraph()) {
        // invariants preserved and clone counts exact for the multi step
        let (h1, lineage) = h.step_multi().unwrap();
        prop_assert!(h1.validate().is_ok());
        let k = h.k();
        prop_assert_eq!(h1.n(), h.n() * k);
        prop_assert_eq!(h1.m(), h.m() * (k * k - k + 1) + h.n());
        for v in 0..h.n() as u32 {
            let clones = lineage
                .vertex_parent
                .iter()
                .zip(&lineage.clone_rank)
                .filter(|&(&p, &r)| p == v && r > 0)
                .count();
            prop_assert_eq!(clones, k - 1);
        }
    }

    #[test]
    fn hgf_round_trips(h in arb_hypergraph()) {
        let text = write_hgf(&h);
        let back = parse_hgf("prop", &text).unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn census_matches_oracle(h in arb_hypergraph()) {
        let opts = CensusOptions { per_cardinality_vector: true, ..CensusOptions::default() };
        let fast = census(&h, &opts).unwrap();
        let brute = census_bruteforce(&h, &opts).unwrap();
        prop_assert_eq!(fast, brute);
    }

    #[test]
    fn tuple_counters_match_oracle(h in arb_hypergraph()) {
        let fast = tuple_counts(&h).unwrap();
        let brute = tuple_counts_bruteforce(&h, 5000).unwrap();
        prop_assert_eq!(fast, brute);
    }

    #[test]
    fn counters_are_relabeling_invariant(h in arb_hypergraph(), salt in any::<u64>()) {
        // permute ids by a random rotation
        let n = h.n() as u32;
        let shift = (salt % n.max(1) as u64) as u32;
        let edges: Vec<Vec<u32>> = h
            .edges()
            .iter()
            .map(|e| e.iter().map(|&v| (v + shift) % n).collect())
            .collect();
        let relabeled = Hypergraph::new(h.k(), h.n(), edges).unwrap();
        let a = census(&h, &CensusOptions::default()).unwrap();
        let b = census(&relabeled, &CensusOptions::default()).unwrap();
        prop_assert_eq!(a.counts, b.counts);
        let ca = tuple_counts(&h).unwrap();
        let cb = tuple_counts(&relabeled).unwrap();
        prop_assert_eq!(ca, cb);
    }

    #[test]
    fn lambda_identity_everywhere(h in arb_hypergraph()) {
        let counts = tuple_counts(&h).unwrap();
        let k = h.k() as u64;
        prop_assert_eq!(
            counts.lambda_count,
            counts.a_count - k * (k - 1) * (k - 2) * h.m() as u64
        );
        prop_assert_eq!(counts.p_histogram[h.k()], h.m() as u64);
        let weighted: u64 = counts
            .p_histogram
            .iter()
            .enumerate()
            .map(|(i, &c)| i as u64 * c)
            .sum();
        prop_assert_eq!(weighted, counts.p_prime);
    }

    #[test]
    fn step_preserves_invariants(h in arb_hypergraph()) {
        let (h1, lineage) = h.step();
        prop_assert!(h1.validate().is_ok());
        // each input edge has exactly k+1 descendants, each vertex exactly 2
        prop_assert_eq!(h1.m(), h.m() * (h.k() + 1));
        prop_assert_eq!(h1.n(), h.n() * 2);
        for (idx, parent) in lineage.edge_parent.iter().enumerate() {
            prop_assert!(parent.is_some(), "edge {} has a parent", idx);
        }
    }
}
