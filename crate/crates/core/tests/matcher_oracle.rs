//! The pruned backtracking matcher against the brute-force oracle,
//! over a seeded corpus of small valid orders.

mod common;

use common::*;
use gorder_core::{
    automorphisms, brute_force_match, enumerate_two_chain, match_pattern, Carrier, OrderedType,
};

fn corpus(max_n: usize) -> Vec<OrderedType> {
    let mut out = vec![chain_order(1), chain_order(3), chain_order(6), n_poset()];
    for seed in 0..120u64 {
        let n = 1 + (seed as usize % max_n);
        let rel = random_dag(seed, n, 0.35);
        if let Ok(o) = OrderedType::new(Carrier::new(n), rel) {
            out.push(o);
        }
    }
    out
}

#[test]
fn matcher_agrees_with_oracle() {
    let mut checked = 0;
    for o in corpus(7) {
        for (name, p) in small_patterns() {
            let fast = match_pattern(&o, &p);
            let slow = brute_force_match(&o, &p);
            assert_eq!(fast, slow, "mismatch on pattern {name}, N={}", o.size());
            checked += 1;
        }
    }
    assert!(checked > 400, "corpus too thin: {checked} cases");
}

#[test]
fn two_chain_specialization() {
    for o in corpus(6) {
        assert_eq!(match_pattern(&o, &chain_pattern(2)), enumerate_two_chain(&o));
    }
}

#[test]
fn counting_identity_over_corpus() {
    for o in corpus(7) {
        for (name, p) in small_patterns() {
            let r = match_pattern(&o, &p);
            let aut = automorphisms(&p).len();
            assert_eq!(
                r.embeddings.len(),
                r.subtypes.len() * aut,
                "counting identity failed for {name}"
            );
        }
    }
}

#[test]
fn outputs_induce_the_pattern() {
    // every returned subtype, restricted under lt_G, is isomorphic to
    // the pattern; re-verified with a fresh bijection search
    for o in corpus(6) {
        for (_, p) in small_patterns() {
            let r = match_pattern(&o, &p);
            for emb in &r.embeddings {
                assert_eq!(emb.map.len(), p.size());
                for a in 0..p.size() {
                    for b in 0..p.size() {
                        assert_eq!(p.lt(a, b), o.lt(emb.map[a], emb.map[b]));
                    }
                }
                // injectivity
                let mut seen = emb.map.clone();
                seen.sort_unstable();
                seen.dedup();
                assert_eq!(seen.len(), emb.map.len());
            }
        }
    }
}

#[test]
fn results_are_repeatable() {
    let o = n_poset();
    for (_, p) in small_patterns() {
        let a = match_pattern(&o, &p);
        let b = match_pattern(&o, &p);
        assert_eq!(a, b);
    }
}
