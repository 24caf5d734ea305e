#![allow(dead_code)]

use gorder_core::{Carrier, OrderedType, Pattern, StrictRelation};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn chain_rel(n: usize) -> StrictRelation {
    let mut rel = StrictRelation::new(n);
    for i in 0..n {
        for j in i + 1..n {
            rel.insert(i, j);
        }
    }
    rel
}

pub fn chain_order(n: usize) -> OrderedType {
    OrderedType::new(Carrier::new(n), chain_rel(n)).unwrap()
}

pub fn n_poset_rel() -> StrictRelation {
    StrictRelation::from_pairs(4, &[(0, 2), (1, 2), (1, 3)])
}

pub fn n_poset() -> OrderedType {
    OrderedType::new(Carrier::new(4), n_poset_rel()).unwrap()
}

pub fn diamond_rel() -> StrictRelation {
    StrictRelation::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)])
}

pub fn chain_pattern(k: usize) -> Pattern {
    Pattern::new(Carrier::new(k), chain_rel(k)).unwrap()
}

pub fn antichain_pattern(k: usize) -> Pattern {
    Pattern::new(Carrier::new(k), StrictRelation::new(k)).unwrap()
}

/// One bottom below two incomparable tops.
pub fn v_pattern() -> Pattern {
    let rel = StrictRelation::from_pairs(3, &[(0, 1), (0, 2)]);
    Pattern::new(Carrier::new(3), rel).unwrap()
}

/// Two incomparable bottoms below one top.
pub fn wedge_pattern() -> Pattern {
    let rel = StrictRelation::from_pairs(3, &[(0, 2), (1, 2)]);
    Pattern::new(Carrier::new(3), rel).unwrap()
}

pub fn small_patterns() -> Vec<(&'static str, Pattern)> {
    vec![
        ("chain1", chain_pattern(1)),
        ("chain2", chain_pattern(2)),
        ("chain3", chain_pattern(3)),
        ("antichain2", antichain_pattern(2)),
        ("antichain3", antichain_pattern(3)),
        ("v", v_pattern()),
        ("wedge", wedge_pattern()),
    ]
}

/// A seeded raw relation: every ordered pair (diagonal included, both
/// directions independent) drawn with probability `p`. Often violates
/// the axioms; that is the point.
pub fn random_relation(seed: u64, n: usize, p: f64) -> StrictRelation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rel = StrictRelation::new(n);
    for i in 0..n {
        for j in 0..n {
            if rng.random_bool(p) {
                rel.insert(i, j);
            }
        }
    }
    rel
}

/// A seeded random relation drawn over index-increasing pairs only and
/// transitively closed; satisfies axioms 1 and 2 by construction,
/// axiom 3 only sometimes.
pub fn random_dag(seed: u64, n: usize, p: f64) -> StrictRelation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rel = StrictRelation::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                rel.insert(i, j);
            }
        }
    }
    rel.transitive_closure()
}
