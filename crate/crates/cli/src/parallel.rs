//! Parallel matcher driver: fan the search out over the first
//! position's candidate roots. Partitions are disjoint, results are
//! merged and globally sorted, so the output never depends on the
//! execution strategy.

use gorder_core::matcher::{match_from_root, root_candidates};
use gorder_core::{match_pattern, MatchResult, OrderedType, Pattern};
use rayon::prelude::*;

pub fn match_pattern_parallel(ground: &OrderedType, pattern: &Pattern) -> MatchResult {
    if pattern.size() == 0 {
        return match_pattern(ground, pattern);
    }
    let embeddings: Vec<_> = root_candidates(ground, pattern)
        .into_par_iter()
        .flat_map_iter(|root| match_from_root(ground, pattern, root))
        .collect();
    MatchResult::from_embeddings(embeddings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{chain_doc, n_poset_doc, validated_random_order};
    use gorder_core::{Carrier, StrictRelation};

    #[test]
    fn parallel_equals_sequential() {
        let grounds = [
            n_poset_doc().to_order(false).unwrap(),
            chain_doc(6).to_order(false).unwrap(),
            validated_random_order(12, 0.25, 7).unwrap(),
        ];
        let patterns = [
            chain_doc(2).to_pattern(false).unwrap(),
            chain_doc(3).to_pattern(false).unwrap(),
            Pattern::new(Carrier::new(0), StrictRelation::new(0)).unwrap(),
        ];
        for o in &grounds {
            for p in &patterns {
                assert_eq!(match_pattern_parallel(o, p), match_pattern(o, p));
            }
        }
    }
}
