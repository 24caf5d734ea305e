//! Enumeration of all subtypes of a ground order isomorphic to a
//! pattern.
//!
//! The two-chain case scans all N² pairs and dispatches on the pair
//! classification. The general case is pruned backtracking: pattern
//! positions are assigned most-constrained-first, candidates are
//! filtered by (|down|, |up|) signature dominance and adjacency
//! consistency with everything already assigned. A brute-force
//! enumeration over all injective maps serves as the independent
//! oracle.
//!
//! Patterns need only asymmetry and transitivity: an induced suborder
//! of a valid order can fail positive antisymmetry standalone, because
//! the derived `≤` quantifies over the ambient carrier.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitMatrix;
use crate::fin::product_unindex;
use crate::order::{
    axiom_report, Carrier, Classification, OrderError, OrderedType, StrictRelation,
};

/// A finite pattern: asymmetric and transitive, axiom 3 not required.
#[derive(Clone, Debug)]
pub struct Pattern {
    carrier: Carrier,
    lt: BitMatrix,
    down: BitMatrix,
}

impl Pattern {
    pub fn new(carrier: Carrier, rel: StrictRelation) -> Result<Self, OrderError> {
        if carrier.len() != rel.size() {
            return Err(OrderError::SizeMismatch {
                carrier: carrier.len(),
                relation: rel.size(),
            });
        }
        let mut report = axiom_report(&rel);
        report.antisymmetry_pairs.clear();
        if !report.is_empty() {
            return Err(OrderError::Axioms(report));
        }
        let down = rel.matrix().transpose();
        Ok(Pattern {
            carrier,
            lt: rel.matrix().clone(),
            down,
        })
    }

    pub fn from_order(o: &OrderedType) -> Self {
        Pattern {
            carrier: o.carrier().clone(),
            lt: o.lt_matrix().clone(),
            down: o.lt_matrix().transpose(),
        }
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn lt(&self, p: usize, q: usize) -> bool {
        self.lt.get(p, q)
    }

    pub fn signature(&self, p: usize) -> (usize, usize) {
        (self.down.row_count(p), self.lt.row_count(p))
    }
}

/// An injective map from pattern positions to ground indices that
/// preserves and reflects `<`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Embedding {
    pub map: Vec<usize>,
}

/// Deterministic enumeration output: embeddings sorted by map, subtype
/// element sets deduplicated and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchResult {
    pub embeddings: Vec<Embedding>,
    pub subtypes: Vec<Vec<usize>>,
}

impl MatchResult {
    pub fn from_embeddings(mut embeddings: Vec<Embedding>) -> Self {
        embeddings.sort();
        embeddings.dedup();
        let subtypes: BTreeSet<Vec<usize>> = embeddings
            .iter()
            .map(|e| {
                let mut set = e.map.clone();
                set.sort_unstable();
                set
            })
            .collect();
        MatchResult {
            embeddings,
            subtypes: subtypes.into_iter().collect(),
        }
    }
}

// Ground side of a search: a strict-order matrix plus per-element
// (|down|, |up|) signatures.
struct GroundView<'a> {
    lt: &'a BitMatrix,
    sig: Vec<(usize, usize)>,
}

impl<'a> GroundView<'a> {
    fn new(lt: &'a BitMatrix) -> Self {
        let down = lt.transpose();
        let sig = (0..lt.size())
            .map(|i| (down.row_count(i), lt.row_count(i)))
            .collect();
        GroundView { lt, sig }
    }
}

/// Static assignment order: pattern positions by decreasing
/// |down|+|up|, ties by index. Performance-only; any order is correct.
pub fn search_order(pattern: &Pattern) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pattern.size()).collect();
    order.sort_by_key(|&p| {
        let (d, u) = pattern.signature(p);
        (usize::MAX - (d + u), p)
    });
    order
}

fn admissible(
    ground: &GroundView<'_>,
    pattern: &Pattern,
    order: &[usize],
    map: &[usize],
    depth: usize,
    pos: usize,
    cand: usize,
) -> bool {
    let (pd, pu) = pattern.signature(pos);
    if ground.sig[cand].0 < pd || ground.sig[cand].1 < pu {
        return false;
    }
    order[..depth].iter().all(|&q| {
        pattern.lt(pos, q) == ground.lt.get(cand, map[q])
            && pattern.lt(q, pos) == ground.lt.get(map[q], cand)
    })
}

fn extend(
    ground: &GroundView<'_>,
    pattern: &Pattern,
    order: &[usize],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    depth: usize,
    out: &mut Vec<Embedding>,
) {
    if depth == order.len() {
        out.push(Embedding { map: map.clone() });
        return;
    }
    let pos = order[depth];
    for cand in 0..ground.lt.size() {
        if used[cand] || !admissible(ground, pattern, order, map, depth, pos, cand) {
            continue;
        }
        map[pos] = cand;
        used[cand] = true;
        extend(ground, pattern, order, map, used, depth + 1, out);
        used[cand] = false;
    }
}

fn search(ground: &GroundView<'_>, pattern: &Pattern, root: Option<usize>) -> Vec<Embedding> {
    let k = pattern.size();
    if k == 0 {
        return vec![Embedding { map: Vec::new() }];
    }
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; ground.lt.size()];
    let mut out = Vec::new();
    match root {
        Some(cand) => {
            if cand < ground.lt.size()
                && admissible(ground, pattern, &order, &map, 0, order[0], cand)
            {
                map[order[0]] = cand;
                used[cand] = true;
                extend(ground, pattern, &order, &mut map, &mut used, 1, &mut out);
            }
        }
        None => extend(ground, pattern, &order, &mut map, &mut used, 0, &mut out),
    }
    out
}

/// Ground elements the first search position may map to. Partitioning
/// the enumeration over these roots is exhaustive and disjoint, which
/// is what a parallel driver fans out over.
pub fn root_candidates(ground: &OrderedType, pattern: &Pattern) -> Vec<usize> {
    if pattern.size() == 0 {
        return Vec::new();
    }
    let view = GroundView::new(ground.lt_matrix());
    let order = search_order(pattern);
    let map = vec![usize::MAX; pattern.size()];
    (0..ground.size())
        .filter(|&c| admissible(&view, pattern, &order, &map, 0, order[0], c))
        .collect()
}

/// All embeddings whose first search position maps to `root`.
pub fn match_from_root(ground: &OrderedType, pattern: &Pattern, root: usize) -> Vec<Embedding> {
    if pattern.size() == 0 {
        return Vec::new();
    }
    let view = GroundView::new(ground.lt_matrix());
    search(&view, pattern, Some(root))
}

/// Enumerate every subtype of `ground` isomorphic to `pattern`.
///
/// An oversized pattern yields an empty result. The empty pattern
/// yields the unique vacuous embedding and the empty subtype.
pub fn match_pattern(ground: &OrderedType, pattern: &Pattern) -> MatchResult {
    let view = GroundView::new(ground.lt_matrix());
    MatchResult::from_embeddings(search(&view, pattern, None))
}

/// The literal two-chain enumeration: scan all N² pairs by flat
/// product index and dispatch on the classification.
pub fn enumerate_two_chain(ground: &OrderedType) -> MatchResult {
    let n = ground.size();
    let mut embeddings = Vec::new();
    for flat in 0..n * n {
        let p = product_unindex(flat, n, n).expect("flat index in range");
        let (i, j) = (p.first, p.second);
        match ground.classify(i, j) {
            Classification::Equal | Classification::Unordered => {}
            Classification::LessThan => embeddings.push(Embedding { map: vec![i, j] }),
            Classification::GreaterThan => embeddings.push(Embedding { map: vec![j, i] }),
        }
    }
    MatchResult::from_embeddings(embeddings)
}

/// Independent oracle: try every injective map from pattern positions
/// to ground indices and keep those satisfying the full isomorphism
/// condition. No pruning, no shared code with the backtracking path.
pub fn brute_force_match(ground: &OrderedType, pattern: &Pattern) -> MatchResult {
    fn all_injections(n: usize, k: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == k {
            out.push(chosen.clone());
            return;
        }
        for c in 0..n {
            if !chosen.contains(&c) {
                chosen.push(c);
                all_injections(n, k, chosen, out);
                chosen.pop();
            }
        }
    }

    let (n, k) = (ground.size(), pattern.size());
    let mut maps = Vec::new();
    all_injections(n, k, &mut Vec::new(), &mut maps);
    let embeddings = maps
        .into_iter()
        .filter(|map| {
            (0..k).all(|p| {
                (0..k).all(|q| pattern.lt(p, q) == ground.lt(map[p], map[q]))
            })
        })
        .map(|map| Embedding { map })
        .collect();
    MatchResult::from_embeddings(embeddings)
}

/// Order automorphisms of the pattern, identity included. With equal
/// carrier sizes every injection is a bijection, so this is the
/// pattern matched against its own relation.
pub fn automorphisms(pattern: &Pattern) -> Vec<Embedding> {
    let view = GroundView::new(&pattern.lt);
    search(&view, pattern, None)
}
