//! Finite generalized ordered types.
//!
//! A carrier of N elements with a strict relation `<` satisfying
//! asymmetry and transitivity, whose derived weak order `≤` is
//! positively antisymmetric. `x ≤ y` holds when everything strictly
//! below x is below y and everything strictly above y is above x; on
//! finite carriers this is `down(x) ⊆ down(y) ∧ up(y) ⊆ up(x)`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitMatrix;

/// The element set: a size plus distinct labels.
///
/// Labels are opaque; all computation is index-based. Size 0 is a
/// legal raw carrier but is rejected when validating an order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    labels: Vec<String>,
}

impl Carrier {
    /// Carrier of `n` elements labeled "e0".."e{n-1}".
    pub fn new(n: usize) -> Self {
        Carrier {
            labels: (0..n).map(|i| format!("e{i}")).collect(),
        }
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self, OrderError> {
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(OrderError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Carrier { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A raw strict relation, prior to any validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictRelation {
    lt: BitMatrix,
}

impl StrictRelation {
    pub fn new(n: usize) -> Self {
        StrictRelation {
            lt: BitMatrix::new(n),
        }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut rel = StrictRelation::new(n);
        for &(i, j) in pairs {
            rel.insert(i, j);
        }
        rel
    }

    pub fn size(&self) -> usize {
        self.lt.size()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.lt.get(i, j)
    }

    pub fn insert(&mut self, i: usize, j: usize) {
        self.lt.set(i, j);
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.lt
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.lt.iter_pairs().collect()
    }

    /// Smallest transitive relation containing this one. Idempotent.
    pub fn transitive_closure(&self) -> StrictRelation {
        let mut lt = self.lt.clone();
        lt.close_transitive();
        StrictRelation { lt }
    }

    /// The derived weak order, defined for any relation:
    /// `leq[i][j] ⇔ down(i) ⊆ down(j) ∧ up(j) ⊆ up(i)`.
    pub fn derived_leq(&self) -> BitMatrix {
        let n = self.size();
        let down = self.lt.transpose();
        let mut leq = BitMatrix::new(n);
        for i in 0..n {
            for j in 0..n {
                if down.row_subset(i, j) && self.lt.row_subset(j, i) {
                    leq.set(i, j);
                }
            }
        }
        leq
    }
}

/// Verdict for a pair of elements of a validated order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Equal,
    LessThan,
    GreaterThan,
    Unordered,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Classification::Equal => "Equal",
            Classification::LessThan => "LessThan",
            Classification::GreaterThan => "GreaterThan",
            Classification::Unordered => "Unordered",
        };
        f.write_str(s)
    }
}

/// Every violation of the three axioms, exhaustively listed and sorted.
///
/// Asymmetry and antisymmetry pairs are normalized to `i ≤ j`;
/// `(i, i)` in `asymmetry_pairs` records a reflexive `i < i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ViolationReport {
    pub asymmetry_pairs: Vec<(usize, usize)>,
    pub transitivity_triples: Vec<(usize, usize, usize)>,
    pub antisymmetry_pairs: Vec<(usize, usize)>,
}

impl ViolationReport {
    pub fn is_empty(&self) -> bool {
        self.asymmetry_pairs.is_empty()
            && self.transitivity_triples.is_empty()
            && self.antisymmetry_pairs.is_empty()
    }
}

/// Check all three axioms against `rel`, antisymmetry via the derived
/// weak order.
pub fn axiom_report(rel: &StrictRelation) -> ViolationReport {
    let n = rel.size();
    let mut report = ViolationReport::default();
    for i in 0..n {
        for j in i..n {
            if rel.get(i, j) && rel.get(j, i) {
                report.asymmetry_pairs.push((i, j));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !rel.get(i, j) {
                continue;
            }
            for k in 0..n {
                if rel.get(j, k) && !rel.get(i, k) {
                    report.transitivity_triples.push((i, j, k));
                }
            }
        }
    }
    let leq = rel.derived_leq();
    for i in 0..n {
        for j in i + 1..n {
            if leq.get(i, j) && leq.get(j, i) {
                report.antisymmetry_pairs.push((i, j));
            }
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderError {
    EmptyCarrier,
    DuplicateLabel(String),
    UnknownLabel(String),
    SizeMismatch { carrier: usize, relation: usize },
    Axioms(ViolationReport),
}

impl fmt::Display for OrderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderError::EmptyCarrier => write!(f, "carrier must have at least one element"),
            OrderError::DuplicateLabel(l) => write!(f, "duplicate label {l:?}"),
            OrderError::UnknownLabel(l) => write!(f, "unknown label {l:?}"),
            OrderError::SizeMismatch { carrier, relation } => write!(
                f,
                "carrier has {carrier} elements but relation is {relation}x{relation}"
            ),
            OrderError::Axioms(r) => write!(
                f,
                "axiom violations: {} asymmetry, {} transitivity, {} antisymmetry",
                r.asymmetry_pairs.len(),
                r.transitivity_triples.len(),
                r.antisymmetry_pairs.len()
            ),
        }
    }
}

impl core::error::Error for OrderError {}

/// A validated finite generalized ordered type.
///
/// Immutable once built; safe to share read-only across threads.
#[derive(Clone, Debug)]
pub struct OrderedType {
    carrier: Carrier,
    lt: BitMatrix,
    down: BitMatrix,
    leq: BitMatrix,
}

impl OrderedType {
    /// Validate `rel` over `carrier`. Fails on an empty carrier, a size
    /// mismatch, or any axiom violation.
    pub fn new(carrier: Carrier, rel: StrictRelation) -> Result<Self, OrderError> {
        if carrier.is_empty() {
            return Err(OrderError::EmptyCarrier);
        }
        if carrier.len() != rel.size() {
            return Err(OrderError::SizeMismatch {
                carrier: carrier.len(),
                relation: rel.size(),
            });
        }
        let report = axiom_report(&rel);
        if !report.is_empty() {
            return Err(OrderError::Axioms(report));
        }
        let leq = rel.derived_leq();
        let down = rel.matrix().transpose();
        Ok(OrderedType {
            carrier,
            lt: rel.lt,
            down,
            leq,
        })
    }

    /// Build from labeled pairs. When `close` is set the relation is
    /// transitively closed before validation; otherwise it is checked
    /// exactly as given.
    pub fn from_labeled_pairs<S: AsRef<str>>(
        carrier: Carrier,
        pairs: &[(S, S)],
        close: bool,
    ) -> Result<Self, OrderError> {
        let rel = relation_from_labels(&carrier, pairs)?;
        let rel = if close { rel.transitive_closure() } else { rel };
        OrderedType::new(carrier, rel)
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn label(&self, i: usize) -> &str {
        self.carrier.label(i)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.lt_matrix().get(i, j)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    pub fn lt_matrix(&self) -> &BitMatrix {
        &self.lt
    }

    pub fn leq_matrix(&self) -> &BitMatrix {
        &self.leq
    }

    pub fn relation(&self) -> StrictRelation {
        StrictRelation {
            lt: self.lt.clone(),
        }
    }

    /// Strict predecessors of element `i`.
    pub fn down_set(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.down.row_indices(i)
    }

    /// Strict successors of element `i`.
    pub fn up_set(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.lt.row_indices(i)
    }

    /// `(|down(i)|, |up(i)|)` — the matcher's pruning key.
    pub fn signature(&self, i: usize) -> (usize, usize) {
        assert!(i < self.size(), "index out of range");
        (self.down.row_count(i), self.lt.row_count(i))
    }

    pub fn classify(&self, i: usize, j: usize) -> Classification {
        assert!(i < self.size() && j < self.size(), "index out of range");
        if i == j {
            Classification::Equal
        } else if self.lt(i, j) {
            Classification::LessThan
        } else if self.lt(j, i) {
            Classification::GreaterThan
        } else {
            Classification::Unordered
        }
    }

    /// Does every element have a strict predecessor and a strict
    /// successor? Always false on a finite nonempty validated order
    /// (maximal elements exist); exposed as a checkable predicate.
    pub fn is_unbounded(&self) -> bool {
        (0..self.size())
            .all(|i| self.down.row_count(i) > 0 && self.lt.row_count(i) > 0)
    }
}

/// Translate labeled pairs into an index relation over `carrier`.
pub fn relation_from_labels<S: AsRef<str>>(
    carrier: &Carrier,
    pairs: &[(S, S)],
) -> Result<StrictRelation, OrderError> {
    let mut rel = StrictRelation::new(carrier.len());
    for (a, b) in pairs {
        let i = carrier
            .index_of(a.as_ref())
            .ok_or_else(|| OrderError::UnknownLabel(a.as_ref().to_string()))?;
        let j = carrier
            .index_of(b.as_ref())
            .ok_or_else(|| OrderError::UnknownLabel(b.as_ref().to_string()))?;
        rel.insert(i, j);
    }
    Ok(rel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    pub(crate) fn chain(n: usize) -> StrictRelation {
        let mut rel = StrictRelation::new(n);
        for i in 0..n {
            for j in i + 1..n {
                rel.insert(i, j);
            }
        }
        rel
    }

    // 0<2, 1<2, 1<3 — four elements shaped like the letter N.
    pub(crate) fn n_poset() -> StrictRelation {
        StrictRelation::from_pairs(4, &[(0, 2), (1, 2), (1, 3)])
    }

    #[test]
    fn closure_adds_forced_composites() {
        let rel = StrictRelation::from_pairs(3, &[(0, 1), (1, 2)]);
        let closed = rel.transitive_closure();
        assert!(closed.get(0, 2));
        assert_eq!(closed.pairs(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn closure_of_empty_is_empty() {
        let rel = StrictRelation::new(3);
        assert_eq!(rel.transitive_closure(), rel);
    }

    #[test]
    fn closure_four_chain() {
        let rel = StrictRelation::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]);
        let closed = rel.transitive_closure();
        let mut expected = rel.clone();
        for (i, j) in [(0, 2), (0, 3), (1, 3)] {
            expected.insert(i, j);
        }
        assert_eq!(closed, expected);
    }

    #[test]
    fn derived_leq_on_three_chain() {
        let leq = chain(3).derived_leq();
        assert!(leq.get(0, 1));
        assert!(!leq.get(1, 0));
    }

    #[test]
    fn derived_leq_vacuous_on_antichain() {
        let leq = StrictRelation::new(2).derived_leq();
        for i in 0..2 {
            for j in 0..2 {
                assert!(leq.get(i, j));
            }
        }
    }

    #[test]
    fn report_empty_for_chain() {
        assert!(axiom_report(&chain(3)).is_empty());
    }

    #[test]
    fn report_flags_antichain_antisymmetry() {
        let report = axiom_report(&StrictRelation::new(2));
        assert_eq!(report.antisymmetry_pairs, vec![(0, 1)]);
        assert!(report.asymmetry_pairs.is_empty());
    }

    #[test]
    fn report_flags_diamond_middle_pair() {
        // 0 below 1 and 2, both below 3: the two middle elements share
        // down = {0} and up = {3}.
        let rel = StrictRelation::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)]);
        let report = axiom_report(&rel);
        assert_eq!(report.antisymmetry_pairs, vec![(1, 2)]);
        assert!(report.asymmetry_pairs.is_empty());
        assert!(report.transitivity_triples.is_empty());
    }

    #[test]
    fn build_order_chain_by_labels() {
        let carrier = Carrier::with_labels(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let o = OrderedType::from_labeled_pairs(carrier, &[("a", "b"), ("b", "c")], true).unwrap();
        assert!(o.lt(0, 2));
        assert_eq!(o.classify(0, 2), Classification::LessThan);
    }

    #[test]
    fn build_order_reports_asymmetry() {
        let carrier = Carrier::with_labels(vec!["a".into(), "b".into()]).unwrap();
        let err =
            OrderedType::from_labeled_pairs(carrier, &[("a", "b"), ("b", "a")], false).unwrap_err();
        match err {
            OrderError::Axioms(r) => assert_eq!(r.asymmetry_pairs, vec![(0, 1)]),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn build_order_rejects_unknown_label() {
        let carrier = Carrier::with_labels(vec!["a".into()]).unwrap();
        let err = OrderedType::from_labeled_pairs(carrier, &[("a", "b")], false).unwrap_err();
        assert_eq!(err, OrderError::UnknownLabel("b".into()));
    }

    #[test]
    fn build_order_rejects_empty_carrier() {
        let err = OrderedType::new(Carrier::new(0), StrictRelation::new(0)).unwrap_err();
        assert_eq!(err, OrderError::EmptyCarrier);
    }

    #[test]
    fn carrier_rejects_duplicate_labels() {
        let err = Carrier::with_labels(vec!["a".into(), "a".into()]).unwrap_err();
        assert_eq!(err, OrderError::DuplicateLabel("a".into()));
    }

    #[test]
    fn n_poset_is_valid() {
        let o = OrderedType::new(Carrier::new(4), n_poset()).unwrap();
        assert_eq!(o.classify(0, 3), Classification::Unordered);
        assert_eq!(o.signature(1), (0, 2));
    }

    #[test]
    fn chain_signatures_and_classification() {
        let o = OrderedType::new(Carrier::new(3), chain(3)).unwrap();
        assert_eq!(o.signature(1), (1, 1));
        assert_eq!(o.signature(0), (0, 2));
        assert_eq!(o.classify(0, 2), Classification::LessThan);
        assert_eq!(o.classify(2, 0), Classification::GreaterThan);
        assert_eq!(o.classify(1, 1), Classification::Equal);
    }

    #[test]
    fn singleton_is_valid_and_bounded() {
        let o = OrderedType::new(Carrier::new(1), StrictRelation::new(1)).unwrap();
        assert!(o.leq(0, 0));
        assert!(!o.is_unbounded());
    }
}
