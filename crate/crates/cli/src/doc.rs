//! The on-disk order document: a single JSON object
//! `{"elements":[…],"lt":[["a","b"],…],"closed":bool}`.
//!
//! Unknown fields are errors. Canonical form keeps elements in input
//! order and sorts the lt pairs; serialization always canonicalizes.

use gorder_core::{Carrier, OrderError, OrderedType, Pattern, StrictRelation};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderDocument {
    pub elements: Vec<String>,
    pub lt: Vec<(String, String)>,
    pub closed: bool,
}

#[derive(Debug, Error)]
pub enum DocError {
    #[error("malformed document: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Order(#[from] OrderError),
}

pub fn parse_order(text: &str) -> Result<OrderDocument, DocError> {
    let doc: OrderDocument = serde_json::from_str(text)?;
    doc.carrier()?;
    doc.relation()?;
    Ok(doc)
}

pub fn serialize_order(doc: &OrderDocument) -> String {
    let mut canon = doc.clone();
    canon.canonicalize();
    let mut out = serde_json::to_string(&canon).expect("document serializes");
    out.push('\n');
    out
}

impl OrderDocument {
    pub fn new(elements: Vec<String>, lt: Vec<(String, String)>, closed: bool) -> Self {
        let mut doc = OrderDocument { elements, lt, closed };
        doc.canonicalize();
        doc
    }

    pub fn canonicalize(&mut self) {
        self.lt.sort();
        self.lt.dedup();
    }

    pub fn carrier(&self) -> Result<Carrier, OrderError> {
        Carrier::with_labels(self.elements.clone())
    }

    pub fn relation(&self) -> Result<StrictRelation, OrderError> {
        gorder_core::order::relation_from_labels(&self.carrier()?, &self.lt)
    }

    /// Validate as a full order; `close` transitively closes first.
    pub fn to_order(&self, close: bool) -> Result<OrderedType, OrderError> {
        let carrier = self.carrier()?;
        let rel = self.relation()?;
        let rel = if close { rel.transitive_closure() } else { rel };
        OrderedType::new(carrier, rel)
    }

    /// Validate as a pattern: asymmetry and transitivity only.
    pub fn to_pattern(&self, close: bool) -> Result<Pattern, OrderError> {
        let carrier = self.carrier()?;
        let rel = self.relation()?;
        let rel = if close { rel.transitive_closure() } else { rel };
        Pattern::new(carrier, rel)
    }

    pub fn from_order(o: &OrderedType) -> Self {
        let labels = o.carrier().labels().to_vec();
        let lt = o
            .relation()
            .pairs()
            .into_iter()
            .map(|(i, j)| (labels[i].clone(), labels[j].clone()))
            .collect();
        OrderDocument::new(labels, lt, true)
    }

    pub fn from_relation(carrier: &Carrier, rel: &StrictRelation, closed: bool) -> Self {
        let labels = carrier.labels().to_vec();
        let lt = rel
            .pairs()
            .into_iter()
            .map(|(i, j)| (labels[i].clone(), labels[j].clone()))
            .collect();
        OrderDocument::new(labels, lt, closed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_three_chain() {
        let text = r#"{"elements":["a","b","c"],"lt":[["a","b"],["b","c"]],"closed":false}"#;
        let doc = parse_order(text).unwrap();
        assert_eq!(doc.elements, vec!["a", "b", "c"]);
        let o = doc.to_order(true).unwrap();
        assert!(o.lt(0, 2));
    }

    #[test]
    fn rejects_duplicate_label() {
        let text = r#"{"elements":["a","a"],"lt":[],"closed":false}"#;
        match parse_order(text).unwrap_err() {
            DocError::Order(OrderError::DuplicateLabel(l)) => assert_eq!(l, "a"),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn rejects_unknown_label_naming_it() {
        let text = r#"{"elements":["a"],"lt":[["a","b"]],"closed":false}"#;
        match parse_order(text).unwrap_err() {
            DocError::Order(OrderError::UnknownLabel(l)) => assert_eq!(l, "b"),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn rejects_unknown_fields() {
        let text = r#"{"elements":["a"],"lt":[],"closed":false,"extra":1}"#;
        assert!(matches!(parse_order(text), Err(DocError::Syntax(_))));
    }

    #[test]
    fn round_trip_is_identity_on_canonical_docs() {
        let doc = OrderDocument::new(
            vec!["b".into(), "a".into()],
            vec![("b".into(), "a".into())],
            false,
        );
        let text = serialize_order(&doc);
        assert_eq!(parse_order(&text).unwrap(), doc);
        assert_eq!(serialize_order(&parse_order(&text).unwrap()), text);
    }
}
