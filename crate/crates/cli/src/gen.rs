//! Instance generators behind `gorder generate`.
//!
//! Fixed shapes are emitted as-is (the 2-antichain is deliberately an
//! invalid fixture). The random generator rejects and retries on axiom
//! failures instead of repairing, so the accepted distribution is the
//! plain conditional one. Sum and product combinators validate their
//! output and hand back the violation report when it is nonempty.

use gorder_core::order::axiom_report;
use gorder_core::{Carrier, OrderedType, StrictRelation, ViolationReport};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::doc::OrderDocument;

pub const MAX_RANDOM_ATTEMPTS: u64 = 64;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("no valid order found after {attempts} attempts (n={n}, p={p})")]
    RetryExhausted { attempts: u64, n: usize, p: f64 },
    #[error(transparent)]
    Order(#[from] gorder_core::OrderError),
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

pub fn chain_doc(n: usize) -> OrderDocument {
    let labels = default_labels(n);
    let mut lt = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            lt.push((labels[i].clone(), labels[j].clone()));
        }
    }
    OrderDocument::new(labels, lt, true)
}

pub fn antichain_doc(n: usize) -> OrderDocument {
    OrderDocument::new(default_labels(n), Vec::new(), true)
}

/// Four elements 0,1,2,3 with 0<2, 1<2, 1<3.
pub fn n_poset_doc() -> OrderDocument {
    let labels: Vec<String> = (0..4).map(|i| i.to_string()).collect();
    let lt = [(0, 2), (1, 2), (1, 3)]
        .into_iter()
        .map(|(i, j): (usize, usize)| (labels[i].clone(), labels[j].clone()))
        .collect();
    OrderDocument::new(labels, lt, true)
}

/// Draw each index-increasing pair with probability `p`, close
/// transitively, validate; retry with the next seed on rejection.
/// Returns the document, the seed that succeeded, and the attempt
/// count. Bit-reproducible for a fixed seed.
pub fn random_doc(n: usize, p: f64, seed: u64) -> Result<(OrderDocument, u64, u64), GenError> {
    for attempt in 0..MAX_RANDOM_ATTEMPTS {
        let seed_used = seed.wrapping_add(attempt);
        let mut rng = ChaCha8Rng::seed_from_u64(seed_used);
        let mut rel = StrictRelation::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(p) {
                    rel.insert(i, j);
                }
            }
        }
        let rel = rel.transitive_closure();
        if axiom_report(&rel).is_empty() && n > 0 {
            let carrier = Carrier::new(n);
            return Ok((
                OrderDocument::from_relation(&carrier, &rel, true),
                seed_used,
                attempt + 1,
            ));
        }
    }
    Err(GenError::RetryExhausted {
        attempts: MAX_RANDOM_ATTEMPTS,
        n,
        p,
    })
}

pub fn funcspace_doc(x_size: usize, y_min: i64, y_max: i64) -> OrderDocument {
    let cfg = gorder_core::funcspace::FuncSpaceConfig::new(x_size, y_min, y_max);
    let (carrier, rel) = gorder_core::funcspace::build_funcspace(cfg);
    OrderDocument::from_relation(&carrier, &rel, true)
}

fn disjoint_union_labels(a: &OrderDocument, b: &OrderDocument) -> (Vec<String>, Vec<String>) {
    let collides = a.elements.iter().any(|l| b.elements.contains(l));
    if collides {
        (
            a.elements.iter().map(|l| format!("l.{l}")).collect(),
            b.elements.iter().map(|l| format!("r.{l}")).collect(),
        )
    } else {
        (a.elements.clone(), b.elements.clone())
    }
}

/// Side-by-side sum: left elements first, right elements after, no
/// cross pairs. Colliding labels get an `l.`/`r.` prefix.
pub fn sum_doc(
    a: &OrderDocument,
    b: &OrderDocument,
) -> Result<(OrderDocument, ViolationReport), GenError> {
    let (left, right) = disjoint_union_labels(a, b);
    let rename = |labels: &[String], renamed: &[String], pair: &(String, String)| {
        let i = labels.iter().position(|l| *l == pair.0).unwrap();
        let j = labels.iter().position(|l| *l == pair.1).unwrap();
        (renamed[i].clone(), renamed[j].clone())
    };
    let mut lt: Vec<(String, String)> = a
        .lt
        .iter()
        .map(|p| rename(&a.elements, &left, p))
        .collect();
    lt.extend(b.lt.iter().map(|p| rename(&b.elements, &right, p)));
    let mut elements = left;
    elements.extend(right);
    let doc = OrderDocument::new(elements, lt, a.closed && b.closed);
    let report = axiom_report(&doc.relation()?);
    Ok((doc, report))
}

/// Componentwise product order on pairs: strictly below in at least
/// one coordinate and weakly below (derived ≤) in both. A convenience
/// test-instance factory, not an operation taken from the components.
pub fn product_doc(
    a: &OrderDocument,
    b: &OrderDocument,
) -> Result<(OrderDocument, ViolationReport), GenError> {
    let oa = a.to_order(false)?;
    let ob = b.to_order(false)?;
    let (n, m) = (oa.size(), ob.size());
    let mut labels = Vec::with_capacity(n * m);
    for i in 0..n {
        for j in 0..m {
            labels.push(format!("({},{})", oa.label(i), ob.label(j)));
        }
    }
    let flat = |i: usize, j: usize| i * m + j;
    let mut rel = StrictRelation::new(n * m);
    for i in 0..n {
        for j in 0..m {
            for x in 0..n {
                for y in 0..m {
                    let strict = oa.lt(i, x) || ob.lt(j, y);
                    if strict && oa.leq(i, x) && ob.leq(j, y) {
                        rel.insert(flat(i, j), flat(x, y));
                    }
                }
            }
        }
    }
    let carrier = Carrier::with_labels(labels)?;
    let report = axiom_report(&rel);
    Ok((OrderDocument::from_relation(&carrier, &rel, true), report))
}

/// Fixture orders used across the test suites.
pub fn diamond_doc() -> OrderDocument {
    let labels: Vec<String> = ["bot", "l", "r", "top"].iter().map(|s| s.to_string()).collect();
    let lt = [
        ("bot", "l"),
        ("bot", "r"),
        ("bot", "top"),
        ("l", "top"),
        ("r", "top"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    OrderDocument::new(labels, lt, true)
}

pub fn validated_random_order(n: usize, p: f64, seed: u64) -> Result<OrderedType, GenError> {
    let (doc, _, _) = random_doc(n, p, seed)?;
    Ok(doc.to_order(false)?)
}
