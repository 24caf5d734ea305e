//! Rendering of validation and match results, human text and JSON.

use gorder_core::{Carrier, MatchResult, Pattern, ViolationReport};
use serde::Serialize;

#[derive(Serialize)]
pub struct ValidationJson {
    pub valid: bool,
    pub n: usize,
    pub asymmetry_pairs: Vec<(String, String)>,
    pub transitivity_triples: Vec<(String, String, String)>,
    pub antisymmetry_pairs: Vec<(String, String)>,
}

pub fn validation_json(carrier: &Carrier, report: &ViolationReport) -> ValidationJson {
    let l = |i: usize| carrier.label(i).to_string();
    ValidationJson {
        valid: report.is_empty(),
        n: carrier.len(),
        asymmetry_pairs: report.asymmetry_pairs.iter().map(|&(i, j)| (l(i), l(j))).collect(),
        transitivity_triples: report
            .transitivity_triples
            .iter()
            .map(|&(i, j, k)| (l(i), l(j), l(k)))
            .collect(),
        antisymmetry_pairs: report
            .antisymmetry_pairs
            .iter()
            .map(|&(i, j)| (l(i), l(j)))
            .collect(),
    }
}

pub fn violation_text(carrier: &Carrier, report: &ViolationReport) -> String {
    let l = |i: usize| carrier.label(i);
    let mut out = String::new();
    for &(i, j) in &report.asymmetry_pairs {
        if i == j {
            out.push_str(&format!("asymmetry: {0} < {0}\n", l(i)));
        } else {
            out.push_str(&format!("asymmetry: {} < {} and {} < {}\n", l(i), l(j), l(j), l(i)));
        }
    }
    for &(i, j, k) in &report.transitivity_triples {
        out.push_str(&format!(
            "transitivity: {} < {} < {} but not {} < {}\n",
            l(i),
            l(j),
            l(k),
            l(i),
            l(k)
        ));
    }
    for &(i, j) in &report.antisymmetry_pairs {
        out.push_str(&format!(
            "antisymmetry: {0} <= {1} and {1} <= {0} with {0} != {1}\n",
            l(i),
            l(j)
        ));
    }
    out
}

#[derive(Serialize)]
pub struct MatchCounts {
    pub embeddings: usize,
    pub subtypes: usize,
    pub automorphisms: usize,
}

#[derive(Serialize)]
pub struct MatchReport {
    pub ground: String,
    pub pattern: String,
    pub subtypes: Vec<Vec<String>>,
    pub embeddings: Vec<Vec<(String, String)>>,
    pub counts: MatchCounts,
}

pub fn match_report(
    ground_name: &str,
    pattern_name: &str,
    ground_carrier: &Carrier,
    pattern: &Pattern,
    result: &MatchResult,
    automorphism_count: usize,
) -> MatchReport {
    let g = |i: usize| ground_carrier.label(i).to_string();
    MatchReport {
        ground: ground_name.to_string(),
        pattern: pattern_name.to_string(),
        subtypes: result
            .subtypes
            .iter()
            .map(|set| set.iter().map(|&i| g(i)).collect())
            .collect(),
        embeddings: result
            .embeddings
            .iter()
            .map(|e| {
                e.map
                    .iter()
                    .enumerate()
                    .map(|(p, &i)| (pattern.carrier().label(p).to_string(), g(i)))
                    .collect()
            })
            .collect(),
        counts: MatchCounts {
            embeddings: result.embeddings.len(),
            subtypes: result.subtypes.len(),
            automorphisms: automorphism_count,
        },
    }
}
