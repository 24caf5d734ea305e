use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};

use gorder_cli::doc::{parse_order, serialize_order, OrderDocument};
use gorder_cli::dot::to_dot;
use gorder_cli::gen;
use gorder_cli::parallel::match_pattern_parallel;
use gorder_cli::report::{match_report, validation_json, violation_text};
use gorder_core::{
    automorphisms, enumerate_two_chain, match_pattern, Carrier, OrderError, OrderedType, Pattern,
    StrictRelation,
};

/// Exit codes: 0 valid/success, 1 axiom failure, 2 I/O or syntax.
#[derive(Parser)]
#[command(name = "gorder", version, about = "Finite generalized ordered types: validate, classify, match, generate, export")]
struct Cli {
    /// Emit results as a single JSON object per line
    #[arg(long, global = true)]
    json: bool,
    /// Transitively close input relations before validation
    #[arg(long, global = true)]
    close: bool,
    /// Seed for random generation
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the three order axioms on a document
    Validate { file: PathBuf },
    /// Classify a pair of elements: Equal, LessThan, GreaterThan, or Unordered
    Classify {
        file: PathBuf,
        a: String,
        b: String,
    },
    /// Enumerate all subtypes of the ground order isomorphic to a pattern
    Match {
        ground: PathBuf,
        pattern: Option<PathBuf>,
        /// Run the literal two-chain pair scan instead of a pattern file
        #[arg(long)]
        two_chain: bool,
        /// Fan the search out over worker threads
        #[arg(long)]
        parallel: bool,
    },
    /// Emit an order document on stdout
    Generate {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Export the cover (Hasse) relation as DOT
    Dot { file: PathBuf },
}

#[derive(Subcommand)]
enum GenKind {
    /// Total order on n elements
    Chain { n: usize },
    /// n elements with an empty relation (fails validation for n >= 2)
    Antichain { n: usize },
    /// The four-element fixture 0<2, 1<2, 1<3
    NPoset,
    /// Random order: each upward pair drawn with probability p, closed,
    /// rejected and retried until the axioms pass
    Random { n: usize, p: f64 },
    /// Partial functions from singleton domains x0..x{size-1} into [y_min, y_max]
    Funcspace {
        x_size: usize,
        #[arg(allow_negative_numbers = true)]
        y_min: i64,
        #[arg(allow_negative_numbers = true)]
        y_max: i64,
    },
    /// Side-by-side sum of two documents, no cross pairs
    Sum { left: PathBuf, right: PathBuf },
    /// Componentwise product order of two documents
    Product { left: PathBuf, right: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn load_doc(path: &Path) -> anyhow::Result<OrderDocument> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    parse_order(&text).with_context(|| format!("parsing {}", path.display()))
}

enum Validated<T> {
    Ok(T),
    Invalid,
}

/// Validate a document, printing the violation report on failure.
fn validate_doc(doc: &OrderDocument, close: bool, json: bool) -> anyhow::Result<Validated<OrderedType>> {
    match doc.to_order(close) {
        Ok(o) => Ok(Validated::Ok(o)),
        Err(OrderError::Axioms(report)) => {
            let carrier = doc.carrier()?;
            if json {
                println!("{}", serde_json::to_string(&validation_json(&carrier, &report))?);
            } else {
                print!("{}", violation_text(&carrier, &report));
            }
            Ok(Validated::Invalid)
        }
        Err(OrderError::EmptyCarrier) => {
            if json {
                println!("{{\"valid\":false,\"n\":0}}");
            } else {
                println!("invalid: carrier must have at least one element");
            }
            Ok(Validated::Invalid)
        }
        Err(other) => Err(other.into()),
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let seed = cli.seed.unwrap_or(0);
    match cli.cmd {
        Cmd::Validate { file } => {
            let doc = load_doc(&file)?;
            match validate_doc(&doc, cli.close, cli.json)? {
                Validated::Ok(o) => {
                    if cli.json {
                        let empty = gorder_core::ViolationReport::default();
                        println!(
                            "{}",
                            serde_json::to_string(&validation_json(o.carrier(), &empty))?
                        );
                    } else {
                        println!("valid, N={}", o.size());
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Validated::Invalid => Ok(ExitCode::from(1)),
            }
        }
        Cmd::Classify { file, a, b } => {
            let doc = load_doc(&file)?;
            let o = match validate_doc(&doc, cli.close, cli.json)? {
                Validated::Ok(o) => o,
                Validated::Invalid => return Ok(ExitCode::from(1)),
            };
            let i = o
                .carrier()
                .index_of(&a)
                .ok_or_else(|| anyhow!("unknown label {a:?}"))?;
            let j = o
                .carrier()
                .index_of(&b)
                .ok_or_else(|| anyhow!("unknown label {b:?}"))?;
            let verdict = o.classify(i, j);
            if cli.json {
                println!("{}", serde_json::to_string(&serde_json::json!({ "a": a, "b": b, "verdict": verdict.to_string() }))?);
            } else {
                println!("{verdict}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Match {
            ground,
            pattern,
            two_chain,
            parallel,
        } => {
            let ground_doc = load_doc(&ground)?;
            let o = match validate_doc(&ground_doc, cli.close, cli.json)? {
                Validated::Ok(o) => o,
                Validated::Invalid => return Ok(ExitCode::from(1)),
            };
            let (pattern_name, p, result) = if two_chain {
                let labels = vec!["a".to_string(), "b".to_string()];
                let rel = StrictRelation::from_pairs(2, &[(0, 1)]);
                let p = Pattern::new(Carrier::with_labels(labels)?, rel)?;
                let result = enumerate_two_chain(&o);
                ("two-chain".to_string(), p, result)
            } else {
                let path = pattern
                    .ok_or_else(|| anyhow!("a pattern file is required unless --two-chain is set"))?;
                let pattern_doc = load_doc(&path)?;
                let p = match pattern_doc.to_pattern(cli.close) {
                    Ok(p) => p,
                    Err(OrderError::Axioms(report)) => {
                        let carrier = pattern_doc.carrier()?;
                        print!("{}", violation_text(&carrier, &report));
                        return Ok(ExitCode::from(1));
                    }
                    Err(other) => return Err(other.into()),
                };
                let result = if parallel {
                    match_pattern_parallel(&o, &p)
                } else {
                    match_pattern(&o, &p)
                };
                (path.display().to_string(), p, result)
            };
            let auts = automorphisms(&p).len();
            if cli.json {
                let rpt = match_report(
                    &ground.display().to_string(),
                    &pattern_name,
                    o.carrier(),
                    &p,
                    &result,
                    auts,
                );
                println!("{}", serde_json::to_string(&rpt)?);
            } else {
                for set in &result.subtypes {
                    let labels: Vec<&str> = set.iter().map(|&i| o.label(i)).collect();
                    println!("{{{}}}", labels.join(", "));
                }
                println!(
                    "{} subtypes, {} embeddings, |Aut(pattern)|={}",
                    result.subtypes.len(),
                    result.embeddings.len(),
                    auts
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Generate { kind } => {
            let doc = match kind {
                GenKind::Chain { n } => gen::chain_doc(n),
                GenKind::Antichain { n } => gen::antichain_doc(n),
                GenKind::NPoset => gen::n_poset_doc(),
                GenKind::Random { n, p } => {
                    let (doc, seed_used, attempts) = gen::random_doc(n, p, seed)?;
                    eprintln!("seed {seed_used} accepted after {attempts} attempt(s)");
                    doc
                }
                GenKind::Funcspace { x_size, y_min, y_max } => {
                    if x_size == 0 || y_min > y_max {
                        return Err(anyhow!("funcspace needs x_size >= 1 and y_min <= y_max"));
                    }
                    gen::funcspace_doc(x_size, y_min, y_max)
                }
                GenKind::Sum { left, right } => {
                    let (doc, report) = gen::sum_doc(&load_doc(&left)?, &load_doc(&right)?)?;
                    print!("{}", serialize_order(&doc));
                    if !report.is_empty() {
                        eprint!("{}", violation_text(&doc.carrier()?, &report));
                        return Ok(ExitCode::from(1));
                    }
                    return Ok(ExitCode::SUCCESS);
                }
                GenKind::Product { left, right } => {
                    let (doc, report) = gen::product_doc(&load_doc(&left)?, &load_doc(&right)?)?;
                    print!("{}", serialize_order(&doc));
                    if !report.is_empty() {
                        eprint!("{}", violation_text(&doc.carrier()?, &report));
                        return Ok(ExitCode::from(1));
                    }
                    return Ok(ExitCode::SUCCESS);
                }
            };
            print!("{}", serialize_order(&doc));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Dot { file } => {
            let doc = load_doc(&file)?;
            match validate_doc(&doc, cli.close, cli.json)? {
                Validated::Ok(o) => {
                    print!("{}", to_dot(&o));
                    Ok(ExitCode::SUCCESS)
                }
                Validated::Invalid => Ok(ExitCode::from(1)),
            }
        }
    }
}
