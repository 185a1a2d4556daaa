//! `qbialg`: bialgebra structures on path coalgebras from the command line.
//!
//! Exit codes: 0 on success, 1 when a mathematical check fails, 2 on bad
//! input.

use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quiverbialg::bialgebra::{
    ainf_bialgebra, attach_quiver, check_degree1_closure, classify_finite_type, shuffle_product,
    trivial_bialgebra, verify_bialgebra, BialgebraSpec,
};
use quiverbialg::coalgebra::{delta, render_tensor2, render_vector};
use quiverbialg::io::{self, DecompositionDoc};
use quiverbialg::quiver::{Builtin, Path, Quiver};
use quiverbialg::rep::{
    barcode_decompose, cg_table, rep_ring_check, tensor_representations, Representation,
};
use quiverbialg::Error;

#[derive(Parser)]
#[command(
    name = "qbialg",
    version,
    about = "Exact bialgebras on path coalgebras of quivers"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct QuiverSource {
    /// Quiver JSON document.
    #[arg(long)]
    quiver: Option<PathBuf>,
    /// Named quiver: kronecker:N, subspace:N, linearA:N or ainfinity:B.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SpecSource {
    /// Bialgebra spec JSON document.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// The quantum-plane structure on A_∞ with this support bound.
    #[arg(long)]
    ainf: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the vertex monoid and the bimodule action of a spec.
    Validate {
        #[command(flatten)]
        spec: SpecSource,
    },
    /// Emit the trivial bialgebra spec for identity `e` and zero `z`.
    Construct {
        #[command(flatten)]
        quiver: QuiverSource,
        #[arg(long)]
        e: String,
        #[arg(long)]
        z: Option<String>,
    },
    /// Quantum-shuffle product of two paths.
    Multiply {
        #[command(flatten)]
        spec: SpecSource,
        left: String,
        right: String,
    },
    /// Comultiplication of a path.
    Delta {
        #[command(flatten)]
        quiver: QuiverSource,
        path: String,
    },
    /// Check the bialgebra axioms on all path tuples up to a total length.
    Verify {
        #[command(flatten)]
        spec: SpecSource,
        #[arg(long)]
        max_len: usize,
    },
    /// Tensor product of two representations.
    Tensor {
        #[command(flatten)]
        spec: SpecSource,
        left: PathBuf,
        right: PathBuf,
        /// Print the interval decomposition instead of the representation.
        #[arg(long)]
        decompose: bool,
    },
    /// Decompose V(a,b) ⊗ V(c,d) for all intervals with endpoints <= bound.
    CgTable {
        #[command(flatten)]
        spec: SpecSource,
        #[arg(long)]
        bound: i64,
    },
    /// Check the representation ring relations on A_∞.
    RepRing {
        #[command(flatten)]
        spec: SpecSource,
        #[arg(long)]
        bound: i64,
    },
    /// ADE classification of a finite quiver.
    Classify {
        #[command(flatten)]
        quiver: QuiverSource,
    },
    /// Rebuild the quiver from an isotypic dimension matrix.
    Attach { isotypic: PathBuf },
}

/// A finished command: text and JSON renderings plus whether the checks
/// it ran all passed.
struct Outcome {
    text: String,
    json: Value,
    passed: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Outcome {
        Outcome {
            text,
            json,
            passed: true,
        }
    }
}

fn read(path: &FsPath) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::Document(format!("cannot read {}: {e}", path.display())))
}

fn load_quiver(src: &QuiverSource) -> Result<Quiver, Error> {
    match (&src.quiver, &src.builtin) {
        (Some(p), _) => io::quiver_from_json(&read(p)?),
        (None, Some(b)) => b.parse::<Builtin>()?.build(),
        (None, None) => unreachable!("clap requires a quiver source"),
    }
}

fn load_spec(src: &SpecSource) -> Result<BialgebraSpec, Error> {
    let spec = match (&src.spec, src.ainf) {
        (Some(p), _) => io::spec_from_json(&read(p)?)?,
        (None, Some(b)) => ainf_bialgebra(b)?,
        (None, None) => unreachable!("clap requires a spec source"),
    };
    spec.validate()?;
    Ok(spec)
}

/// Path expressions are user input, so a composability error is an input
/// error here.
fn parse_path(q: &Quiver, expr: &str) -> Result<Path, Error> {
    q.parse_path(expr).map_err(|e| match e {
        Error::EndpointMismatch(m) => Error::Document(format!("path `{expr}`: {m}")),
        other => other,
    })
}

fn rep_text(v: &Representation) -> String {
    let q = v.quiver();
    let mut lines = Vec::new();
    for (&g, &d) in v.dims() {
        lines.push(format!(
            "{}: dim {d} [{}]",
            q.vertex_name(g),
            v.labels(g).join(", ")
        ));
    }
    for (&a, m) in v.mats() {
        lines.push(format!("{}:", q.arrow_name(a)));
        lines.push(m.to_string());
    }
    lines.join("\n")
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Validate { spec } => {
            let s = load_spec(spec)?;
            let n = s.quiver.vertex_count();
            let mut text = format!("valid: monoid and bimodule axioms hold on {n} vertices");
            // failing degree-one closure does not invalidate a spec
            let closure = match check_degree1_closure(&s) {
                Ok(Some(ce)) => {
                    text.push_str(&format!("\nnote: degree-one part is not closed: {ce}"));
                    json!(ce.to_string())
                }
                Ok(None) => json!("closed"),
                Err(_) => Value::Null,
            };
            Ok(Outcome::ok(
                text,
                json!({"valid": true, "degree1_closure": closure}),
            ))
        }
        Command::Construct { quiver, e, z } => {
            let q = load_quiver(quiver)?;
            let e = q.vertex(e)?;
            let z = z.as_deref().map(|z| q.vertex(z)).transpose()?;
            let spec = trivial_bialgebra(&q, e, z)?;
            let doc = io::spec_to_json(&spec);
            let value: Value = serde_json::from_str(&doc).expect("emitted JSON parses");
            Ok(Outcome::ok(doc, value))
        }
        Command::Multiply { spec, left, right } => {
            let s = load_spec(spec)?;
            let q = &s.quiver;
            let v = shuffle_product(&s, &parse_path(q, left)?, &parse_path(q, right)?)?;
            let terms: Vec<Value> = v
                .iter()
                .map(|(p, c)| json!({"path": q.render_path(p), "coeff": c.to_string()}))
                .collect();
            Ok(Outcome::ok(render_vector(q, &v), json!({"terms": terms})))
        }
        Command::Delta { quiver, path } => {
            let q = load_quiver(quiver)?;
            let t = delta(&q, &parse_path(&q, path)?);
            let terms: Vec<Value> = t
                .iter()
                .map(|((l, r), c)| {
                    json!({"left": q.render_path(l), "right": q.render_path(r), "coeff": c.to_string()})
                })
                .collect();
            Ok(Outcome::ok(render_tensor2(&q, &t), json!({"terms": terms})))
        }
        Command::Verify { spec, max_len } => {
            let s = load_spec(spec)?;
            let report = verify_bialgebra(&s, *max_len)?;
            Ok(Outcome {
                text: report.to_string(),
                json: serde_json::to_value(&report).expect("report serializes"),
                passed: report.passed(),
            })
        }
        Command::Tensor {
            spec,
            left,
            right,
            decompose,
        } => {
            let s = load_spec(spec)?;
            let v = io::rep_from_json(&read(left)?, &s.quiver)?;
            let w = io::rep_from_json(&read(right)?, &s.quiver)?;
            let t = tensor_representations(&s, &v, &w)?;
            if *decompose {
                let m = barcode_decompose(&t)?;
                let value = serde_json::to_value(DecompositionDoc::from_multiset(&m))
                    .expect("decomposition serializes");
                Ok(Outcome::ok(m.to_string(), value))
            } else {
                let value: Value =
                    serde_json::from_str(&io::rep_to_json(&t)).expect("emitted JSON parses");
                Ok(Outcome::ok(rep_text(&t), value))
            }
        }
        Command::CgTable { spec, bound } => {
            let s = load_spec(spec)?;
            let table = cg_table(&s, *bound)?;
            let entries: Vec<Value> = table
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "left": [e.left.i, e.left.j],
                        "right": [e.right.i, e.right.j],
                        "product": DecompositionDoc::from_multiset(&e.product),
                    })
                })
                .collect();
            Ok(Outcome::ok(table.to_string(), json!({"entries": entries})))
        }
        Command::RepRing { spec, bound } => {
            let s = load_spec(spec)?;
            let report = rep_ring_check(&s, *bound)?;
            Ok(Outcome {
                text: report.to_string(),
                json: serde_json::to_value(&report).expect("report serializes"),
                passed: report.passed(),
            })
        }
        Command::Classify { quiver } => {
            let q = load_quiver(quiver)?;
            let c = classify_finite_type(&q)?;
            let text = format!(
                "{c}\n{}",
                if c.acyclic {
                    "acyclic"
                } else {
                    "has an oriented cycle"
                }
            );
            Ok(Outcome::ok(
                text,
                serde_json::to_value(&c).expect("classification serializes"),
            ))
        }
        Command::Attach { isotypic } => {
            let iso = io::isotypic_from_json(&read(isotypic)?)?;
            let q = attach_quiver(&iso)?;
            let doc = io::quiver_to_json(&q);
            let value: Value = serde_json::from_str(&doc).expect("emitted JSON parses");
            Ok(Outcome::ok(doc, value))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("values serialize")
                ),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let code = if e.is_validation_failure() { 1 } else { 2 };
            match cli.format {
                Format::Text => eprintln!("error: {e}"),
                Format::Json => eprintln!("{}", json!({"error": e.to_string(), "exit_code": code})),
            }
            ExitCode::from(code)
        }
    }
}
