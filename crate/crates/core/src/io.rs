//! JSON documents for quivers, bialgebra specs, representations, isotypic
//! dimension matrices and interval decompositions.
//!
//! Every `*_to_json` output loads back through the matching `*_from_json`
//! to an equal value.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bialgebra::{BialgebraSpec, BimoduleAction, IsotypicMatrix, VertexMonoid};
use crate::coalgebra::PathVector;
use crate::error::{Error, Result};
use crate::quiver::{Arrow, Quiver, Vertex};
use crate::rep::{Interval, IntervalMultiset, Matrix, Representation};
use crate::scalars::RationalFunction;

const AINFINITY: &str = "ainfinity";

fn json_error(e: serde_json::Error) -> Error {
    Error::Document(format!("line {}, column {}: {e}", e.line(), e.column()))
}

fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(json_error)
}

fn render<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support_bound: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrows: Option<Vec<ArrowDoc>>,
}

impl QuiverDoc {
    pub fn from_quiver(q: &Quiver) -> QuiverDoc {
        match q.support_bound() {
            Some(b) => QuiverDoc {
                family: Some(AINFINITY.into()),
                support_bound: Some(b),
                ..QuiverDoc::default()
            },
            None => QuiverDoc {
                vertices: Some(q.vertex_names()),
                arrows: Some(
                    q.arrow_decls()
                        .into_iter()
                        .map(|d| ArrowDoc {
                            name: d.name,
                            source: q.vertex_name(d.source),
                            target: q.vertex_name(d.target),
                        })
                        .collect(),
                ),
                ..QuiverDoc::default()
            },
        }
    }

    pub fn to_quiver(&self) -> Result<Quiver> {
        match (&self.family, &self.vertices) {
            (Some(f), None) if f == AINFINITY => {
                if self.arrows.is_some() {
                    return Err(Error::Document("a family quiver lists no arrows".into()));
                }
                let b = self.support_bound.ok_or_else(|| {
                    Error::Document("the ainfinity family needs an explicit support_bound".into())
                })?;
                Quiver::ainfinity(b)
            }
            (Some(f), None) => Err(Error::Document(format!("unknown quiver family `{f}`"))),
            (None, Some(vs)) => {
                if self.support_bound.is_some() {
                    return Err(Error::Document(
                        "support_bound applies only to the ainfinity family".into(),
                    ));
                }
                let arrows: Vec<(String, String, String)> = self
                    .arrows
                    .iter()
                    .flatten()
                    .map(|a| (a.name.clone(), a.source.clone(), a.target.clone()))
                    .collect();
                Quiver::finite(vs, &arrows)
            }
            (Some(_), Some(_)) => Err(Error::Document(
                "give either `family` or `vertices`, not both".into(),
            )),
            (None, None) => Err(Error::Document(
                "a quiver needs `vertices` or `family`".into(),
            )),
        }
    }
}

pub fn quiver_from_json(text: &str) -> Result<Quiver> {
    parse::<QuiverDoc>(text)?.to_quiver()
}

pub fn quiver_to_json(q: &Quiver) -> String {
    render(&QuiverDoc::from_quiver(q))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
    /// Rows `[g, h, g·h]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<[String; 3]>>,
}

const ADDITIVE: &str = "additive";

impl MonoidDoc {
    fn from_monoid(m: &VertexMonoid, name: &dyn Fn(Vertex) -> String) -> MonoidDoc {
        match m {
            VertexMonoid::Additive { .. } => MonoidDoc {
                rule: Some(ADDITIVE.into()),
                ..MonoidDoc::default()
            },
            VertexMonoid::Table { table, identity } => MonoidDoc {
                rule: None,
                identity: Some(name(*identity)),
                table: Some(
                    table
                        .iter()
                        .enumerate()
                        .flat_map(|(g, row)| {
                            row.iter()
                                .enumerate()
                                .map(move |(h, &gh)| [name(Vertex(g)), name(Vertex(h)), name(gh)])
                        })
                        .collect(),
                ),
            },
        }
    }

    /// `vertex` resolves names; `n` is the number of elements;
    /// `support_bound` is the truncation of an additive monoid.
    fn to_monoid(
        &self,
        n: usize,
        support_bound: Option<usize>,
        vertex: &dyn Fn(&str) -> Result<Vertex>,
    ) -> Result<VertexMonoid> {
        match (&self.rule, &self.table) {
            (Some(r), None) if r == ADDITIVE => {
                let support_bound = support_bound.ok_or_else(|| {
                    Error::InvalidMonoid("the additive rule needs the ainfinity family".into())
                })?;
                Ok(VertexMonoid::Additive { support_bound })
            }
            (Some(r), None) => Err(Error::Document(format!("unknown monoid rule `{r}`"))),
            (None, Some(rows)) => {
                let identity = vertex(self.identity.as_deref().ok_or_else(|| {
                    Error::Document("a monoid table needs an `identity`".into())
                })?)?;
                let mut table: Vec<Vec<Option<Vertex>>> = vec![vec![None; n]; n];
                for [g, h, gh] in rows {
                    let (gv, hv, ghv) = (vertex(g)?, vertex(h)?, vertex(gh)?);
                    match table[gv.0][hv.0] {
                        Some(old) if old != ghv => {
                            return Err(Error::InvalidMonoid(format!(
                                "conflicting products given for {g}*{h}"
                            )))
                        }
                        _ => table[gv.0][hv.0] = Some(ghv),
                    }
                }
                let mut full = Vec::with_capacity(n);
                for (g, row) in table.into_iter().enumerate() {
                    let mut out = Vec::with_capacity(n);
                    for (h, e) in row.into_iter().enumerate() {
                        out.push(e.ok_or_else(|| {
                            Error::InvalidMonoid(format!(
                                "multiplication table has no entry for #{g}*#{h}"
                            ))
                        })?);
                    }
                    full.push(out);
                }
                Ok(VertexMonoid::Table {
                    table: full,
                    identity,
                })
            }
            (Some(_), Some(_)) => Err(Error::Document(
                "give either a monoid `rule` or a `table`, not both".into(),
            )),
            (None, None) => Err(Error::Document("a monoid needs `rule` or `table`".into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub arrow: String,
    #[serde(default = "one_string")]
    pub coeff: String,
}

fn one_string() -> String {
    "1".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionEntryDoc {
    pub vertex: String,
    pub arrow: String,
    pub result: Vec<TermDoc>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<ActionEntryDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<ActionEntryDoc>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecDoc {
    #[serde(flatten)]
    pub quiver: QuiverDoc,
    pub monoid: MonoidDoc,
    pub action: ActionDoc,
}

fn vector_doc(q: &Quiver, v: &PathVector) -> Vec<TermDoc> {
    v.iter()
        .map(|(p, c)| TermDoc {
            arrow: q.render_path(p),
            coeff: c.to_string(),
        })
        .collect()
}

fn vector_from_doc(q: &Quiver, terms: &[TermDoc]) -> Result<PathVector> {
    let mut v = PathVector::zero();
    for t in terms {
        let a = q.arrow(&t.arrow)?;
        let c: RationalFunction = t.coeff.parse()?;
        v.add_term(q.arrow_path(a), c);
    }
    Ok(v)
}

impl SpecDoc {
    pub fn from_spec(spec: &BialgebraSpec) -> SpecDoc {
        let q = &spec.quiver;
        let name = |v: Vertex| q.vertex_name(v);
        let action = match &spec.action {
            BimoduleAction::QuantumPlane => ActionDoc {
                rule: Some(AINFINITY.into()),
                ..ActionDoc::default()
            },
            BimoduleAction::Table { left, right } => ActionDoc {
                rule: None,
                left: Some(
                    left.iter()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(&(g, a), v)| ActionEntryDoc {
                            vertex: name(g),
                            arrow: q.arrow_name(a),
                            result: vector_doc(q, v),
                        })
                        .collect(),
                ),
                right: Some(
                    right
                        .iter()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(&(a, g), v)| ActionEntryDoc {
                            vertex: name(g),
                            arrow: q.arrow_name(a),
                            result: vector_doc(q, v),
                        })
                        .collect(),
                ),
            },
        };
        SpecDoc {
            quiver: QuiverDoc::from_quiver(q),
            monoid: MonoidDoc::from_monoid(&spec.monoid, &name),
            action,
        }
    }

    /// Builds the spec without validating it.
    pub fn to_spec(&self) -> Result<BialgebraSpec> {
        let q = self.quiver.to_quiver()?;
        let monoid = self
            .monoid
            .to_monoid(q.vertex_count(), q.support_bound(), &|s| q.vertex(s))?;
        let action = match (&self.action.rule, &self.action.left, &self.action.right) {
            (Some(r), None, None) if r == AINFINITY => BimoduleAction::QuantumPlane,
            (Some(r), None, None) => {
                return Err(Error::Document(format!("unknown action rule `{r}`")))
            }
            (Some(_), _, _) => {
                return Err(Error::Document(
                    "give either an action `rule` or `left`/`right` tables, not both".into(),
                ))
            }
            (None, l, r) => {
                let mut left: BTreeMap<(Vertex, Arrow), PathVector> = BTreeMap::new();
                for e in l.iter().flatten() {
                    let key = (q.vertex(&e.vertex)?, q.arrow(&e.arrow)?);
                    let v = vector_from_doc(&q, &e.result)?;
                    left.entry(key)
                        .or_default()
                        .add_scaled(&v, &RationalFunction::from_int(1));
                }
                let mut right: BTreeMap<(Arrow, Vertex), PathVector> = BTreeMap::new();
                for e in r.iter().flatten() {
                    let key = (q.arrow(&e.arrow)?, q.vertex(&e.vertex)?);
                    let v = vector_from_doc(&q, &e.result)?;
                    right
                        .entry(key)
                        .or_default()
                        .add_scaled(&v, &RationalFunction::from_int(1));
                }
                BimoduleAction::Table {
                    left: crate::bialgebra::prune(left),
                    right: crate::bialgebra::prune(right),
                }
            }
        };
        Ok(BialgebraSpec {
            quiver: q,
            monoid,
            action,
        })
    }
}

/// Loads a spec; validation is left to the caller.
pub fn spec_from_json(text: &str) -> Result<BialgebraSpec> {
    parse::<SpecDoc>(text)?.to_spec()
}

pub fn spec_to_json(spec: &BialgebraSpec) -> String {
    render(&SpecDoc::from_spec(spec))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDoc {
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub mats: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, Vec<String>>>,
}

impl RepDoc {
    pub fn from_rep(v: &Representation) -> RepDoc {
        let q = v.quiver();
        RepDoc {
            dims: v
                .dims()
                .iter()
                .map(|(&g, &d)| (q.vertex_name(g), d))
                .collect(),
            mats: v
                .mats()
                .iter()
                .map(|(&a, m)| {
                    let rows = m
                        .to_rows()
                        .iter()
                        .map(|r| r.iter().map(ToString::to_string).collect())
                        .collect();
                    (q.arrow_name(a), rows)
                })
                .collect(),
            labels: Some(
                v.all_labels()
                    .iter()
                    .map(|(&g, ls)| (q.vertex_name(g), ls.clone()))
                    .collect(),
            ),
        }
    }

    pub fn to_rep(&self, q: &Quiver) -> Result<Representation> {
        let mut dims = BTreeMap::new();
        for (name, &d) in &self.dims {
            dims.insert(q.vertex(name)?, d);
        }
        let dim = |v: Vertex| dims.get(&v).copied().unwrap_or(0);
        let mut mats = BTreeMap::new();
        for (name, rows) in &self.mats {
            let a = q.arrow(name)?;
            let entries = rows
                .iter()
                .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let cols = entries.first().map_or(dim(q.source(a)), Vec::len);
            mats.insert(a, Matrix::from_rows(entries, cols)?);
        }
        let mut labels = BTreeMap::new();
        for (name, ls) in self.labels.iter().flatten() {
            labels.insert(q.vertex(name)?, ls.clone());
        }
        Representation::new(q.clone(), dims, mats, labels)
    }
}

pub fn rep_from_json(text: &str, q: &Quiver) -> Result<Representation> {
    parse::<RepDoc>(text)?.to_rep(q)
}

pub fn rep_to_json(v: &Representation) -> String {
    render(&RepDoc::from_rep(v))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandDoc {
    pub interval: [i64; 2],
    pub mult: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    pub summands: Vec<SummandDoc>,
}

impl DecompositionDoc {
    pub fn from_multiset(m: &IntervalMultiset) -> DecompositionDoc {
        DecompositionDoc {
            summands: m
                .iter()
                .map(|(iv, k)| SummandDoc {
                    interval: [iv.i, iv.j],
                    mult: k,
                })
                .collect(),
        }
    }

    pub fn to_multiset(&self) -> Result<IntervalMultiset> {
        let mut m = IntervalMultiset::new();
        for s in &self.summands {
            m.add(Interval::new(s.interval[0], s.interval[1])?, s.mult);
        }
        Ok(m)
    }
}

pub fn decomposition_to_json(m: &IntervalMultiset) -> String {
    render(&DecompositionDoc::from_multiset(m))
}

pub fn decomposition_from_json(text: &str) -> Result<IntervalMultiset> {
    parse::<DecompositionDoc>(text)?.to_multiset()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypicEntryDoc {
    /// `g` in `^gM^h`: the target of the attached arrows.
    pub target: String,
    /// `h` in `^gM^h`: the source of the attached arrows.
    pub source: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypicDoc {
    pub vertices: Vec<String>,
    pub monoid: MonoidDoc,
    #[serde(default)]
    pub dims: Vec<IsotypicEntryDoc>,
}

impl IsotypicDoc {
    pub fn from_matrix(iso: &IsotypicMatrix) -> IsotypicDoc {
        let name = |v: Vertex| iso.vertex_names[v.0].clone();
        IsotypicDoc {
            vertices: iso.vertex_names.clone(),
            monoid: MonoidDoc::from_monoid(&iso.monoid, &name),
            dims: iso
                .dims
                .iter()
                .filter(|(_, &d)| d > 0)
                .map(|(&(g, h), &d)| IsotypicEntryDoc {
                    target: name(g),
                    source: name(h),
                    dim: d,
                })
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<IsotypicMatrix> {
        let index: BTreeMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        if index.len() != self.vertices.len() {
            return Err(Error::Document("duplicate vertex names".into()));
        }
        let vertex = |s: &str| {
            index
                .get(s)
                .map(|&i| Vertex(i))
                .ok_or_else(|| Error::UnknownVertex(s.to_string()))
        };
        let n = self.vertices.len();
        let bound = n.checked_sub(1);
        let monoid = self.monoid.to_monoid(n, bound, &vertex)?;
        let mut dims = BTreeMap::new();
        for e in &self.dims {
            if e.dim > 0 {
                *dims
                    .entry((vertex(&e.target)?, vertex(&e.source)?))
                    .or_insert(0) += e.dim;
            }
        }
        Ok(IsotypicMatrix {
            vertex_names: self.vertices.clone(),
            monoid,
            dims,
        })
    }
}

pub fn isotypic_from_json(text: &str) -> Result<IsotypicMatrix> {
    parse::<IsotypicDoc>(text)?.to_matrix()
}

pub fn isotypic_to_json(iso: &IsotypicMatrix) -> String {
    render(&IsotypicDoc::from_matrix(iso))
}
