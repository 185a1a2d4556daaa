//! Quivers, paths and thin splits.
//!
//! A quiver is either a finite declared multigraph or the rule-based
//! `A_∞` family (vertices `g0, g1, ...`, arrows `a_i: g_i → g_{i+1}`). The
//! family is always truncated by an explicit support bound; asking about
//! anything beyond it is an error, never a silent truncation.

mod builtin;
mod path;
mod split;

use std::collections::BTreeMap;
use std::fmt;

pub use builtin::Builtin;
pub use path::Path;
pub(crate) use split::bit_sequences;
pub use split::{complement, thin_splits, SplitEntry, ThinSplit};

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub usize);

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: String,
    pub source: Vertex,
    pub target: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Finite {
        vertices: Vec<String>,
        arrows: Vec<ArrowDecl>,
        vertex_index: BTreeMap<String, usize>,
        arrow_index: BTreeMap<String, usize>,
    },
    AInfinity {
        support_bound: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    kind: Kind,
}

/// An equioriented type-A line inside a quiver: `vertices[k]` is joined to
/// `vertices[k + 1]` by `arrows[k]`. `first` is the coordinate of
/// `vertices[0]` (1 for finite lines, 0 for `A_∞`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
    pub first: i64,
}

impl Line {
    pub fn coordinate(&self, v: Vertex) -> Option<i64> {
        self.vertices
            .iter()
            .position(|&w| w == v)
            .map(|k| k as i64 + self.first)
    }

    pub fn vertex_at(&self, coordinate: i64) -> Option<Vertex> {
        let k = coordinate.checked_sub(self.first)?;
        usize::try_from(k)
            .ok()
            .and_then(|k| self.vertices.get(k).copied())
    }

    /// Arrow leaving the vertex at `coordinate`.
    pub fn arrow_at(&self, coordinate: i64) -> Option<Arrow> {
        let k = coordinate.checked_sub(self.first)?;
        usize::try_from(k)
            .ok()
            .and_then(|k| self.arrows.get(k).copied())
    }

    pub fn last(&self) -> i64 {
        self.first + self.vertices.len() as i64 - 1
    }
}

impl Quiver {
    /// Builds a finite quiver from vertex names and `(name, source, target)`
    /// arrow declarations, rejecting duplicates and dangling endpoints.
    pub fn finite<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Quiver> {
        let mut vertex_index = BTreeMap::new();
        let mut names = Vec::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            let v = v.as_ref();
            if vertex_index.insert(v.to_string(), i).is_some() {
                return Err(Error::DuplicateId(v.to_string()));
            }
            names.push(v.to_string());
        }
        let mut arrow_index = BTreeMap::new();
        let mut decls = Vec::with_capacity(arrows.len());
        for (i, (name, s, t)) in arrows.iter().enumerate() {
            let name = name.as_ref();
            if vertex_index.contains_key(name) || arrow_index.insert(name.to_string(), i).is_some()
            {
                return Err(Error::DuplicateId(name.to_string()));
            }
            let resolve = |v: &str, end: &'static str| {
                vertex_index
                    .get(v)
                    .map(|&k| Vertex(k))
                    .ok_or_else(|| Error::DanglingArrow {
                        arrow: name.to_string(),
                        end,
                        vertex: v.to_string(),
                    })
            };
            decls.push(ArrowDecl {
                name: name.to_string(),
                source: resolve(s.as_ref(), "source")?,
                target: resolve(t.as_ref(), "target")?,
            });
        }
        let q = Quiver {
            kind: Kind::Finite {
                vertices: names,
                arrows: decls,
                vertex_index,
                arrow_index,
            },
        };
        q.validate()?;
        Ok(q)
    }

    /// The `A_∞` family truncated to vertices `g0..=g{support_bound}`.
    pub fn ainfinity(support_bound: usize) -> Result<Quiver> {
        if support_bound == 0 {
            return Err(Error::OutOfRange("A_∞ support bound must be >= 1".into()));
        }
        Ok(Quiver {
            kind: Kind::AInfinity { support_bound },
        })
    }

    /// Re-checks every structural invariant.
    pub fn validate(&self) -> Result<()> {
        match &self.kind {
            Kind::Finite {
                vertices, arrows, ..
            } => {
                let mut seen = std::collections::BTreeSet::new();
                for name in vertices.iter().chain(arrows.iter().map(|a| &a.name)) {
                    if !seen.insert(name) {
                        return Err(Error::DuplicateId(name.clone()));
                    }
                }
                for a in arrows {
                    for (v, end) in [(a.source, "source"), (a.target, "target")] {
                        if v.0 >= vertices.len() {
                            return Err(Error::DanglingArrow {
                                arrow: a.name.clone(),
                                end,
                                vertex: format!("#{}", v.0),
                            });
                        }
                    }
                }
                Ok(())
            }
            Kind::AInfinity { support_bound } => {
                if *support_bound == 0 {
                    Err(Error::OutOfRange("A_∞ support bound must be >= 1".into()))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, Kind::Finite { .. })
    }

    pub fn support_bound(&self) -> Option<usize> {
        match self.kind {
            Kind::AInfinity { support_bound } => Some(support_bound),
            Kind::Finite { .. } => None,
        }
    }

    pub(crate) fn bound_error(&self, detail: String) -> Error {
        Error::BoundExceeded {
            bound: self.support_bound().unwrap_or(0),
            detail,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match &self.kind {
            Kind::Finite { vertices, .. } => vertices.len(),
            Kind::AInfinity { support_bound } => support_bound + 1,
        }
    }

    pub fn arrow_count(&self) -> usize {
        match &self.kind {
            Kind::Finite { arrows, .. } => arrows.len(),
            Kind::AInfinity { support_bound } => *support_bound,
        }
    }

    /// Vertices in canonical order (truncated for rule-based families).
    pub fn vertices(&self) -> Vec<Vertex> {
        (0..self.vertex_count()).map(Vertex).collect()
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        (0..self.arrow_count()).map(Arrow).collect()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        v.0 < self.vertex_count()
    }

    pub fn contains_arrow(&self, a: Arrow) -> bool {
        a.0 < self.arrow_count()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<Vertex> {
        if self.contains_vertex(v) {
            Ok(v)
        } else if self.is_finite() {
            Err(Error::UnknownVertex(format!("#{}", v.0)))
        } else {
            Err(self.bound_error(format!("vertex g{} is outside the truncation", v.0)))
        }
    }

    pub fn check_arrow(&self, a: Arrow) -> Result<Arrow> {
        if self.contains_arrow(a) {
            Ok(a)
        } else if self.is_finite() {
            Err(Error::UnknownArrow(format!("#{}", a.0)))
        } else {
            Err(self.bound_error(format!(
                "arrow a{} (g{} -> g{}) is outside the truncation",
                a.0,
                a.0,
                a.0 + 1
            )))
        }
    }

    /// Source vertex. The arrow must belong to the quiver.
    pub fn source(&self, a: Arrow) -> Vertex {
        match &self.kind {
            Kind::Finite { arrows, .. } => arrows[a.0].source,
            Kind::AInfinity { .. } => Vertex(a.0),
        }
    }

    pub fn target(&self, a: Arrow) -> Vertex {
        match &self.kind {
            Kind::Finite { arrows, .. } => arrows[a.0].target,
            Kind::AInfinity { .. } => Vertex(a.0 + 1),
        }
    }

    /// Arrows leaving `v`, in canonical order.
    pub fn arrows_from(&self, v: Vertex) -> Vec<Arrow> {
        match &self.kind {
            Kind::Finite { arrows, .. } => arrows
                .iter()
                .enumerate()
                .filter(|(_, d)| d.source == v)
                .map(|(i, _)| Arrow(i))
                .collect(),
            Kind::AInfinity { support_bound } => {
                if v.0 < *support_bound {
                    vec![Arrow(v.0)]
                } else {
                    Vec::new()
                }
            }
        }
    }

    pub fn arrows_to(&self, v: Vertex) -> Vec<Arrow> {
        match &self.kind {
            Kind::Finite { arrows, .. } => arrows
                .iter()
                .enumerate()
                .filter(|(_, d)| d.target == v)
                .map(|(i, _)| Arrow(i))
                .collect(),
            Kind::AInfinity { support_bound } => {
                if v.0 >= 1 && v.0 <= *support_bound {
                    vec![Arrow(v.0 - 1)]
                } else {
                    Vec::new()
                }
            }
        }
    }

    pub fn vertex_name(&self, v: Vertex) -> String {
        match &self.kind {
            Kind::Finite { vertices, .. } => vertices
                .get(v.0)
                .cloned()
                .unwrap_or_else(|| format!("#{}", v.0)),
            Kind::AInfinity { .. } => format!("g{}", v.0),
        }
    }

    pub fn arrow_name(&self, a: Arrow) -> String {
        match &self.kind {
            Kind::Finite { arrows, .. } => arrows
                .get(a.0)
                .map(|d| d.name.clone())
                .unwrap_or_else(|| format!("#{}", a.0)),
            Kind::AInfinity { .. } => format!("a{}", a.0),
        }
    }

    pub fn vertex_names(&self) -> Vec<String> {
        self.vertices()
            .into_iter()
            .map(|v| self.vertex_name(v))
            .collect()
    }

    pub fn arrow_decls(&self) -> Vec<ArrowDecl> {
        self.arrows()
            .into_iter()
            .map(|a| ArrowDecl {
                name: self.arrow_name(a),
                source: self.source(a),
                target: self.target(a),
            })
            .collect()
    }

    /// Resolves a vertex name (`g<i>` for `A_∞`).
    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        match &self.kind {
            Kind::Finite { vertex_index, .. } => vertex_index
                .get(name)
                .map(|&i| Vertex(i))
                .ok_or_else(|| Error::UnknownVertex(name.to_string())),
            Kind::AInfinity { .. } => {
                let i = family_index(name, 'g')
                    .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
                self.check_vertex(Vertex(i))
            }
        }
    }

    /// Resolves an arrow name (`a<i>` for `A_∞`).
    pub fn arrow(&self, name: &str) -> Result<Arrow> {
        match &self.kind {
            Kind::Finite { arrow_index, .. } => arrow_index
                .get(name)
                .map(|&i| Arrow(i))
                .ok_or_else(|| Error::UnknownArrow(name.to_string())),
            Kind::AInfinity { .. } => {
                let i =
                    family_index(name, 'a').ok_or_else(|| Error::UnknownArrow(name.to_string()))?;
                self.check_arrow(Arrow(i))
            }
        }
    }

    /// Arrow names matching a prefix of `s`, longest first.
    fn arrow_prefixes(&self, s: &str) -> Vec<(Arrow, usize)> {
        match &self.kind {
            Kind::Finite { arrow_index, .. } => {
                let mut hits: Vec<(Arrow, usize)> = arrow_index
                    .iter()
                    .filter(|(name, _)| s.starts_with(name.as_str()))
                    .map(|(name, &i)| (Arrow(i), name.len()))
                    .collect();
                hits.sort_by_key(|h| std::cmp::Reverse(h.1));
                hits
            }
            Kind::AInfinity { .. } => {
                let Some(rest) = s.strip_prefix('a') else {
                    return Vec::new();
                };
                let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
                match rest[..digits].parse::<usize>() {
                    Ok(i) if digits > 0 => vec![(Arrow(i), digits + 1)],
                    _ => Vec::new(),
                }
            }
        }
    }

    /// Canonical source-first path from a source vertex and arrows.
    pub fn path(&self, source: Vertex, arrows: Vec<Arrow>) -> Result<Path> {
        self.check_vertex(source)?;
        let mut at = source;
        for &a in &arrows {
            self.check_arrow(a)?;
            if self.source(a) != at {
                return Err(Error::EndpointMismatch(format!(
                    "arrow {} starts at {}, not at {}",
                    self.arrow_name(a),
                    self.vertex_name(self.source(a)),
                    self.vertex_name(at)
                )));
            }
            at = self.target(a);
        }
        Ok(Path::from_parts(source, at, arrows))
    }

    pub fn arrow_path(&self, a: Arrow) -> Path {
        Path::from_parts(self.source(a), self.target(a), vec![a])
    }

    pub fn concat(&self, p: &Path, r: &Path) -> Result<Path> {
        p.concat(r).ok_or_else(|| {
            Error::EndpointMismatch(format!(
                "cannot compose {} after {}: {} ends at {}, {} starts at {}",
                self.render_path(p),
                self.render_path(r),
                self.render_path(r),
                self.vertex_name(r.target()),
                self.render_path(p),
                self.vertex_name(p.source())
            ))
        })
    }

    /// Target-first rendering, e.g. `a2a1`; trivial paths render as their
    /// vertex.
    pub fn render_path(&self, p: &Path) -> String {
        if p.is_trivial() {
            return self.vertex_name(p.source());
        }
        p.arrows()
            .iter()
            .rev()
            .map(|&a| self.arrow_name(a))
            .collect()
    }

    /// Parses a path expression written target-first. Factors may be
    /// separated by `*`; each factor is a vertex name or a juxtaposition of
    /// arrow names resolved greedily (longest name first).
    pub fn parse_path(&self, expr: &str) -> Result<Path> {
        let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "empty path expression".into(),
            });
        }
        let mut acc: Option<Path> = None;
        let mut offset = 0;
        // factors are written target-first: the rightmost is traversed first
        let mut factors = Vec::new();
        for factor in compact.split('*') {
            factors.push((offset, factor));
            offset += factor.len() + 1;
        }
        for (pos, factor) in factors.into_iter().rev() {
            let piece = self.parse_factor(factor, pos)?;
            acc = Some(match acc {
                None => piece,
                Some(prev) => self.concat(&piece, &prev)?,
            });
        }
        Ok(acc.expect("at least one factor"))
    }

    fn parse_factor(&self, factor: &str, pos: usize) -> Result<Path> {
        if factor.is_empty() {
            return Err(Error::Parse {
                position: pos,
                message: "empty factor".into(),
            });
        }
        if let Ok(v) = self.vertex(factor) {
            return Ok(Path::trivial(v));
        }
        let mut arrows = Vec::new();
        let mut at = 0;
        while at < factor.len() {
            let rest = &factor[at..];
            let hits = self.arrow_prefixes(rest);
            let Some(&(a, len)) = hits.first() else {
                return Err(Error::Parse {
                    position: pos + at,
                    message: format!("no vertex or arrow name matches `{rest}`"),
                });
            };
            self.check_arrow(a)?;
            arrows.push(a);
            at += len;
        }
        arrows.reverse();
        let source = self.source(arrows[0]);
        self.path(source, arrows)
    }

    /// All paths of exactly `length` starting at `v`, in canonical order.
    pub fn paths_from(&self, v: Vertex, length: usize) -> Result<Vec<Path>> {
        self.check_vertex(v)?;
        if let Some(bound) = self.support_bound() {
            if v.0 + length > bound {
                return Err(self.bound_error(format!(
                    "paths of length {length} from g{} reach g{}",
                    v.0,
                    v.0 + length
                )));
            }
        }
        let mut out = Vec::new();
        let mut stack = vec![Path::trivial(v)];
        while let Some(p) = stack.pop() {
            if p.len() == length {
                out.push(p);
                continue;
            }
            for a in self.arrows_from(p.target()).into_iter().rev() {
                stack.push(p.extend(a, self.target(a)));
            }
        }
        Ok(out)
    }

    /// Every path of length at most `max_len` that fits inside the quiver
    /// (inside the truncation for rule-based families), canonical order.
    pub fn paths_up_to(&self, max_len: usize) -> Vec<Path> {
        let mut out = Vec::new();
        for len in 0..=max_len {
            for v in self.vertices() {
                if let Ok(ps) = self.paths_from(v, len) {
                    out.extend(ps);
                }
            }
        }
        out.sort();
        out
    }

    /// The quiver as an equioriented line, if it is one.
    pub fn line(&self) -> Option<Line> {
        match &self.kind {
            Kind::AInfinity { support_bound } => Some(Line {
                vertices: (0..=*support_bound).map(Vertex).collect(),
                arrows: (0..*support_bound).map(Arrow).collect(),
                first: 0,
            }),
            Kind::Finite { .. } => {
                let n = self.vertex_count();
                if n == 0 || self.arrow_count() != n - 1 {
                    return None;
                }
                let starts: Vec<Vertex> = self
                    .vertices()
                    .into_iter()
                    .filter(|&v| self.arrows_to(v).is_empty())
                    .collect();
                let [start] = starts[..] else {
                    return None;
                };
                let mut vertices = vec![start];
                let mut arrows = Vec::new();
                let mut at = start;
                loop {
                    let out = self.arrows_from(at);
                    match out[..] {
                        [] => break,
                        [a] => {
                            let t = self.target(a);
                            if vertices.contains(&t) || self.arrows_to(t).len() != 1 {
                                return None;
                            }
                            arrows.push(a);
                            vertices.push(t);
                            at = t;
                        }
                        _ => return None,
                    }
                }
                (vertices.len() == n).then_some(Line {
                    vertices,
                    arrows,
                    first: 1,
                })
            }
        }
    }
}

fn family_index(name: &str, prefix: char) -> Option<usize> {
    let digits = name.strip_prefix(prefix)?;
    let digits = digits.strip_prefix('_').unwrap_or(digits);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::AInfinity { support_bound } => {
                write!(f, "A_inf (support bound {support_bound})")
            }
            Kind::Finite { .. } => {
                write!(f, "vertices [{}]", self.vertex_names().join(", "))?;
                let arrows: Vec<String> = self
                    .arrow_decls()
                    .iter()
                    .map(|d| {
                        format!(
                            "{}: {} -> {}",
                            d.name,
                            self.vertex_name(d.source),
                            self.vertex_name(d.target)
                        )
                    })
                    .collect();
                write!(f, "; arrows [{}]", arrows.join(", "))
            }
        }
    }
}
