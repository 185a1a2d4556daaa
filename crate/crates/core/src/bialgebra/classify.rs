//! Sinks and sources, the degree-one sub-bialgebra test, the attachment of a
//! quiver to isotypic dimensions, and the Dynkin classifier.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use super::monoid::{validate_monoid, VertexMonoid};
use super::shuffle::shuffle_product;
use super::spec::BialgebraSpec;
use crate::coalgebra::{graded_component, render_vector};
use crate::error::{Error, Result};
use crate::quiver::{Arrow, Quiver, Vertex};

fn require_finite(q: &Quiver, what: &str) -> Result<()> {
    if q.is_finite() {
        Ok(())
    } else {
        Err(Error::UnsupportedShape(format!(
            "{what} needs a finite quiver"
        )))
    }
}

/// First vertex in canonical order with no outgoing arrows (a sink) or no
/// incoming arrows (a source).
pub fn has_sink_or_source(q: &Quiver) -> Result<Option<Vertex>> {
    require_finite(q, "sink/source detection")?;
    Ok(q.vertices()
        .into_iter()
        .find(|&v| q.arrows_from(v).is_empty() || q.arrows_to(v).is_empty()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degree1Counterexample {
    pub left: Arrow,
    pub right: Arrow,
    /// The length-2 part of `left · right`, rendered.
    pub term: String,
}

impl fmt::Display for Degree1Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "arrow product has a length-2 part: {}", self.term)
    }
}

/// Checks that `a·b` has no length-2 component for every pair of arrows, so
/// that `kQ₀ ⊕ kQ₁` is a sub-bialgebra. Returns the first failing pair.
pub fn check_degree1_closure(spec: &BialgebraSpec) -> Result<Option<Degree1Counterexample>> {
    let q = &spec.quiver;
    require_finite(q, "the degree-one closure check")?;
    for a in q.arrows() {
        for b in q.arrows() {
            let ab = shuffle_product(spec, &q.arrow_path(a), &q.arrow_path(b))?;
            let two = graded_component(&ab, 2);
            if !two.is_zero() {
                return Ok(Some(Degree1Counterexample {
                    left: a,
                    right: b,
                    term: format!(
                        "{}·{} = {}",
                        q.arrow_name(a),
                        q.arrow_name(b),
                        render_vector(q, &two)
                    ),
                }));
            }
        }
    }
    Ok(None)
}

/// A monoid on a named vertex set with the dimensions of the isotypic
/// components `^gM^h`, keyed `(g, h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicMatrix {
    pub vertex_names: Vec<String>,
    pub monoid: VertexMonoid,
    pub dims: BTreeMap<(Vertex, Vertex), usize>,
}

impl IsotypicMatrix {
    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_names.len();
        let bare = Quiver::finite::<&str>(
            &self
                .vertex_names
                .iter()
                .map(String::as_str)
                .collect::<Vec<_>>(),
            &[],
        )?;
        match &self.monoid {
            VertexMonoid::Additive { support_bound } => {
                if support_bound + 1 != n {
                    return Err(Error::InvalidMonoid(format!(
                        "additive monoid on g0..g{support_bound} needs {} vertices, found {n}",
                        support_bound + 1
                    )));
                }
            }
            m @ VertexMonoid::Table { .. } => validate_monoid(m, &bare)?,
        }
        for &(g, h) in self.dims.keys() {
            if g.0 >= n || h.0 >= n {
                return Err(Error::UnknownVertex(format!("#{} or #{}", g.0, h.0)));
            }
        }
        Ok(())
    }

    fn is_ainfinity_shape(&self) -> bool {
        let VertexMonoid::Additive { support_bound } = self.monoid else {
            return false;
        };
        let names_ok = self
            .vertex_names
            .iter()
            .enumerate()
            .all(|(i, s)| *s == format!("g{i}"));
        let expected: BTreeMap<_, _> = (0..support_bound)
            .map(|i| ((Vertex(i + 1), Vertex(i)), 1))
            .collect();
        names_ok && self.nonzero_dims() == expected
    }

    fn nonzero_dims(&self) -> BTreeMap<(Vertex, Vertex), usize> {
        self.dims
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(&k, &d)| (k, d))
            .collect()
    }
}

/// The quiver with `dims(g, h)` parallel arrows `h → g`. Arrows are named
/// `a1, a2, ...` in order of (source, target). The additive monoid with one
/// arrow `g_i → g_{i+1}` for each `i` gives the `A_∞` truncation itself.
pub fn attach_quiver(iso: &IsotypicMatrix) -> Result<Quiver> {
    iso.validate()?;
    if iso.is_ainfinity_shape() {
        return Quiver::ainfinity(iso.vertex_names.len() - 1);
    }
    let mut by_source: Vec<((Vertex, Vertex), usize)> = iso
        .nonzero_dims()
        .into_iter()
        .map(|((g, h), d)| ((h, g), d))
        .collect();
    by_source.sort();
    let mut arrows = Vec::new();
    for ((h, g), d) in by_source {
        for _ in 0..d {
            arrows.push((
                format!("a{}", arrows.len() + 1),
                iso.vertex_names[h.0].clone(),
                iso.vertex_names[g.0].clone(),
            ));
        }
    }
    Quiver::finite(&iso.vertex_names, &arrows)
}

/// Reads the isotypic dimensions back off a quiver: `dims(g, h)` counts the
/// arrows `h → g`.
pub fn isotypic_dims(q: &Quiver, monoid: &VertexMonoid) -> IsotypicMatrix {
    let mut dims = BTreeMap::new();
    for a in q.arrows() {
        *dims.entry((q.target(a), q.source(a))).or_insert(0) += 1;
    }
    IsotypicMatrix {
        vertex_names: q.vertex_names(),
        monoid: monoid.clone(),
        dims,
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Dynkin {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl fmt::Display for Dynkin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dynkin::A(n) => write!(f, "A{n}"),
            Dynkin::D(n) => write!(f, "D{n}"),
            Dynkin::E6 => f.write_str("E6"),
            Dynkin::E7 => f.write_str("E7"),
            Dynkin::E8 => f.write_str("E8"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub vertices: Vec<String>,
    pub dynkin: Option<Dynkin>,
    /// Why the component is not Dynkin, when it is not.
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub components: Vec<Component>,
    pub finite_type: bool,
    pub acyclic: bool,
}

impl Classification {
    pub fn dynkin_types(&self) -> Vec<Dynkin> {
        self.components.iter().filter_map(|c| c.dynkin).collect()
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.finite_type {
            let names: Vec<String> = self.dynkin_types().iter().map(Dynkin::to_string).collect();
            if names.is_empty() {
                write!(f, "empty quiver: finite type")
            } else {
                write!(f, "{}: finite type", names.join(" + "))
            }
        } else {
            let reasons: Vec<&str> = self
                .components
                .iter()
                .filter_map(|c| c.reason.as_deref())
                .collect();
            write!(f, "not finite type: {}", reasons.join("; "))
        }
    }
}

/// Matches each connected component of the underlying graph against the
/// simply-laced Dynkin diagrams.
pub fn classify_finite_type(q: &Quiver) -> Result<Classification> {
    require_finite(q, "the finite-type classifier")?;
    let n = q.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut edge_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut loops = BTreeSet::new();
    for a in q.arrows() {
        let (s, t) = (q.source(a).0, q.target(a).0);
        if s == t {
            loops.insert(s);
            continue;
        }
        *edge_count.entry((s.min(t), s.max(t))).or_insert(0) += 1;
        adj[s].insert(t);
        adj[t].insert(s);
    }

    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut members = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            members.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        components.push(classify_component(q, &members, &adj, &edge_count, &loops));
    }
    let finite_type = components.iter().all(|c| c.dynkin.is_some());
    Ok(Classification {
        components,
        finite_type,
        acyclic: is_acyclic(q),
    })
}

fn classify_component(
    q: &Quiver,
    members: &[usize],
    adj: &[BTreeSet<usize>],
    edge_count: &BTreeMap<(usize, usize), usize>,
    loops: &BTreeSet<usize>,
) -> Component {
    let name = |v: usize| q.vertex_name(Vertex(v));
    let vertices = members.iter().map(|&v| name(v)).collect();
    let verdict = |r: std::result::Result<Dynkin, String>| match r {
        Ok(d) => (Some(d), None),
        Err(reason) => (None, Some(reason)),
    };
    let (dynkin, reason) = verdict(dynkin_shape(members, adj, edge_count, loops, &name));
    Component {
        vertices,
        dynkin,
        reason,
    }
}

fn dynkin_shape(
    members: &[usize],
    adj: &[BTreeSet<usize>],
    edge_count: &BTreeMap<(usize, usize), usize>,
    loops: &BTreeSet<usize>,
    name: &dyn Fn(usize) -> String,
) -> std::result::Result<Dynkin, String> {
    if let Some(&v) = members.iter().find(|v| loops.contains(v)) {
        return Err(format!("loop at {}", name(v)));
    }
    let inside = |&(s, _): &(&(usize, usize), &usize)| members.binary_search(&s.0).is_ok();
    if let Some((&(s, t), _)) = edge_count.iter().filter(inside).find(|(_, &c)| c > 1) {
        return Err(format!("multiple edge between {} and {}", name(s), name(t)));
    }
    let edges: usize = edge_count.iter().filter(inside).count();
    if edges >= members.len() {
        return Err(format!("cycle through {}", name(members[0])));
    }
    let branch: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&v| adj[v].len() >= 3)
        .collect();
    match branch.as_slice() {
        [] => Ok(Dynkin::A(members.len())),
        [b] => {
            if adj[*b].len() > 3 {
                return Err(format!("{} has degree {}", name(*b), adj[*b].len()));
            }
            let mut arms: Vec<usize> = adj[*b].iter().map(|&w| arm_length(adj, *b, w)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, c] => Ok(Dynkin::D(c + 3)),
                [1, 2, 2] => Ok(Dynkin::E6),
                [1, 2, 3] => Ok(Dynkin::E7),
                [1, 2, 4] => Ok(Dynkin::E8),
                [x, y, z] => Err(format!(
                    "branch at {} with arms of lengths ({x}, {y}, {z}) is not Dynkin",
                    name(*b)
                )),
                _ => unreachable!("a degree-3 vertex has three arms"),
            }
        }
        _ => Err(format!(
            "more than one branch vertex ({} and {})",
            name(branch[0]),
            name(branch[1])
        )),
    }
}

/// Number of vertices on the arm leaving `from` through `first`; the arm is
/// a path because the component has a single branch vertex.
fn arm_length(adj: &[BTreeSet<usize>], from: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, first, 1);
    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

/// Kahn's algorithm on the directed quiver.
fn is_acyclic(q: &Quiver) -> bool {
    let n = q.vertex_count();
    let mut indeg = vec![0usize; n];
    for a in q.arrows() {
        indeg[q.target(a).0] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = ready.pop() {
        removed += 1;
        for a in q.arrows_from(Vertex(v)) {
            let t = q.target(a).0;
            indeg[t] -= 1;
            if indeg[t] == 0 {
                ready.push(t);
            }
        }
    }
    removed == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::trivial_bialgebra;
    use crate::quiver::Builtin;

    fn build(b: Builtin) -> Quiver {
        b.build().unwrap()
    }

    #[test]
    fn sinks_and_sources() {
        let s = build(Builtin::Subspace(3));
        assert_eq!(has_sink_or_source(&s).unwrap(), s.vertex("e").ok());
        let l = build(Builtin::LinearA(4));
        assert_eq!(has_sink_or_source(&l).unwrap(), l.vertex("v1").ok());
        let lp = Quiver::finite(&["e"], &[("a", "e", "e")]).unwrap();
        assert_eq!(has_sink_or_source(&lp).unwrap(), None);
        assert!(has_sink_or_source(&Quiver::ainfinity(3).unwrap()).is_err());
    }

    #[test]
    fn degree_one_closure() {
        let s = build(Builtin::Subspace(3));
        let spec = trivial_bialgebra(&s, s.vertex("e").unwrap(), s.vertex("f1").ok()).unwrap();
        assert_eq!(check_degree1_closure(&spec).unwrap(), None);
        let k = build(Builtin::Kronecker(2));
        let spec = trivial_bialgebra(&k, k.vertex("e").unwrap(), k.vertex("z").ok()).unwrap();
        assert_eq!(check_degree1_closure(&spec).unwrap(), None);

        let lp = Quiver::finite(&["e"], &[("a", "e", "e")]).unwrap();
        let spec = trivial_bialgebra(&lp, Vertex(0), None).unwrap();
        let ce = check_degree1_closure(&spec).unwrap().unwrap();
        assert_eq!((ce.left, ce.right), (Arrow(0), Arrow(0)));
        assert_eq!(ce.term, "a·a = 2*aa");
    }

    fn two_element(n: usize) -> IsotypicMatrix {
        let e = Vertex(0);
        let z = Vertex(1);
        IsotypicMatrix {
            vertex_names: vec!["e".into(), "z".into()],
            monoid: VertexMonoid::Table {
                table: vec![vec![e, z], vec![z, z]],
                identity: e,
            },
            dims: BTreeMap::from([((z, e), n)]),
        }
    }

    #[test]
    fn attach_kronecker() {
        let iso = two_element(3);
        let q = attach_quiver(&iso).unwrap();
        assert_eq!(q, build(Builtin::Kronecker(3)));
        assert_eq!(isotypic_dims(&q, &iso.monoid), iso);
    }

    #[test]
    fn attach_arrowless() {
        let mut iso = two_element(0);
        iso.dims.clear();
        let q = attach_quiver(&iso).unwrap();
        assert_eq!(q.arrow_count(), 0);
        assert_eq!(q.vertex_count(), 2);
    }

    #[test]
    fn attach_ainfinity() {
        let iso = IsotypicMatrix {
            vertex_names: (0..=5).map(|i| format!("g{i}")).collect(),
            monoid: VertexMonoid::Additive { support_bound: 5 },
            dims: (0..5).map(|i| ((Vertex(i + 1), Vertex(i)), 1)).collect(),
        };
        let q = attach_quiver(&iso).unwrap();
        assert_eq!(q, Quiver::ainfinity(5).unwrap());
        assert_eq!(isotypic_dims(&q, &iso.monoid), iso);
    }

    #[test]
    fn attach_rejects_bad_monoid() {
        let mut iso = two_element(1);
        iso.monoid = VertexMonoid::Table {
            table: vec![vec![Vertex(0), Vertex(1)], vec![Vertex(1), Vertex(0)]],
            identity: Vertex(1),
        };
        assert!(attach_quiver(&iso).is_err());
    }

    #[test]
    fn classify_examples() {
        for n in 1..=8 {
            let q = if n == 1 {
                Quiver::finite::<&str>(&["v1"], &[]).unwrap()
            } else {
                build(Builtin::LinearA(n))
            };
            let c = classify_finite_type(&q).unwrap();
            assert_eq!(c.dynkin_types(), [Dynkin::A(n)]);
            assert!(c.finite_type && c.acyclic);
        }
        assert_eq!(
            classify_finite_type(&build(Builtin::LinearA(5)))
                .unwrap()
                .to_string(),
            "A5: finite type"
        );
        let d = classify_finite_type(&build(Builtin::Subspace(3))).unwrap();
        assert_eq!(d.dynkin_types(), [Dynkin::D(4)]);
        let k = classify_finite_type(&build(Builtin::Kronecker(2))).unwrap();
        assert!(!k.finite_type);
        assert!(k.to_string().contains("multiple edge"), "{k}");
    }

    fn tree(arms: &[usize]) -> Quiver {
        let mut vs = vec!["c".to_string()];
        let mut arrows = Vec::new();
        for (i, &len) in arms.iter().enumerate() {
            let mut prev = "c".to_string();
            for k in 0..len {
                let v = format!("x{i}_{k}");
                arrows.push((format!("b{i}_{k}"), prev.clone(), v.clone()));
                vs.push(v.clone());
                prev = v;
            }
        }
        Quiver::finite(&vs, &arrows).unwrap()
    }

    #[test]
    fn branched_shapes() {
        let cases = [
            (vec![1, 1, 1], Some(Dynkin::D(4))),
            (vec![1, 1, 4], Some(Dynkin::D(7))),
            (vec![1, 2, 2], Some(Dynkin::E6)),
            (vec![2, 1, 3], Some(Dynkin::E7)),
            (vec![4, 2, 1], Some(Dynkin::E8)),
            (vec![2, 2, 2], None),
            (vec![1, 2, 5], None),
            (vec![1, 1, 1, 1], None),
        ];
        for (arms, want) in cases {
            let c = classify_finite_type(&tree(&arms)).unwrap();
            assert_eq!(c.dynkin_types().first().copied(), want, "{arms:?}");
            assert_eq!(c.finite_type, want.is_some());
        }
    }

    #[test]
    fn cycles_and_loops() {
        let sq = Quiver::finite(
            &["1", "2", "3", "4"],
            &[
                ("a", "1", "2"),
                ("b", "2", "3"),
                ("c", "3", "4"),
                ("d", "4", "1"),
            ],
        )
        .unwrap();
        let c = classify_finite_type(&sq).unwrap();
        assert!(!c.finite_type && !c.acyclic);
        assert!(c.to_string().contains("cycle"));
        let lp = Quiver::finite(&["e"], &[("a", "e", "e")]).unwrap();
        assert!(classify_finite_type(&lp)
            .unwrap()
            .to_string()
            .contains("loop"));
    }

    #[test]
    fn components_are_separate() {
        let q = Quiver::finite(
            &["1", "2", "3", "4", "5"],
            &[("a", "1", "2"), ("b", "3", "4"), ("c", "5", "4")],
        )
        .unwrap();
        let c = classify_finite_type(&q).unwrap();
        assert_eq!(c.dynkin_types(), [Dynkin::A(2), Dynkin::A(3)]);
        assert_eq!(c.to_string(), "A2 + A3: finite type");
    }
}
