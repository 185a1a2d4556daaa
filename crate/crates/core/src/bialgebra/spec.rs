use std::collections::BTreeMap;

use super::monoid::{validate_monoid, VertexMonoid};
use crate::coalgebra::PathVector;
use crate::error::{Error, Result};
use crate::quiver::{Arrow, Quiver, Vertex};
use crate::scalars::RationalFunction;

/// A kQ₀-bimodule structure on the arrow space kQ₁.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BimoduleAction {
    /// Explicit tables; missing entries act as zero. Every stored vector is
    /// supported on arrows.
    Table {
        left: BTreeMap<(Vertex, Arrow), PathVector>,
        right: BTreeMap<(Arrow, Vertex), PathVector>,
    },
    /// The `A_∞` rule `g_i.a_j = a_{i+j}`, `a_j.g_i = q^i a_{i+j}`.
    QuantumPlane,
}

/// A quiver with a vertex monoid and a bimodule action on its arrows: the
/// data determining a graded bialgebra structure on kQ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraSpec {
    pub quiver: Quiver,
    pub monoid: VertexMonoid,
    pub action: BimoduleAction,
}

impl BialgebraSpec {
    pub fn identity(&self) -> Vertex {
        self.monoid.identity()
    }

    pub fn vertex_product(&self, g: Vertex, h: Vertex) -> Result<Vertex> {
        self.monoid.product(g, h)
    }

    fn rule_arrow(&self, i: usize, j: usize) -> Result<Arrow> {
        self.quiver.check_arrow(Arrow(i + j))
    }

    /// `g.a`
    pub fn left(&self, g: Vertex, a: Arrow) -> Result<PathVector> {
        match &self.action {
            BimoduleAction::Table { left, .. } => {
                Ok(left.get(&(g, a)).cloned().unwrap_or_default())
            }
            BimoduleAction::QuantumPlane => {
                let b = self.rule_arrow(g.0, a.0)?;
                Ok(PathVector::basis(self.quiver.arrow_path(b)))
            }
        }
    }

    /// `a.g`
    pub fn right(&self, a: Arrow, g: Vertex) -> Result<PathVector> {
        match &self.action {
            BimoduleAction::Table { right, .. } => {
                Ok(right.get(&(a, g)).cloned().unwrap_or_default())
            }
            BimoduleAction::QuantumPlane => {
                let b = self.rule_arrow(g.0, a.0)?;
                Ok(PathVector::term(
                    self.quiver.arrow_path(b),
                    RationalFunction::q_pow(g.0),
                ))
            }
        }
    }

    /// `g.v` for a vector of arrows.
    pub fn left_vec(&self, g: Vertex, v: &PathVector) -> Result<PathVector> {
        v.try_map_linear(|p| self.left(g, single_arrow(p)?))
    }

    /// `v.g` for a vector of arrows.
    pub fn right_vec(&self, v: &PathVector, g: Vertex) -> Result<PathVector> {
        v.try_map_linear(|p| self.right(single_arrow(p)?, g))
    }

    pub fn validate(&self) -> Result<()> {
        self.quiver.validate()?;
        validate_monoid(&self.monoid, &self.quiver)?;
        validate_bimodule(self)
    }
}

fn single_arrow(p: &crate::quiver::Path) -> Result<Arrow> {
    match p.arrows() {
        [a] => Ok(*a),
        _ => Err(Error::InvalidBimodule(
            "action values must be combinations of arrows".into(),
        )),
    }
}

/// Skips combinations that leave the truncation of a rule-based quiver.
fn within<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::BoundExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Checks the bimodule axioms and that the action maps are bicomodule maps,
/// over every vertex/arrow combination inside the quiver.
pub fn validate_bimodule(spec: &BialgebraSpec) -> Result<()> {
    let q = &spec.quiver;
    let vname = |v: Vertex| q.vertex_name(v);
    let aname = |a: Arrow| q.arrow_name(a);
    let render = |v: &PathVector| crate::coalgebra::render_vector(q, v);
    let fail = |msg: String| Err(Error::InvalidBimodule(msg));

    if let BimoduleAction::Table { left, right } = &spec.action {
        for ((g, a), v) in left {
            q.check_vertex(*g)?;
            q.check_arrow(*a)?;
            if v.keys().any(|p| p.len() != 1) {
                return fail(format!(
                    "{}.{} is not a combination of arrows",
                    vname(*g),
                    aname(*a)
                ));
            }
        }
        for ((a, g), v) in right {
            q.check_vertex(*g)?;
            q.check_arrow(*a)?;
            if v.keys().any(|p| p.len() != 1) {
                return fail(format!(
                    "{}.{} is not a combination of arrows",
                    aname(*a),
                    vname(*g)
                ));
            }
        }
    }

    let e = spec.identity();
    let vertices = q.vertices();
    let arrows = q.arrows();

    for &a in &arrows {
        let ap = PathVector::basis(q.arrow_path(a));
        if spec.left(e, a)? != ap {
            return fail(format!("unit: {}.{} != {}", vname(e), aname(a), aname(a)));
        }
        if spec.right(a, e)? != ap {
            return fail(format!("unit: {}.{} != {}", aname(a), vname(e), aname(a)));
        }
    }

    // bicomodule-map condition
    for &g in &vertices {
        for &a in &arrows {
            let (s, t) = (q.source(a), q.target(a));
            if let Some(v) = within(spec.left(g, a))? {
                for b in v.keys() {
                    let want = (
                        within(spec.vertex_product(g, s))?,
                        within(spec.vertex_product(g, t))?,
                    );
                    if want != (Some(b.source()), Some(b.target())) {
                        return fail(format!(
                            "bicomodule map: {} occurs in {}.{} but its endpoints are not {}*{} -> {}*{}",
                            q.render_path(b),
                            vname(g),
                            aname(a),
                            vname(g),
                            vname(s),
                            vname(g),
                            vname(t)
                        ));
                    }
                }
            }
            if let Some(v) = within(spec.right(a, g))? {
                for b in v.keys() {
                    let want = (
                        within(spec.vertex_product(s, g))?,
                        within(spec.vertex_product(t, g))?,
                    );
                    if want != (Some(b.source()), Some(b.target())) {
                        return fail(format!(
                            "bicomodule map: {} occurs in {}.{} but its endpoints are not {}*{} -> {}*{}",
                            q.render_path(b),
                            aname(a),
                            vname(g),
                            vname(s),
                            vname(g),
                            vname(t),
                            vname(g)
                        ));
                    }
                }
            }
        }
    }

    for &g in &vertices {
        for &h in &vertices {
            let Some(gh) = within(spec.vertex_product(g, h))? else {
                continue;
            };
            for &a in &arrows {
                // (gh).a = g.(h.a)
                if let (Some(l), Some(r)) = (
                    within(spec.left(gh, a))?,
                    within(spec.left(h, a).and_then(|v| spec.left_vec(g, &v)))?,
                ) {
                    if l != r {
                        return fail(format!(
                            "left module: ({0}*{1}).{2} = {3} but {0}.({1}.{2}) = {4}",
                            vname(g),
                            vname(h),
                            aname(a),
                            render(&l),
                            render(&r)
                        ));
                    }
                }
                // a.(gh) = (a.g).h
                if let (Some(l), Some(r)) = (
                    within(spec.right(a, gh))?,
                    within(spec.right(a, g).and_then(|v| spec.right_vec(&v, h)))?,
                ) {
                    if l != r {
                        return fail(format!(
                            "right module: {2}.({0}*{1}) = {3} but ({2}.{0}).{1} = {4}",
                            vname(g),
                            vname(h),
                            aname(a),
                            render(&l),
                            render(&r)
                        ));
                    }
                }
                // (g.a).h = g.(a.h)
                if let (Some(l), Some(r)) = (
                    within(spec.left(g, a).and_then(|v| spec.right_vec(&v, h)))?,
                    within(spec.right(a, h).and_then(|v| spec.left_vec(g, &v)))?,
                ) {
                    if l != r {
                        return fail(format!(
                            "bimodule: ({0}.{2}).{1} = {3} but {0}.({2}.{1}) = {4}",
                            vname(g),
                            vname(h),
                            aname(a),
                            render(&l),
                            render(&r)
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The construction with identity `e` and absorbing `z`: every product of
/// two vertices other than `e` is `z`, `e` acts as the identity on arrows
/// and every other vertex acts as zero. A single-vertex quiver gets the
/// trivial group and `z` must be absent.
pub fn trivial_bialgebra(q: &Quiver, e: Vertex, z: Option<Vertex>) -> Result<BialgebraSpec> {
    if !q.is_finite() {
        return Err(Error::UnsupportedShape(
            "the identity/zero construction needs a finite quiver".into(),
        ));
    }
    q.check_vertex(e)?;
    let n = q.vertex_count();
    let table = match (n, z) {
        (1, None) => vec![vec![e]],
        (1, Some(_)) => {
            return Err(Error::Domain(
                "a single-vertex quiver takes no zero element".into(),
            ))
        }
        (_, None) => {
            return Err(Error::Domain(
                "a zero element is required when there are at least two vertices".into(),
            ))
        }
        (_, Some(z)) => {
            q.check_vertex(z)?;
            if z == e {
                return Err(Error::Domain(
                    "the zero element must differ from the identity".into(),
                ));
            }
            q.vertices()
                .into_iter()
                .map(|g| {
                    q.vertices()
                        .into_iter()
                        .map(|h| {
                            if g == e {
                                h
                            } else if h == e {
                                g
                            } else {
                                z
                            }
                        })
                        .collect()
                })
                .collect()
        }
    };
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    for a in q.arrows() {
        let ap = PathVector::basis(q.arrow_path(a));
        left.insert((e, a), ap.clone());
        right.insert((a, e), ap);
    }
    Ok(BialgebraSpec {
        quiver: q.clone(),
        monoid: VertexMonoid::Table { table, identity: e },
        action: BimoduleAction::Table { left, right },
    })
}

/// The quantum-plane structure on `A_∞`, truncated at `support_bound`.
pub fn ainf_bialgebra(support_bound: usize) -> Result<BialgebraSpec> {
    Ok(BialgebraSpec {
        quiver: Quiver::ainfinity(support_bound)?,
        monoid: VertexMonoid::Additive { support_bound },
        action: BimoduleAction::QuantumPlane,
    })
}

/// Removes zero vectors from an action table (they are equivalent to
/// missing entries).
pub(crate) fn prune<K: Ord>(map: BTreeMap<K, PathVector>) -> BTreeMap<K, PathVector> {
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Builtin;

    fn kronecker(n: usize) -> Quiver {
        Builtin::Kronecker(n).build().unwrap()
    }

    #[test]
    fn trivial_construction_validates() {
        let q = kronecker(2);
        let spec = trivial_bialgebra(&q, q.vertex("e").unwrap(), q.vertex("z").ok()).unwrap();
        spec.validate().unwrap();
        let s = Builtin::Subspace(3).build().unwrap();
        trivial_bialgebra(&s, s.vertex("e").unwrap(), s.vertex("f1").ok())
            .unwrap()
            .validate()
            .unwrap();
    }

    #[test]
    fn trivial_construction_preconditions() {
        let q = kronecker(2);
        let e = q.vertex("e").unwrap();
        assert!(trivial_bialgebra(&q, e, Some(e)).is_err());
        assert!(trivial_bialgebra(&q, e, None).is_err());
        let l = Quiver::finite(&["e"], &[("a", "e", "e")]).unwrap();
        assert!(trivial_bialgebra(&l, Vertex(0), Some(Vertex(0))).is_err());
        let spec = trivial_bialgebra(&l, Vertex(0), None).unwrap();
        spec.validate().unwrap();
        assert!(trivial_bialgebra(&Quiver::ainfinity(3).unwrap(), Vertex(0), None).is_err());
    }

    #[test]
    fn zero_element_is_absorbing() {
        let q = Builtin::Subspace(2).build().unwrap();
        let (e, z) = (q.vertex("e").unwrap(), q.vertex("f1").unwrap());
        let spec = trivial_bialgebra(&q, e, Some(z)).unwrap();
        for g in q.vertices() {
            assert_eq!(spec.vertex_product(g, z).unwrap(), z);
            assert_eq!(spec.vertex_product(z, g).unwrap(), z);
        }
        assert_eq!(spec.vertex_product(z, z).unwrap(), z);
    }

    #[test]
    fn quantum_plane_action() {
        let spec = ainf_bialgebra(8).unwrap();
        spec.validate().unwrap();
        let q = &spec.quiver;
        let a5 = q.arrow_path(Arrow(5));
        assert_eq!(
            spec.left(Vertex(2), Arrow(3)).unwrap(),
            PathVector::basis(a5.clone())
        );
        assert_eq!(
            spec.right(Arrow(3), Vertex(2)).unwrap(),
            PathVector::term(a5, RationalFunction::q_pow(2))
        );
        for a in q.arrows() {
            let ap = PathVector::basis(q.arrow_path(a));
            assert_eq!(spec.left(Vertex(0), a).unwrap(), ap);
            assert_eq!(spec.right(a, Vertex(0)).unwrap(), ap);
        }
    }

    #[test]
    fn wrong_endpoints_are_rejected() {
        let q = Quiver::finite(&["e", "z", "g"], &[("a", "e", "z"), ("b", "g", "z")]).unwrap();
        let (e, z, g) = (Vertex(0), Vertex(1), Vertex(2));
        let mut spec = trivial_bialgebra(&q, e, Some(z)).unwrap();
        if let BimoduleAction::Table { left, .. } = &mut spec.action {
            // g.a must go from g*e = g to g*z = z; a itself goes e -> z
            left.insert((g, Arrow(0)), PathVector::basis(q.arrow_path(Arrow(0))));
        }
        let err = spec.validate().unwrap_err();
        let Error::InvalidBimodule(msg) = err else {
            panic!("wrong error: {err}")
        };
        assert!(msg.contains("bicomodule map"), "{msg}");
    }

    #[test]
    fn non_arrow_values_are_rejected() {
        let q = kronecker(1);
        let (e, z) = (Vertex(0), Vertex(1));
        let mut spec = trivial_bialgebra(&q, e, Some(z)).unwrap();
        if let BimoduleAction::Table { left, .. } = &mut spec.action {
            left.insert(
                (z, Arrow(0)),
                PathVector::basis(crate::quiver::Path::trivial(z)),
            );
        }
        assert!(matches!(spec.validate(), Err(Error::InvalidBimodule(_))));
    }

    #[test]
    fn prune_drops_zero_entries() {
        let mut m = BTreeMap::new();
        m.insert(1, PathVector::zero());
        m.insert(
            2,
            PathVector::basis(crate::quiver::Path::trivial(Vertex(0))),
        );
        assert_eq!(prune(m).len(), 1);
    }
}
