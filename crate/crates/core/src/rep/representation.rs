use std::collections::BTreeMap;

use num_traits::Zero;

use super::matrix::Matrix;
use crate::coalgebra::{render_terms, LinComb};
use crate::error::{Error, Result};
use crate::quiver::{Arrow, Path, Quiver, Vertex};
use crate::scalars::{BigRational, RationalFunction};

/// A finite-dimensional representation: a vector space per vertex and a
/// matrix per arrow. Vertices and arrows without entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    quiver: Quiver,
    dims: BTreeMap<Vertex, usize>,
    mats: BTreeMap<Arrow, Matrix>,
    labels: BTreeMap<Vertex, Vec<String>>,
}

impl Representation {
    /// Checks that every matrix has shape `dims(target) × dims(source)`.
    /// Zero dimensions and zero matrices are dropped; missing labels default
    /// to `<vertex>_<k>`.
    pub fn new(
        quiver: Quiver,
        dims: BTreeMap<Vertex, usize>,
        mats: BTreeMap<Arrow, Matrix>,
        labels: BTreeMap<Vertex, Vec<String>>,
    ) -> Result<Representation> {
        let dims: BTreeMap<Vertex, usize> = dims.into_iter().filter(|&(_, d)| d > 0).collect();
        for &v in dims.keys() {
            quiver.check_vertex(v)?;
        }
        let dim = |v: Vertex| dims.get(&v).copied().unwrap_or(0);
        let mut kept = BTreeMap::new();
        for (a, m) in mats {
            quiver.check_arrow(a)?;
            let want = (dim(quiver.target(a)), dim(quiver.source(a)));
            if m.shape() != want {
                return Err(Error::InvalidRepresentation(format!(
                    "matrix for {} is {}x{} but must be {}x{}",
                    quiver.arrow_name(a),
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                )));
            }
            if !m.is_zero() {
                kept.insert(a, m);
            }
        }
        let mut all_labels = BTreeMap::new();
        for (&v, &d) in &dims {
            let ls = match labels.get(&v) {
                Some(ls) if ls.len() == d => ls.clone(),
                Some(ls) => {
                    return Err(Error::InvalidRepresentation(format!(
                        "{} labels given for {} of dimension {d}",
                        ls.len(),
                        quiver.vertex_name(v)
                    )))
                }
                None => (1..=d)
                    .map(|k| format!("{}_{k}", quiver.vertex_name(v)))
                    .collect(),
            };
            all_labels.insert(v, ls);
        }
        for v in labels.keys() {
            if !dims.contains_key(v) && !labels[v].is_empty() {
                return Err(Error::InvalidRepresentation(format!(
                    "labels given for {} of dimension 0",
                    quiver.vertex_name(*v)
                )));
            }
        }
        Ok(Representation {
            quiver,
            dims,
            mats: kept,
            labels: all_labels,
        })
    }

    pub fn zero(quiver: Quiver) -> Representation {
        Representation {
            quiver,
            dims: BTreeMap::new(),
            mats: BTreeMap::new(),
            labels: BTreeMap::new(),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dim(&self, v: Vertex) -> usize {
        self.dims.get(&v).copied().unwrap_or(0)
    }

    /// Nonzero vertex dimensions.
    pub fn dims(&self) -> &BTreeMap<Vertex, usize> {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn support(&self) -> Vec<Vertex> {
        self.dims.keys().copied().collect()
    }

    /// Matrix of `a`, zero of the right shape when unset.
    pub fn mat(&self, a: Arrow) -> Matrix {
        self.mats.get(&a).cloned().unwrap_or_else(|| {
            Matrix::zeros(
                self.dim(self.quiver.target(a)),
                self.dim(self.quiver.source(a)),
            )
        })
    }

    /// Nonzero arrow matrices.
    pub fn mats(&self) -> &BTreeMap<Arrow, Matrix> {
        &self.mats
    }

    pub fn labels(&self, v: Vertex) -> &[String] {
        self.labels.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn all_labels(&self) -> &BTreeMap<Vertex, Vec<String>> {
        &self.labels
    }

    /// Copy with the basis at each vertex relabelled.
    pub fn with_labels(&self, labels: BTreeMap<Vertex, Vec<String>>) -> Result<Representation> {
        Representation::new(
            self.quiver.clone(),
            self.dims.clone(),
            self.mats.clone(),
            labels,
        )
    }

    /// `V_p = V_{aₙ}⋯V_{a₁}`; the identity on `V_g` for a trivial path.
    pub fn apply_path(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.dim(p.source()));
        for &a in p.arrows() {
            m = &self.mat(a) * &m;
        }
        m
    }

    /// Evaluates every entry at `q = q0`.
    pub fn specialize(&self, q0: &BigRational) -> Result<Representation> {
        let mats = self
            .mats
            .iter()
            .map(|(&a, m)| Ok((a, m.specialize(q0)?)))
            .collect::<Result<_>>()?;
        Representation::new(
            self.quiver.clone(),
            self.dims.clone(),
            mats,
            self.labels.clone(),
        )
    }

    /// Direct sum; bases are concatenated at each vertex.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.quiver != other.quiver {
            return Err(Error::InvalidRepresentation(
                "direct sum of representations of different quivers".into(),
            ));
        }
        let mut dims = self.dims.clone();
        for (&v, &d) in &other.dims {
            *dims.entry(v).or_insert(0) += d;
        }
        let arrows: std::collections::BTreeSet<Arrow> =
            self.mats.keys().chain(other.mats.keys()).copied().collect();
        let mats = arrows
            .into_iter()
            .map(|a| (a, self.mat(a).block_diag(&other.mat(a))))
            .collect();
        let mut labels: BTreeMap<Vertex, Vec<String>> = BTreeMap::new();
        for (&v, &d) in &dims {
            let mut ls: Vec<String> = self.labels(v).to_vec();
            ls.extend(other.labels(v).iter().cloned());
            let mut seen = std::collections::BTreeSet::new();
            if ls.len() != d || !ls.iter().all(|l| seen.insert(l.clone())) {
                ls = (1..=d)
                    .map(|k| format!("{}_{k}", self.quiver.vertex_name(v)))
                    .collect();
            }
            labels.insert(v, ls);
        }
        Representation::new(self.quiver.clone(), dims, mats, labels)
    }
}

/// Result of the local nilpotency test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    Nilpotent,
    /// A path of length at least the total dimension acting nonzero.
    NotNilpotent {
        witness: Path,
    },
}

/// Iterates `U₀ = V`, `U_{n+1} = Σ_a V_a(U_n)`, so that `U_n` is the sum
/// of the images of all paths of length `n`. The representation is locally
/// nilpotent exactly when `U_D = 0` for `D` the total dimension.
pub fn is_locally_nilpotent(v: &Representation) -> Result<Nilpotency> {
    let q = v.quiver();
    let total = v.total_dim();
    let mut u: BTreeMap<Vertex, Matrix> = v
        .dims()
        .iter()
        .map(|(&g, &d)| (g, Matrix::identity(d)))
        .collect();
    for _ in 0..total {
        let mut next: BTreeMap<Vertex, Matrix> = BTreeMap::new();
        for (&g, basis) in &u {
            for a in q.arrows_from(g) {
                let t = q.target(a);
                let img = &v.mat(a) * basis;
                let acc = next
                    .remove(&t)
                    .unwrap_or_else(|| Matrix::zeros(v.dim(t), 0));
                next.insert(t, acc.hstack(&img));
            }
        }
        u = next
            .into_iter()
            .map(|(g, m)| (g, m.column_basis()))
            .filter(|(_, m)| m.cols() > 0)
            .collect();
        if u.is_empty() {
            return Ok(Nilpotency::Nilpotent);
        }
    }
    if u.is_empty() {
        return Ok(Nilpotency::Nilpotent);
    }
    let witness = nonzero_path(v, total.max(1)).ok_or_else(|| {
        Error::InvalidRepresentation("nonzero image without a nonzero path".into())
    })?;
    Ok(Nilpotency::NotNilpotent { witness })
}

/// Depth-first search for a path of the given length with nonzero action.
fn nonzero_path(v: &Representation, len: usize) -> Option<Path> {
    fn go(v: &Representation, p: Path, m: Matrix, left: usize) -> Option<Path> {
        if m.is_zero() {
            return None;
        }
        if left == 0 {
            return Some(p);
        }
        let q = v.quiver();
        for a in q.arrows_from(p.target()) {
            let next = q.concat(&q.arrow_path(a), &p).ok()?;
            let nm = &v.mat(a) * &m;
            if let Some(found) = go(v, next, nm, left - 1) {
                return Some(found);
            }
        }
        None
    }
    v.support()
        .into_iter()
        .find_map(|g| go(v, Path::trivial(g), Matrix::identity(v.dim(g)), len))
}

/// A basis vector `(vertex, index)` tensored with a path.
pub type ComoduleTerms = LinComb<(Path, usize)>;

/// `δ(x) = Σ_p V_p(x) ⊗ p` over paths out of the vertex of `x`, truncated
/// at `max_len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleImage {
    pub terms: ComoduleTerms,
    /// No path of length `max_len + 1` acts nonzero, so every longer path
    /// vanishes as well and `terms` is the whole coaction.
    pub exhaustive: bool,
}

impl ComoduleImage {
    /// Renders as `e1⊗v1 + e2⊗a1 + ...` using the basis labels of `v`.
    pub fn render(&self, v: &Representation) -> String {
        render_terms(&self.terms, |(p, k)| {
            let label = v
                .labels(p.target())
                .get(*k)
                .cloned()
                .unwrap_or_else(|| format!("#{k}"));
            format!("{label}⊗{}", v.quiver().render_path(p))
        })
    }
}

pub fn comodule_map(
    v: &Representation,
    g: Vertex,
    index: usize,
    max_len: usize,
) -> Result<ComoduleImage> {
    let q = v.quiver();
    q.check_vertex(g)?;
    if index >= v.dim(g) {
        return Err(Error::OutOfRange(format!(
            "basis index {index} at {} of dimension {}",
            q.vertex_name(g),
            v.dim(g)
        )));
    }
    let mut start = Matrix::zeros(v.dim(g), 1);
    start.set(index, 0, RationalFunction::from_int(1));
    let mut terms = ComoduleTerms::zero();
    let mut exhaustive = true;
    let mut stack = vec![(Path::trivial(g), start)];
    while let Some((p, x)) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        if p.len() > max_len {
            exhaustive = false;
            continue;
        }
        for k in 0..x.rows() {
            let c = x.get(k, 0);
            if !c.is_zero() {
                terms.add_term((p.clone(), k), c.clone());
            }
        }
        for a in q.arrows_from(p.target()) {
            let next = q.concat(&q.arrow_path(a), &p)?;
            stack.push((next, &v.mat(a) * &x));
        }
    }
    Ok(ComoduleImage { terms, exhaustive })
}
