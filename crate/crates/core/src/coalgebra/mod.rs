//! The path coalgebra kQ: comultiplication by splitting paths, the counit
//! on vertices and the length grading.

mod lincomb;

pub use lincomb::LinComb;

use num_traits::{One, Zero};

use crate::quiver::{Path, Quiver, Vertex};
use crate::scalars::RationalFunction;

pub type PathVector = LinComb<Path>;
/// Rank-2 tensors `left ⊗ right`.
pub type Tensor2 = LinComb<(Path, Path)>;
pub type Tensor3 = LinComb<(Path, Path, Path)>;
/// Tensors of arbitrary rank, leftmost factor first.
pub type TensorN = LinComb<Vec<Path>>;

/// Vertex reached after traversing the first `k` arrows of `p`.
pub(crate) fn endpoint(q: &Quiver, p: &Path, k: usize) -> Vertex {
    if k == 0 {
        p.source()
    } else {
        q.target(p.arrows()[k - 1])
    }
}

/// Splits `p` after its first `k` arrows into `(later part, earlier part)`,
/// so that `p = later ∘ earlier`.
pub(crate) fn cut(q: &Quiver, p: &Path, k: usize) -> (Path, Path) {
    let end = |i| endpoint(q, p, i);
    (p.slice(k, p.len(), end), p.slice(0, k, end))
}

/// Δ(p) = t(aₙ)⊗p + Σ aₙ⋯aᵢ₊₁ ⊗ aᵢ⋯a₁ + p⊗s(a₁); Δ(g) = g⊗g.
pub fn delta(q: &Quiver, p: &Path) -> Tensor2 {
    (0..=p.len())
        .map(|k| (cut(q, p, k), RationalFunction::one()))
        .collect()
}

pub fn delta_vec(q: &Quiver, v: &PathVector) -> Tensor2 {
    v.map_linear(|p| delta(q, p))
}

/// ε: coefficient sum over trivial paths.
pub fn counit(v: &PathVector) -> RationalFunction {
    v.iter()
        .filter(|(p, _)| p.is_trivial())
        .map(|(_, c)| c.clone())
        .sum()
}

pub fn counit_path(p: &Path) -> RationalFunction {
    if p.is_trivial() {
        RationalFunction::one()
    } else {
        RationalFunction::zero()
    }
}

/// `(Δ ⊗ id ⊗ ⋯) ∘ ⋯ ∘ Δ` applied `n - 1` times after the first Δ, giving a
/// tensor of rank `n + 1`. Requires `n >= 1`.
pub fn delta_iterated(q: &Quiver, p: &Path, n: usize) -> TensorN {
    assert!(n >= 1, "delta_iterated needs n >= 1");
    let mut acc: TensorN = delta(q, p)
        .iter()
        .map(|((l, r), c)| (vec![l.clone(), r.clone()], c.clone()))
        .collect();
    for _ in 1..n {
        acc = acc.map_linear(|factors| {
            delta(q, &factors[0])
                .iter()
                .map(|((l, r), c)| {
                    let mut next = Vec::with_capacity(factors.len() + 1);
                    next.push(l.clone());
                    next.push(r.clone());
                    next.extend_from_slice(&factors[1..]);
                    (next, c.clone())
                })
                .collect()
        });
    }
    acc
}

/// Projection onto paths of length `n`.
pub fn graded_component(v: &PathVector, n: usize) -> PathVector {
    v.filter(|p| p.len() == n)
}

/// Group-like elements of kQ: the vertices, truncated for rule-based
/// quivers.
pub fn group_likes(q: &Quiver) -> Vec<Vertex> {
    q.vertices()
}

/// `(Δ⊗id)Δ(p)` and `(id⊗Δ)Δ(p)`.
pub fn coassociativity_sides(q: &Quiver, p: &Path) -> (Tensor3, Tensor3) {
    let d = delta(q, p);
    let lhs = d.map_linear(|(l, r)| {
        delta(q, l)
            .iter()
            .map(|((ll, lr), c)| ((ll.clone(), lr.clone(), r.clone()), c.clone()))
            .collect()
    });
    let rhs = d.map_linear(|(l, r)| {
        delta(q, r)
            .iter()
            .map(|((rl, rr), c)| ((l.clone(), rl.clone(), rr.clone()), c.clone()))
            .collect()
    });
    (lhs, rhs)
}

/// `(ε⊗id)Δ(p)` and `(id⊗ε)Δ(p)`.
pub fn counit_sides(q: &Quiver, p: &Path) -> (PathVector, PathVector) {
    let d = delta(q, p);
    let left = d.map_linear(|(l, r)| PathVector::term(r.clone(), counit_path(l)));
    let right = d.map_linear(|(l, r)| PathVector::term(l.clone(), counit_path(r)));
    (left, right)
}

/// Coefficient-first rendering of a linear combination in canonical order.
pub fn render_terms<K: Ord + Clone>(v: &LinComb<K>, key: impl Fn(&K) -> String) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (k, c)) in v.iter().enumerate() {
        let name = key(k);
        let term = if c.is_one() {
            name
        } else if (-c).is_one() {
            format!("-{name}")
        } else if c.is_atomic() {
            format!("{c}*{name}")
        } else {
            format!("({c})*{name}")
        };
        match (i, term.strip_prefix('-')) {
            (0, _) => out.push_str(&term),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
    }
    out
}

pub fn render_vector(q: &Quiver, v: &PathVector) -> String {
    render_terms(v, |p| q.render_path(p))
}

pub fn render_tensor2(q: &Quiver, t: &Tensor2) -> String {
    render_terms(t, |(l, r)| {
        format!("{}⊗{}", q.render_path(l), q.render_path(r))
    })
}

pub fn render_tensor3(q: &Quiver, t: &Tensor3) -> String {
    render_terms(t, |(a, b, c)| {
        format!(
            "{}⊗{}⊗{}",
            q.render_path(a),
            q.render_path(b),
            q.render_path(c)
        )
    })
}
