use std::cmp::Ordering;

use super::{Arrow, Vertex};

/// A path stored source-first: `arrows[0]` is traversed first. Rendering is
/// target-first (see [`Quiver::render_path`](super::Quiver::render_path)).
///
/// Canonical order: by length, then lexicographically by arrows, then by
/// source (which only matters for trivial paths).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: Vertex,
    target: Vertex,
    arrows: Vec<Arrow>,
}

impl Path {
    pub(crate) fn from_parts(source: Vertex, target: Vertex, arrows: Vec<Arrow>) -> Path {
        Path {
            source,
            target,
            arrows,
        }
    }

    pub fn trivial(v: Vertex) -> Path {
        Path::from_parts(v, v, Vec::new())
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn target(&self) -> Vertex {
        self.target
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// The vertex when the path is trivial.
    pub fn as_vertex(&self) -> Option<Vertex> {
        self.is_trivial().then_some(self.source)
    }

    pub(crate) fn extend(&self, a: Arrow, new_target: Vertex) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Path::from_parts(self.source, new_target, arrows)
    }

    /// `self ∘ first`: traverse `first`, then `self`. `None` on an endpoint
    /// mismatch.
    pub fn concat(&self, first: &Path) -> Option<Path> {
        if self.source != first.target {
            return None;
        }
        let mut arrows = first.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path::from_parts(first.source, self.target, arrows))
    }

    /// Sub-path made of `arrows[from..to]`; `endpoint` supplies the vertex
    /// reached after the `k`-th arrow (`endpoint(0)` is the source).
    pub(crate) fn slice(&self, from: usize, to: usize, endpoint: impl Fn(usize) -> Vertex) -> Path {
        Path::from_parts(endpoint(from), endpoint(to), self.arrows[from..to].to_vec())
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
