use crate::error::{Error, Result};
use crate::quiver::{Quiver, Vertex};

/// A monoid structure on the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexMonoid {
    /// Full multiplication table; `table[g][h] = g·h`.
    Table {
        table: Vec<Vec<Vertex>>,
        identity: Vertex,
    },
    /// `g_i · g_j = g_{i+j}` on `g_0..=g_{support_bound}`, identity `g_0`.
    /// Products leaving the truncation are errors.
    Additive { support_bound: usize },
}

impl VertexMonoid {
    pub fn identity(&self) -> Vertex {
        match self {
            VertexMonoid::Table { identity, .. } => *identity,
            VertexMonoid::Additive { .. } => Vertex(0),
        }
    }

    pub fn element_count(&self) -> usize {
        match self {
            VertexMonoid::Table { table, .. } => table.len(),
            VertexMonoid::Additive { support_bound } => support_bound + 1,
        }
    }

    pub fn product(&self, g: Vertex, h: Vertex) -> Result<Vertex> {
        match self {
            VertexMonoid::Table { table, .. } => table
                .get(g.0)
                .and_then(|row| row.get(h.0))
                .copied()
                .ok_or_else(|| {
                    Error::InvalidMonoid(format!("product of #{} and #{} is undefined", g.0, h.0))
                }),
            VertexMonoid::Additive { support_bound } => {
                let k = g.0 + h.0;
                if k > *support_bound {
                    Err(Error::BoundExceeded {
                        bound: *support_bound,
                        detail: format!("g{} * g{} = g{k}", g.0, h.0),
                    })
                } else {
                    Ok(Vertex(k))
                }
            }
        }
    }

    /// Product of a sequence; the identity for an empty one.
    pub fn product_all(&self, items: impl IntoIterator<Item = Vertex>) -> Result<Vertex> {
        items
            .into_iter()
            .try_fold(self.identity(), |acc, g| self.product(acc, g))
    }
}

/// Checks totality, the identity law and associativity over all triples.
/// Vertex names for error messages come from `q`.
pub fn validate_monoid(m: &VertexMonoid, q: &Quiver) -> Result<()> {
    let name = |v: Vertex| q.vertex_name(v);
    let (table, identity) = match m {
        VertexMonoid::Additive { support_bound } => {
            return match q.support_bound() {
                Some(b) if b == *support_bound => Ok(()),
                _ => Err(Error::InvalidMonoid(format!(
                    "additive monoid truncated at {support_bound} does not match the quiver"
                ))),
            };
        }
        VertexMonoid::Table { table, identity } => (table, *identity),
    };
    let n = q.vertex_count();
    if table.len() != n || table.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidMonoid(format!(
            "multiplication table must be {n} x {n}"
        )));
    }
    if identity.0 >= n {
        return Err(Error::InvalidMonoid("identity is not a vertex".into()));
    }
    for (g, row) in table.iter().enumerate() {
        for (h, &gh) in row.iter().enumerate() {
            if gh.0 >= n {
                return Err(Error::InvalidMonoid(format!(
                    "{} * {} is not a vertex",
                    name(Vertex(g)),
                    name(Vertex(h))
                )));
            }
        }
    }
    for g in q.vertices() {
        if table[identity.0][g.0] != g || table[g.0][identity.0] != g {
            return Err(Error::InvalidMonoid(format!(
                "identity law fails at {}: {0}*{1} = {2}, {1}*{0} = {3}",
                name(identity),
                name(g),
                name(table[identity.0][g.0]),
                name(table[g.0][identity.0])
            )));
        }
    }
    for g in q.vertices() {
        for h in q.vertices() {
            for k in q.vertices() {
                let left = table[table[g.0][h.0].0][k.0];
                let right = table[g.0][table[h.0][k.0].0];
                if left != right {
                    return Err(Error::InvalidMonoid(format!(
                        "not associative at ({}, {}, {}): ({0}*{1})*{2} = {3} but {0}*({1}*{2}) = {4}",
                        name(g),
                        name(h),
                        name(k),
                        name(left),
                        name(right)
                    )));
                }
            }
        }
    }
    Ok(())
}
