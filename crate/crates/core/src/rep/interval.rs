use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::representation::Representation;
use crate::error::{Error, Result};
use crate::quiver::{Line, Quiver};

/// `V(i, j)`, in the line coordinates of the quiver (`1..=n` on `linearA n`,
/// `0..=bound` on `A_∞`).
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub i: i64,
    pub j: i64,
}

impl Interval {
    pub fn new(i: i64, j: i64) -> Result<Interval> {
        if i > j {
            return Err(Error::OutOfRange(format!("interval V({i},{j}) is empty")));
        }
        Ok(Interval { i, j })
    }

    pub fn len(&self) -> usize {
        (self.j - self.i + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V({},{})", self.i, self.j)
    }
}

/// Multiplicities of interval summands.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalMultiset {
    pub multiplicities: BTreeMap<Interval, usize>,
}

impl IntervalMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(iv: Interval) -> Self {
        Self::from_pairs([(iv, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Interval, usize)>) -> Self {
        let mut m = Self::new();
        for (iv, k) in pairs {
            m.add(iv, k);
        }
        m
    }

    pub fn add(&mut self, iv: Interval, k: usize) {
        if k > 0 {
            *self.multiplicities.entry(iv).or_insert(0) += k;
        }
    }

    pub fn mult(&self, iv: Interval) -> usize {
        self.multiplicities.get(&iv).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.multiplicities.iter().map(|(iv, k)| iv.len() * k).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Interval, usize)> + '_ {
        self.multiplicities.iter().map(|(&iv, &k)| (iv, k))
    }
}

impl fmt::Display for IntervalMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicities.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(iv, k)| {
                if k == 1 {
                    iv.to_string()
                } else {
                    format!("{iv}^{k}")
                }
            })
            .collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

fn line_of(q: &Quiver) -> Result<Line> {
    q.line().ok_or_else(|| {
        Error::UnsupportedShape("interval decompositions need an equioriented type-A line".into())
    })
}

/// The interval representation: `k` on the vertices with coordinates
/// `i..=j`, identity maps between them. Basis labels are `e<coordinate>`.
pub fn interval_module(q: &Quiver, iv: Interval) -> Result<Representation> {
    let line = line_of(q)?;
    if line.vertex_at(iv.i).is_none() || line.vertex_at(iv.j).is_none() || iv.i > iv.j {
        return Err(Error::OutOfRange(format!(
            "{iv} does not fit on coordinates {}..={}",
            line.first,
            line.last()
        )));
    }
    let mut dims = BTreeMap::new();
    let mut labels = BTreeMap::new();
    let mut mats = BTreeMap::new();
    for c in iv.i..=iv.j {
        let v = line.vertex_at(c).expect("inside the line");
        dims.insert(v, 1);
        labels.insert(v, vec![format!("e{c}")]);
        if c < iv.j {
            let a = line.arrow_at(c).expect("inside the line");
            mats.insert(a, Matrix::identity(1));
        }
    }
    Representation::new(q.clone(), dims, mats, labels)
}

/// `r(i, j)`: rank of the composite map from coordinate `i` to `j`, for
/// `i <= j` inside the support range. Zero entries are omitted.
pub fn rank_invariant(v: &Representation) -> Result<BTreeMap<(i64, i64), usize>> {
    let line = line_of(v.quiver())?;
    let coords: Vec<i64> = v
        .support()
        .into_iter()
        .map(|g| line.coordinate(g).expect("line covers the quiver"))
        .collect();
    let mut out = BTreeMap::new();
    let (Some(&lo), Some(&hi)) = (coords.iter().min(), coords.iter().max()) else {
        return Ok(out);
    };
    for i in lo..=hi {
        let g = line.vertex_at(i).expect("inside the line");
        let mut m = Matrix::identity(v.dim(g));
        for j in i..=hi {
            let r = m.rank();
            if r == 0 {
                break;
            }
            out.insert((i, j), r);
            if j < hi {
                let a = line.arrow_at(j).expect("inside the line");
                m = &v.mat(a) * &m;
            }
        }
    }
    Ok(out)
}

/// Interval multiplicities from the rank formula
/// `μ(i,j) = r(i,j) − r(i−1,j) − r(i,j+1) + r(i−1,j+1)`.
pub fn barcode_decompose(v: &Representation) -> Result<IntervalMultiset> {
    let r = rank_invariant(v)?;
    let rank = |i: i64, j: i64| r.get(&(i, j)).copied().unwrap_or(0) as i64;
    let mut out = IntervalMultiset::new();
    for &(i, j) in r.keys() {
        let mu = rank(i, j) - rank(i - 1, j) - rank(i, j + 1) + rank(i - 1, j + 1);
        if mu < 0 {
            return Err(Error::UnsupportedShape(format!(
                "negative multiplicity {mu} for V({i},{j})"
            )));
        }
        out.add(Interval { i, j }, mu as usize);
    }
    Ok(out)
}

/// Direct sum of interval modules with the given multiplicities.
pub fn intervals_direct_sum(q: &Quiver, m: &IntervalMultiset) -> Result<Representation> {
    let mut acc = Representation::zero(q.clone());
    for (iv, k) in m.iter() {
        let part = interval_module(q, iv)?;
        for _ in 0..k {
            acc = acc.direct_sum(&part)?;
        }
    }
    Ok(acc)
}

/// Isomorphism of representations of a line, by equality of rank
/// invariants.
pub fn is_isomorphic(a: &Representation, b: &Representation) -> Result<bool> {
    if a.quiver() != b.quiver() {
        return Ok(false);
    }
    Ok(rank_invariant(a)? == rank_invariant(b)?)
}
