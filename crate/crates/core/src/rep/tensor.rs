//! Tensor products of representations through the coaction
//! `u ⊗ v ↦ u₀ ⊗ v₀ ⊗ u₁v₁`, and the tables built from them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::interval::{barcode_decompose, interval_module, Interval, IntervalMultiset};
use super::matrix::Matrix;
use super::representation::{comodule_map, ComoduleTerms, Representation};
use crate::bialgebra::{shuffle_product, BialgebraSpec, CheckResult};
use crate::error::{Error, Result};
use crate::quiver::{Arrow, Vertex};

/// Basis element `u ⊗ v` of `(V⊗W)_{gh}`: `u` is the `ui`-th vector of
/// `V_g`, `v` the `vi`-th of `W_h`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct PairBasis {
    g: Vertex,
    h: Vertex,
    ui: usize,
    vi: usize,
}

struct TensorBasis {
    /// Basis of each vertex space, in order.
    spaces: BTreeMap<Vertex, Vec<PairBasis>>,
    index: BTreeMap<PairBasis, (Vertex, usize)>,
}

fn tensor_basis(
    spec: &BialgebraSpec,
    v: &Representation,
    w: &Representation,
) -> Result<TensorBasis> {
    let mut spaces: BTreeMap<Vertex, Vec<PairBasis>> = BTreeMap::new();
    for (&g, &dg) in v.dims() {
        for (&h, &dh) in w.dims() {
            let x = spec.vertex_product(g, h)?;
            for ui in 0..dg {
                for vi in 0..dh {
                    spaces
                        .entry(x)
                        .or_default()
                        .push(PairBasis { g, h, ui, vi });
                }
            }
        }
    }
    let mut index = BTreeMap::new();
    for (&x, basis) in &mut spaces {
        basis.sort();
        for (k, &b) in basis.iter().enumerate() {
            index.insert(b, (x, k));
        }
    }
    Ok(TensorBasis { spaces, index })
}

/// On a truncated rule-based quiver, the product of the supports plus one
/// arrow must stay inside the truncation.
fn check_room(spec: &BialgebraSpec, v: &Representation, w: &Representation) -> Result<()> {
    let Some(bound) = spec.quiver.support_bound() else {
        return Ok(());
    };
    let top = |r: &Representation| r.support().last().map_or(0, |g| g.0);
    let need = top(v) + top(w) + 1;
    if need > bound {
        return Err(Error::BoundExceeded {
            bound,
            detail: format!("tensor product needs support bound >= {need}"),
        });
    }
    Ok(())
}

/// `V ⊗ W` with `(V⊗W)_x = ⊕_{gh=x} V_g ⊗ W_h`. The arrow maps are the
/// degree-one part of the product coaction:
/// `u⊗v ↦ Σ_b V_b(u)⊗v⊗(b.h) + Σ_c u⊗W_c(v)⊗(g.c)`.
pub fn tensor_representations(
    spec: &BialgebraSpec,
    v: &Representation,
    w: &Representation,
) -> Result<Representation> {
    let q = &spec.quiver;
    if v.quiver() != q || w.quiver() != q {
        return Err(Error::InvalidRepresentation(
            "representations must live on the spec's quiver".into(),
        ));
    }
    check_room(spec, v, w)?;
    let basis = tensor_basis(spec, v, w)?;
    let dim = |x: Vertex| basis.spaces.get(&x).map_or(0, Vec::len);
    let mut mats: BTreeMap<Arrow, Matrix> = BTreeMap::new();
    let mut place = |c: Arrow, from: PairBasis, to: PairBasis, coeff| -> Result<()> {
        let (sx, si) = basis.index[&from];
        let Some(&(tx, ti)) = basis.index.get(&to) else {
            return Err(Error::InvalidBimodule(format!(
                "action value {} leaves the tensor basis",
                q.arrow_name(c)
            )));
        };
        if q.source(c) != sx || q.target(c) != tx {
            return Err(Error::InvalidBimodule(format!(
                "action value {} has the wrong endpoints",
                q.arrow_name(c)
            )));
        }
        mats.entry(c)
            .or_insert_with(|| Matrix::zeros(dim(q.target(c)), dim(q.source(c))))
            .add_at(ti, si, &coeff);
        Ok(())
    };
    for pairs in basis.spaces.values() {
        for &pb in pairs {
            let PairBasis { g, h, ui, vi } = pb;
            for b in q.arrows_from(g) {
                let vb = v.mat(b);
                if vb.rows() == 0 {
                    continue;
                }
                let action = spec.right(b, h)?;
                for k in 0..vb.rows() {
                    let x = vb.get(k, ui);
                    if x.is_zero() {
                        continue;
                    }
                    let to = PairBasis {
                        g: q.target(b),
                        h,
                        ui: k,
                        vi,
                    };
                    for (c, coeff) in &action {
                        place(c.arrows()[0], pb, to, x * coeff)?;
                    }
                }
            }
            for c in q.arrows_from(h) {
                let wc = w.mat(c);
                if wc.rows() == 0 {
                    continue;
                }
                let action = spec.left(g, c)?;
                for k in 0..wc.rows() {
                    let x = wc.get(k, vi);
                    if x.is_zero() {
                        continue;
                    }
                    let to = PairBasis {
                        g,
                        h: q.target(c),
                        ui,
                        vi: k,
                    };
                    for (d, coeff) in &action {
                        place(d.arrows()[0], pb, to, x * coeff)?;
                    }
                }
            }
        }
    }
    let dims = basis.spaces.iter().map(|(&x, b)| (x, b.len())).collect();
    let labels = basis
        .spaces
        .iter()
        .map(|(&x, b)| {
            let ls = b
                .iter()
                .map(|pb| format!("{}*{}", v.labels(pb.g)[pb.ui], w.labels(pb.h)[pb.vi]))
                .collect();
            (x, ls)
        })
        .collect();
    Representation::new(q.clone(), dims, mats, labels)
}

/// Compares the coaction of `t = V ⊗ W` with the product coaction
/// `Σ V_p(u) ⊗ W_r(v) ⊗ p·r` on every basis vector, over paths of total
/// length at most `max_len`. Returns the first mismatch, described.
pub fn check_tensor_comodule(
    spec: &BialgebraSpec,
    v: &Representation,
    w: &Representation,
    t: &Representation,
    max_len: usize,
) -> Result<Option<String>> {
    let basis = tensor_basis(spec, v, w)?;
    for (&x, pairs) in &basis.spaces {
        for (k, pb) in pairs.iter().enumerate() {
            let got = comodule_map(t, x, k, max_len)?.terms;
            let du = comodule_map(v, pb.g, pb.ui, max_len)?.terms;
            let dv = comodule_map(w, pb.h, pb.vi, max_len)?.terms;
            let mut want = ComoduleTerms::zero();
            for ((p, uk), cu) in &du {
                for ((r, vk), cv) in &dv {
                    if p.len() + r.len() > max_len {
                        continue;
                    }
                    let pr = shuffle_product(spec, p, r)?;
                    let to = PairBasis {
                        g: p.target(),
                        h: r.target(),
                        ui: *uk,
                        vi: *vk,
                    };
                    let (_, ti) = basis.index[&to];
                    for (path, c) in &pr {
                        want.add_term((path.clone(), ti), &(cu * cv) * c);
                    }
                }
            }
            if got != want {
                return Ok(Some(format!(
                    "coaction of {} differs from the product coaction",
                    t.labels(x)[k]
                )));
            }
        }
    }
    Ok(None)
}

/// The one-dimensional representation at the identity vertex.
pub fn unit_representation(spec: &BialgebraSpec) -> Result<Representation> {
    let e = spec.identity();
    Representation::new(
        spec.quiver.clone(),
        BTreeMap::from([(e, 1)]),
        BTreeMap::new(),
        BTreeMap::from([(e, vec!["1".to_string()])]),
    )
}

/// All intervals whose endpoints lie on the line and are at most `bound`.
pub fn intervals_up_to(spec: &BialgebraSpec, bound: i64) -> Result<Vec<Interval>> {
    let line = spec.quiver.line().ok_or_else(|| {
        Error::UnsupportedShape("Clebsch-Gordan tables need an equioriented type-A line".into())
    })?;
    let hi = bound.min(line.last());
    let mut out = Vec::new();
    for i in line.first..=hi {
        for j in i..=hi {
            out.push(Interval { i, j });
        }
    }
    Ok(out)
}

/// Decomposition of `V(a) ⊗ V(b)`.
pub fn tensor_intervals(
    spec: &BialgebraSpec,
    a: Interval,
    b: Interval,
) -> Result<IntervalMultiset> {
    let q = &spec.quiver;
    let t = tensor_representations(spec, &interval_module(q, a)?, &interval_module(q, b)?)?;
    barcode_decompose(&t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CgEntry {
    pub left: Interval,
    pub right: Interval,
    pub product: IntervalMultiset,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CgTable {
    pub entries: Vec<CgEntry>,
}

impl CgTable {
    pub fn get(&self, left: Interval, right: Interval) -> Option<&IntervalMultiset> {
        self.entries
            .iter()
            .find(|e| e.left == left && e.right == right)
            .map(|e| &e.product)
    }
}

impl fmt::Display for CgTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let heads: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("{} ⊗ {}", e.left, e.right))
            .collect();
        let width = heads.iter().map(|h| h.chars().count()).max().unwrap_or(0);
        for (i, (h, e)) in heads.iter().zip(&self.entries).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let pad = width - h.chars().count();
            write!(f, "{h}{} = {}", " ".repeat(pad), e.product)?;
        }
        Ok(())
    }
}

/// Tensor and decompose every ordered pair of intervals with endpoints at
/// most `bound`.
pub fn cg_table(spec: &BialgebraSpec, bound: i64) -> Result<CgTable> {
    let ivs = intervals_up_to(spec, bound)?;
    let mut entries = Vec::new();
    for &a in &ivs {
        for &b in &ivs {
            entries.push(CgEntry {
                left: a,
                right: b,
                product: tensor_intervals(spec, a, b)?,
            });
        }
    }
    Ok(CgTable { entries })
}

/// A signed combination of interval classes in the representation ring.
pub type Class = BTreeMap<Interval, i64>;

fn class_of(m: &IntervalMultiset) -> Class {
    m.iter().map(|(iv, k)| (iv, k as i64)).collect()
}

fn add_class(acc: &mut Class, c: &Class, scale: i64) {
    for (&iv, &k) in c {
        let e = acc.entry(iv).or_insert(0);
        *e += scale * k;
        if *e == 0 {
            acc.remove(&iv);
        }
    }
}

pub fn render_class(c: &Class) -> String {
    if c.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (iv, &k)) in c.iter().enumerate() {
        let sign = if k < 0 { "-" } else { "+" };
        let mag = k.unsigned_abs();
        let term = if mag == 1 {
            format!("[{iv}]")
        } else {
            format!("{mag}[{iv}]")
        };
        if n == 0 {
            if k < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(&term);
    }
    out
}

/// Class products through cached interval-pair decompositions.
struct Ring<'a> {
    spec: &'a BialgebraSpec,
    cache: BTreeMap<(Interval, Interval), Class>,
}

impl Ring<'_> {
    fn pair(&mut self, a: Interval, b: Interval) -> Result<Class> {
        if let Some(c) = self.cache.get(&(a, b)) {
            return Ok(c.clone());
        }
        let c = class_of(&tensor_intervals(self.spec, a, b)?);
        self.cache.insert((a, b), c.clone());
        Ok(c)
    }

    fn mul(&mut self, x: &Class, y: &Class) -> Result<Class> {
        let mut out = Class::new();
        for (&a, &ka) in x {
            for (&b, &kb) in y {
                let p = self.pair(a, b)?;
                add_class(&mut out, &p, ka * kb);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepRingReport {
    pub bound: i64,
    pub checks: Vec<CheckResult>,
}

impl RepRingReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

impl fmt::Display for RepRingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "representation ring checks for intervals with endpoints <= {}",
            self.bound
        )?;
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(5)
            .max(5);
        writeln!(
            f,
            "{:<width$}  {:>7}  {:>8}  status",
            "check", "cases", "failures"
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<width$}  {:>7}  {:>8}  {}",
                c.name,
                c.cases,
                c.failures,
                if c.passed() { "pass" } else { "FAIL" }
            )?;
            for ce in &c.counterexamples {
                writeln!(f, "{:<width$}    {ce}", "")?;
            }
        }
        write!(f, "result: {}", if self.passed() { "pass" } else { "FAIL" })
    }
}

/// On `A_∞`: commutativity of interval classes, the recurrence
/// `[V(0,n+1)] = [V(0,1)][V(0,n)] − [V(1,1)][V(0,n−1)]`, and that each
/// `[V(i,j)]` equals `Y^i P_{j−i}(X, Y)` with `X = [V(0,1)]`,
/// `Y = [V(1,1)]`, `P_0 = 1`, `P_1 = X`, `P_{n+1} = X P_n − Y P_{n−1}`.
pub fn rep_ring_check(spec: &BialgebraSpec, bound: i64) -> Result<RepRingReport> {
    if spec.quiver.is_finite() {
        return Err(Error::UnsupportedShape(
            "the representation ring check runs on A_∞".into(),
        ));
    }
    if bound < 1 {
        return Err(Error::OutOfRange("bound must be at least 1".into()));
    }
    let mut ring = Ring {
        spec,
        cache: BTreeMap::new(),
    };
    let ivs = intervals_up_to(spec, bound)?;
    let cls = |i: i64, j: i64| Class::from([(Interval { i, j }, 1)]);
    let named = |a: &Interval| a.to_string();

    let mut comm = CheckResult::new("commutativity");
    for &a in &ivs {
        for &b in &ivs {
            if b < a {
                continue;
            }
            let ab = ring.pair(a, b)?;
            let ba = ring.pair(b, a)?;
            comm.record(ab == ba, || {
                format!(
                    "{}⊗{} = {} but {}⊗{} = {}",
                    named(&a),
                    named(&b),
                    render_class(&ab),
                    named(&b),
                    named(&a),
                    render_class(&ba)
                )
            });
        }
    }

    let x = cls(0, 1);
    let y = cls(1, 1);
    let mut rec = CheckResult::new("recurrence");
    for n in 1..bound {
        let mut rhs = ring.mul(&x, &cls(0, n))?;
        let yn = ring.mul(&y, &cls(0, n - 1))?;
        add_class(&mut rhs, &yn, -1);
        let lhs = cls(0, n + 1);
        rec.record(lhs == rhs, || {
            format!(
                "[V(0,{})] != X[V(0,{n})] - Y[V(0,{})] = {}",
                n + 1,
                n - 1,
                render_class(&rhs)
            )
        });
    }

    let unit = cls(0, 0);
    let mut p: Vec<Class> = vec![unit.clone(), x.clone()];
    for n in 1..bound as usize {
        let mut next = ring.mul(&x, &p[n])?;
        let yp = ring.mul(&y, &p[n - 1])?;
        add_class(&mut next, &yp, -1);
        p.push(next);
    }
    let mut y_pow = vec![unit];
    for i in 1..=bound as usize {
        let next = ring.mul(&y, &y_pow[i - 1])?;
        y_pow.push(next);
    }
    let mut expr = CheckResult::new("generated_by_X_and_Y");
    for iv in &ivs {
        let (i, len) = (iv.i as usize, (iv.j - iv.i) as usize);
        let value = ring.mul(&y_pow[i], &p[len])?;
        expr.record(value == cls(iv.i, iv.j), || {
            format!("Y^{i} P_{len} = {} instead of [{iv}]", render_class(&value))
        });
    }

    Ok(RepRingReport {
        bound,
        checks: vec![comm, rec, expr],
    })
}
