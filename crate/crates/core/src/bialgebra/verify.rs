//! Exhaustive checks of the bialgebra axioms up to a total path length.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::shuffle::shuffle_product;
use super::spec::BialgebraSpec;
use crate::coalgebra::{
    coassociativity_sides, counit, counit_path, counit_sides, delta, render_tensor2,
    render_tensor3, render_vector, PathVector, Tensor2,
};
use crate::error::{Error, Result};
use crate::quiver::Path;

const MAX_COUNTEREXAMPLES: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub counterexamples: Vec<String>,
}

impl CheckResult {
    pub fn new(name: &str) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_len: usize,
    /// What "verified" means for this run.
    pub header: String,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.header)?;
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

/// Memoized shuffle products of basis paths.
struct Products<'a> {
    spec: &'a BialgebraSpec,
    cache: RefCell<HashMap<(Path, Path), PathVector>>,
}

impl<'a> Products<'a> {
    fn new(spec: &'a BialgebraSpec) -> Self {
        Products {
            spec,
            cache: RefCell::new(HashMap::new()),
        }
    }

    fn path(&self, a: &Path, b: &Path) -> Result<PathVector> {
        let key = (a.clone(), b.clone());
        if let Some(v) = self.cache.borrow().get(&key) {
            return Ok(v.clone());
        }
        let v = shuffle_product(self.spec, a, b)?;
        self.cache.borrow_mut().insert(key, v.clone());
        Ok(v)
    }

    fn vector(&self, u: &PathVector, v: &PathVector) -> Result<PathVector> {
        let mut out = PathVector::zero();
        for (a, c) in u {
            for (b, d) in v {
                out.add_scaled(&self.path(a, b)?, &(c * d));
            }
        }
        Ok(out)
    }

    fn tensor(&self, x: &Tensor2, y: &Tensor2) -> Result<Tensor2> {
        let mut out = Tensor2::zero();
        for ((a, b), c1) in x {
            for ((c, d), c2) in y {
                let left = self.path(a, c)?;
                let right = self.path(b, d)?;
                let scale = c1 * c2;
                for (l, cl) in &left {
                    for (r, cr) in &right {
                        out.add_term((l.clone(), r.clone()), &(&scale * cl) * cr);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Checks coassociativity, counit, associativity, unit, multiplicativity of
/// Δ and ε, and the length grading over every tuple of paths whose total
/// length is at most `max_len`.
///
/// On a truncated rule-based quiver, only tuples whose product of target
/// vertices lies inside the truncation are examined; every such product is
/// computed exactly.
pub fn verify_bialgebra(spec: &BialgebraSpec, max_len: usize) -> Result<VerifyReport> {
    if max_len < 1 {
        return Err(Error::OutOfRange("max_len must be at least 1".into()));
    }
    let q = &spec.quiver;
    let paths = q.paths_up_to(max_len);
    let fits = |ps: &[&Path]| -> Result<bool> {
        match spec.monoid.product_all(ps.iter().map(|p| p.target())) {
            Ok(_) => Ok(true),
            Err(Error::BoundExceeded { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    };
    let name = |p: &Path| q.render_path(p);
    let prod = Products::new(spec);

    let mut coassoc = CheckResult::new("coassociativity");
    let mut counit_check = CheckResult::new("counit");
    for p in &paths {
        let (l, r) = coassociativity_sides(q, p);
        coassoc.record(l == r, || {
            format!(
                "p = {}: (Δ⊗id)Δ = {} but (id⊗Δ)Δ = {}",
                name(p),
                render_tensor3(q, &l),
                render_tensor3(q, &r)
            )
        });
        let (l, r) = counit_sides(q, p);
        let pv = PathVector::basis(p.clone());
        counit_check.record(l == pv && r == pv, || {
            format!(
                "p = {}: (ε⊗id)Δ = {}, (id⊗ε)Δ = {}",
                name(p),
                render_vector(q, &l),
                render_vector(q, &r)
            )
        });
    }

    let e = Path::trivial(spec.identity());
    let mut unit = CheckResult::new("unit");
    for p in &paths {
        let pv = PathVector::basis(p.clone());
        let l = prod.path(&e, p)?;
        let r = prod.path(p, &e)?;
        unit.record(l == pv && r == pv, || {
            format!(
                "p = {}: e·p = {}, p·e = {}",
                name(p),
                render_vector(q, &l),
                render_vector(q, &r)
            )
        });
    }

    let mut grading = CheckResult::new("grading");
    let mut delta_mult = CheckResult::new("delta_multiplicative");
    let mut counit_mult = CheckResult::new("counit_multiplicative");
    for a in &paths {
        for b in &paths {
            if a.len() + b.len() > max_len || !fits(&[a, b])? {
                continue;
            }
            let ab = prod.path(a, b)?;
            let n = a.len() + b.len();
            grading.record(ab.keys().all(|p| p.len() == n), || {
                format!(
                    "{}·{} = {} is not homogeneous of length {n}",
                    name(a),
                    name(b),
                    render_vector(q, &ab)
                )
            });
            let lhs = crate::coalgebra::delta_vec(q, &ab);
            let rhs = prod.tensor(&delta(q, a), &delta(q, b))?;
            delta_mult.record(lhs == rhs, || {
                format!(
                    "α = {}, β = {}: Δ(αβ) = {} but Δ(α)Δ(β) = {}",
                    name(a),
                    name(b),
                    render_tensor2(q, &lhs),
                    render_tensor2(q, &rhs)
                )
            });
            let le = counit(&ab);
            let re = counit_path(a) * counit_path(b);
            counit_mult.record(le == re, || {
                format!(
                    "α = {}, β = {}: ε(αβ) = {le} but ε(α)ε(β) = {re}",
                    name(a),
                    name(b)
                )
            });
        }
    }

    let mut assoc = CheckResult::new("associativity");
    for a in &paths {
        for b in &paths {
            if a.len() + b.len() > max_len {
                continue;
            }
            for c in &paths {
                if a.len() + b.len() + c.len() > max_len || !fits(&[a, b, c])? {
                    continue;
                }
                let ab = prod.path(a, b)?;
                let left = prod.vector(&ab, &PathVector::basis(c.clone()))?;
                let bc = prod.path(b, c)?;
                let right = prod.vector(&PathVector::basis(a.clone()), &bc)?;
                assoc.record(left == right, || {
                    format!(
                        "({0}·{1})·{2} = {3} but {0}·({1}·{2}) = {4}",
                        name(a),
                        name(b),
                        name(c),
                        render_vector(q, &left),
                        render_vector(q, &right)
                    )
                });
            }
        }
    }

    let mut header =
        format!("bialgebra axioms verified on all path tuples of total length <= {max_len}");
    if let Some(b) = q.support_bound() {
        header.push_str(&format!(
            " whose product of target vertices stays within the support bound {b}"
        ));
    }
    Ok(VerifyReport {
        max_len,
        header,
        checks: vec![
            coassoc,
            counit_check,
            assoc,
            unit,
            delta_mult,
            counit_mult,
            grading,
        ],
    })
}
