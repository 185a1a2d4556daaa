//! The quantum-shuffle product on kQ.
//!
//! For paths `α` (length m) and `β` (length n), sum over every bit sequence
//! `d` with m ones among m + n slots: split `α` along `d` and `β` along the
//! complement, so each slot pairs one arrow with one vertex. The slot value
//! is the bimodule action (`g.b` or `a.h`), and the slot values are
//! concatenated from the first slot to the last.

use num_traits::One;

use super::spec::BialgebraSpec;
use crate::coalgebra::{PathVector, Tensor2};
use crate::error::{Error, Result};
use crate::quiver::{complement, Path, Quiver, SplitEntry, ThinSplit, Vertex};
use crate::scalars::{quantum_binomial, RationalFunction};

pub fn shuffle_product(spec: &BialgebraSpec, alpha: &Path, beta: &Path) -> Result<PathVector> {
    let q = &spec.quiver;
    let (m, n) = (alpha.len(), beta.len());
    if m + n == 0 {
        let g = spec.vertex_product(alpha.source(), beta.source())?;
        return Ok(PathVector::basis(Path::trivial(g)));
    }
    let mut total = PathVector::zero();
    for bits in crate::quiver::bit_sequences(m + n, m) {
        let da = ThinSplit::of(q, alpha, &bits)?;
        let db = ThinSplit::of(q, beta, &complement(&bits))?;
        let mut acc: Option<PathVector> = None;
        for (x, y) in da.entries.iter().zip(&db.entries) {
            let slot = match (*x, *y) {
                (SplitEntry::Arrow(a), SplitEntry::Vertex(h)) => spec.right(a, h)?,
                (SplitEntry::Vertex(g), SplitEntry::Arrow(b)) => spec.left(g, b)?,
                _ => unreachable!("complementary splits pair an arrow with a vertex"),
            };
            let next = match acc {
                None => slot,
                Some(prev) => concat_vectors(&slot, &prev),
            };
            if next.is_zero() {
                acc = Some(next);
                break;
            }
            acc = Some(next);
        }
        if let Some(v) = acc {
            total.add_scaled(&v, &RationalFunction::one());
        }
    }
    Ok(total)
}

/// Bilinear concatenation `later ∘ earlier`; pairs whose endpoints do not
/// meet contribute zero.
fn concat_vectors(later: &PathVector, earlier: &PathVector) -> PathVector {
    let mut out = PathVector::zero();
    for (p, c) in later {
        for (r, d) in earlier {
            if let Some(pr) = p.concat(r) {
                out.add_term(pr, c * d);
            }
        }
    }
    out
}

/// Bilinear extension of [`shuffle_product`].
pub fn product_vector(spec: &BialgebraSpec, u: &PathVector, v: &PathVector) -> Result<PathVector> {
    let mut out = PathVector::zero();
    for (a, c) in u {
        for (b, d) in v {
            out.add_scaled(&shuffle_product(spec, a, b)?, &(c * d));
        }
    }
    Ok(out)
}

/// Product in kQ ⊗ kQ: `(a⊗b)(c⊗d) = ac ⊗ bd`.
pub fn product_tensor2(spec: &BialgebraSpec, x: &Tensor2, y: &Tensor2) -> Result<Tensor2> {
    let mut out = Tensor2::zero();
    for ((a, b), c1) in x {
        for ((c, d), c2) in y {
            let left = shuffle_product(spec, a, c)?;
            let right = shuffle_product(spec, b, d)?;
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

/// Closed-form product on `A_∞`: `p_i^l · p_j^m = q^{jl} [l+m choose m]_q p_{i+j}^{l+m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedProduct {
    pub coeff: RationalFunction,
    pub start: usize,
    pub length: usize,
}

impl ClosedProduct {
    pub fn to_vector(&self, q: &Quiver) -> Result<PathVector> {
        Ok(PathVector::term(
            ainf_path(q, self.start, self.length)?,
            self.coeff.clone(),
        ))
    }
}

pub fn ainf_closed_product(i: usize, l: usize, j: usize, m: usize) -> ClosedProduct {
    let binom = quantum_binomial(l + m, m).expect("m <= l + m");
    ClosedProduct {
        coeff: RationalFunction::q_pow(j * l) * binom,
        start: i + j,
        length: l + m,
    }
}

/// `p_i^l`: the path of length `l` starting at `g_i`.
pub fn ainf_path(q: &Quiver, i: usize, l: usize) -> Result<Path> {
    if q.is_finite() {
        return Err(Error::UnsupportedShape("p_i^l paths live on A_∞".into()));
    }
    let ps = q.paths_from(Vertex(i), l)?;
    ps.into_iter()
        .next()
        .ok_or_else(|| Error::OutOfRange(format!("no path p_{i}^{l}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{ainf_bialgebra, trivial_bialgebra};
    use crate::quiver::Builtin;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    #[test]
    fn kronecker_arrows_multiply_to_zero() {
        let q = Builtin::Kronecker(2).build().unwrap();
        let spec = trivial_bialgebra(&q, q.vertex("e").unwrap(), q.vertex("z").ok()).unwrap();
        for a in q.arrows() {
            for b in q.arrows() {
                let ab = shuffle_product(&spec, &q.arrow_path(a), &q.arrow_path(b)).unwrap();
                assert!(ab.is_zero());
            }
        }
    }

    #[test]
    fn quantum_plane_relation() {
        let spec = ainf_bialgebra(6).unwrap();
        let q = &spec.quiver;
        let a0 = q.parse_path("a0").unwrap();
        let g1 = q.parse_path("g1").unwrap();
        let a1 = q.parse_path("a1").unwrap();
        let left = shuffle_product(&spec, &a0, &g1).unwrap();
        let right = shuffle_product(&spec, &g1, &a0).unwrap();
        assert_eq!(left, PathVector::term(a1.clone(), rf("q")));
        assert_eq!(right, PathVector::basis(a1));
        assert_eq!(left, right.scale(&rf("q")));
    }

    #[test]
    fn square_of_first_arrow() {
        let spec = ainf_bialgebra(6).unwrap();
        let q = &spec.quiver;
        let p = ainf_path(q, 0, 1).unwrap();
        let sq = shuffle_product(&spec, &p, &p).unwrap();
        assert_eq!(
            sq,
            PathVector::term(ainf_path(q, 0, 2).unwrap(), rf("1 + q"))
        );
    }

    #[test]
    fn closed_product_examples() {
        let c = ainf_closed_product(0, 1, 0, 1);
        assert_eq!((c.coeff, c.start, c.length), (rf("1 + q"), 0, 2));
        let c = ainf_closed_product(3, 0, 2, 0);
        assert_eq!((c.coeff, c.start, c.length), (rf("1"), 5, 0));
        let c = ainf_closed_product(0, 2, 1, 1);
        assert_eq!(
            (c.coeff, c.start, c.length),
            (rf("q^2 * (1 + q + q^2)"), 1, 3)
        );
    }

    #[test]
    fn shuffle_matches_closed_formula() {
        let spec = ainf_bialgebra(14).unwrap();
        let q = &spec.quiver;
        for i in 0..=3 {
            for j in 0..=3 {
                for l in 0..=4 {
                    for m in 0..=4 {
                        let a = ainf_path(q, i, l).unwrap();
                        let b = ainf_path(q, j, m).unwrap();
                        let got = shuffle_product(&spec, &a, &b).unwrap();
                        let want = ainf_closed_product(i, l, j, m).to_vector(q).unwrap();
                        assert_eq!(got, want, "p_{i}^{l} * p_{j}^{m}");
                    }
                }
            }
        }
    }

    #[test]
    fn loop_quiver_square() {
        let q = Quiver::finite(&["e"], &[("a", "e", "e")]).unwrap();
        let spec = trivial_bialgebra(&q, Vertex(0), None).unwrap();
        let a = q.parse_path("a").unwrap();
        let aa = q.parse_path("aa").unwrap();
        assert_eq!(
            shuffle_product(&spec, &a, &a).unwrap(),
            PathVector::term(aa, RationalFunction::from_int(2))
        );
    }

    #[test]
    fn bilinear_extension() {
        let spec = ainf_bialgebra(6).unwrap();
        let q = &spec.quiver;
        let g1 = q.parse_path("g1").unwrap();
        let g2 = q.parse_path("g2").unwrap();
        let a0 = q.parse_path("a0").unwrap();
        let u = &PathVector::basis(g1.clone()) + &PathVector::basis(a0.clone());
        assert!(product_vector(&spec, &u, &PathVector::zero())
            .unwrap()
            .is_zero());
        let two_g = PathVector::term(g1, RationalFunction::from_int(2));
        let three_h = PathVector::term(g2, RationalFunction::from_int(3));
        assert_eq!(
            product_vector(&spec, &two_g, &three_h).unwrap(),
            PathVector::term(q.parse_path("g3").unwrap(), RationalFunction::from_int(6))
        );
    }

    #[test]
    fn bound_is_enforced() {
        let spec = ainf_bialgebra(3).unwrap();
        let q = &spec.quiver;
        let a = ainf_path(q, 2, 1).unwrap();
        let g = q.parse_path("g2").unwrap();
        assert!(matches!(
            shuffle_product(&spec, &a, &g),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
