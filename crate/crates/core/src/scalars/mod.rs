//! Exact scalars: the rational function field ℚ(q) and q-combinatorics.

mod expr;
mod poly;
mod qnum;
mod ratfunc;

pub use poly::Poly;
pub use qnum::{quantum_binomial, quantum_factorial, quantum_int};
pub use ratfunc::RationalFunction;

pub use num_rational::BigRational;

use crate::error::Result;

/// Evaluate `f` at `q = q0`; fails with a pole error if the denominator
/// vanishes there.
pub fn specialize(f: &RationalFunction, q0: &BigRational) -> Result<BigRational> {
    f.specialize(q0)
}

/// Shorthand for an integer-valued rational.
pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
