//! Quantum integers, factorials and Gaussian binomial coefficients.

use super::poly::Poly;
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

/// `l_q = 1 + q + ... + q^(l-1)`, zero for `l = 0`.
pub fn quantum_int(l: usize) -> RationalFunction {
    RationalFunction::from_poly(quantum_int_poly(l))
}

fn quantum_int_poly(l: usize) -> Poly {
    Poly::from_int_coeffs(&vec![1; l])
}

/// `l!_q = 1_q 2_q ... l_q`.
pub fn quantum_factorial(l: usize) -> RationalFunction {
    RationalFunction::from_poly(quantum_factorial_poly(l))
}

fn quantum_factorial_poly(l: usize) -> Poly {
    (1..=l).fold(Poly::one(), |acc, k| &acc * &quantum_int_poly(k))
}

/// Gaussian binomial `n!_q / (k!_q (n-k)!_q)`, computed by exact polynomial
/// division.
pub fn quantum_binomial(n: usize, k: usize) -> Result<RationalFunction> {
    if k > n {
        return Err(Error::Domain(format!(
            "quantum binomial ({n} choose {k}) needs k <= n"
        )));
    }
    let num = quantum_factorial_poly(n);
    let den = &quantum_factorial_poly(k) * &quantum_factorial_poly(n - k);
    let (quot, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "q-binomial division left a remainder");
    Ok(RationalFunction::from_poly(quot))
}
