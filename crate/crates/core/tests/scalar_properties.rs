use num_traits::{One, Zero};
use proptest::prelude::*;

use quiverbialg::scalars::{quantum_binomial, rational, Poly, RationalFunction};

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| Poly::from_int_coeffs(&c))
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(), poly())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

/// Classical binomials by Pascal's rule on integers.
fn classical(n: usize, k: usize) -> i64 {
    let mut row = vec![1i64];
    for _ in 0..n {
        let mut next = vec![1i64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k]
}

proptest! {
    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &RationalFunction::zero(), a.clone());
        prop_assert_eq!(&a * &RationalFunction::one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), RationalFunction::one());
        }
    }

    #[test]
    fn render_then_parse(a in ratfunc()) {
        let back: RationalFunction = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn normal_form_is_unique(n in poly(), d in poly(), k in poly()) {
        prop_assume!(!d.is_zero() && !k.is_zero());
        let a = RationalFunction::new(n.clone(), d.clone()).unwrap();
        let b = RationalFunction::new(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn specialization_is_a_ring_map(a in ratfunc(), b in ratfunc()) {
        let q0 = rational(7);
        if let (Ok(x), Ok(y)) = (a.specialize(&q0), b.specialize(&q0)) {
            prop_assert_eq!((&a * &b).specialize(&q0).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).specialize(&q0).unwrap(), &x + &y);
        }
    }
}

#[test]
fn q_pascal_identities() {
    for n in 1..=12usize {
        for k in 1..n {
            let lhs = quantum_binomial(n, k).unwrap();
            let left = &quantum_binomial(n - 1, k - 1).unwrap()
                + &(&RationalFunction::q_pow(k) * &quantum_binomial(n - 1, k).unwrap());
            let right = &(&RationalFunction::q_pow(n - k)
                * &quantum_binomial(n - 1, k - 1).unwrap())
                + &quantum_binomial(n - 1, k).unwrap();
            assert_eq!(lhs, left, "n={n} k={k}");
            assert_eq!(lhs, right, "n={n} k={k}");
        }
    }
}

#[test]
fn classical_limit_and_symmetry() {
    for n in 0..=12usize {
        for k in 0..=n {
            let b = quantum_binomial(n, k).unwrap();
            assert!(b.is_polynomial());
            assert!(b.numer().has_nonnegative_integer_coeffs());
            assert_eq!(
                b.specialize(&rational(1)).unwrap(),
                rational(classical(n, k))
            );
            assert_eq!(b, quantum_binomial(n, n - k).unwrap());
        }
    }
    assert!(quantum_binomial(3, 4).is_err());
}
