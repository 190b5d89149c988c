//! Exact rational and polynomial arithmetic: the substrate for every
//! construction in this crate.
//!
//! Everything here is immutable after construction and all operations are
//! pure functions, so values can be shared across threads freely.

mod matrix;
mod poly;
mod ratfunc;
mod sturm;

pub use matrix::PolyMatrix;
pub use poly::Poly;
pub use ratfunc::{log_derivative, RationalFunc};
pub use sturm::sturm_count_positive_roots;

/// Arbitrary-precision rational number. Canonical form (reduced, positive
/// denominator, zero as 0/1) is maintained by the backing implementation.
pub type Rational = num::BigRational;

/// Shorthand for constructing a [`Rational`] from small integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        proptest::collection::vec(arb_rational(), 0..=max_deg + 1).prop_map(Poly::new)
    }

    fn arb_poly_matrix(n: usize, max_deg: usize) -> impl Strategy<Value = PolyMatrix> {
        proptest::collection::vec(arb_poly(max_deg), n * n)
            .prop_map(move |entries| PolyMatrix::new(n, n, entries))
    }

    proptest! {
        #[test]
        fn divexact_inverts_multiplication(a in arb_poly(8), b in arb_poly(8)) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.divexact(&b).unwrap(), a);
        }

        #[test]
        fn bareiss_matches_cofactor_3x3(m in arb_poly_matrix(3, 3)) {
            prop_assert_eq!(m.det(), m.det_cofactor());
        }

        #[test]
        fn bareiss_matches_cofactor_4x4(m in arb_poly_matrix(4, 2)) {
            prop_assert_eq!(m.det(), m.det_cofactor());
        }

        #[test]
        fn derivative_is_linear(a in arb_poly(8), b in arb_poly(8), c in arb_rational()) {
            let lhs = (&a.scale(&c) + &b).derivative();
            let rhs = &a.derivative().scale(&c) + &b.derivative();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn derivative_product_rule(a in arb_poly(6), b in arb_poly(6)) {
            let lhs = (&a * &b).derivative();
            let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn sturm_count_matches_known_roots(
            roots in proptest::collection::vec((-6i64..=6, 1i64..=3), 1..=5)
        ) {
            // Product of known linear factors; the oracle is the number of
            // distinct positive roots among the chosen factors.
            let mut p = Poly::one();
            for (n, d) in &roots {
                p = &p * &Poly::new(vec![-rat(*n, *d), rat(1, 1)]);
            }
            let mut distinct: Vec<Rational> = Vec::new();
            for (n, d) in &roots {
                let r = rat(*n, *d);
                if r > rat(0, 1) && !distinct.contains(&r) {
                    distinct.push(r);
                }
            }
            prop_assert_eq!(sturm_count_positive_roots(&p), distinct.len());
        }

        #[test]
        fn sturm_count_matches_bisection_isolation(
            roots in proptest::collection::vec(-6i64..=6, 1..=4)
        ) {
            // Cross-check against root isolation by interval bisection,
            // refined to width 1e-6, on products of integer linear factors
            // (repeats allowed).
            let mut p = Poly::one();
            for n in &roots {
                p = &p * &Poly::from_i64(&[-n, 1]);
            }
            let count = bisection_distinct_positive_roots(&p);
            prop_assert_eq!(sturm_count_positive_roots(&p), count);
        }
    }

    /// Counts distinct positive roots of a product of integer linear factors
    /// (roots in [-6, 6]) by sign-change bisection on the squarefree part.
    fn bisection_distinct_positive_roots(p: &Poly) -> usize {
        // Repeated factors defeat sign-change detection, so isolate on the
        // squarefree part; its roots are simple and flip the sign.
        let sf = p.divexact(&p.gcd(&p.derivative())).unwrap();
        // Half-integer grid points are never roots; each unit-wide bracket
        // contains at most one integer root.
        let grid: Vec<Rational> = (0..=13).map(|j| rat(2 * j + 1, 2)).collect();
        let mut count = 0;
        for w in grid.windows(2) {
            let (mut a, mut b) = (w[0].clone(), w[1].clone());
            let (fa, fb) = (sf.eval(&a), sf.eval(&b));
            if (fa > rat(0, 1)) == (fb > rat(0, 1)) {
                continue;
            }
            while &b - &a > rat(1, 1_000_000) {
                let mid = (&a + &b) / rat(2, 1);
                if (sf.eval(&mid) > rat(0, 1)) == (sf.eval(&a) > rat(0, 1)) {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            if a > rat(0, 1) {
                count += 1;
            }
        }
        count
    }
}
