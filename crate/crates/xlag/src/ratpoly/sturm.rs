//! Exact counting of positive real roots by Sturm sequences.

use num::Signed;

use crate::ratpoly::{Poly, Rational};

/// Counts the distinct real roots of `p` in the open interval `(0, inf)`.
///
/// Builds the canonical Sturm chain `p, p', -rem(...)` in exact arithmetic
/// and takes the difference of sign-variation counts at the interval ends.
/// The sign just right of zero is the sign of the lowest nonzero coefficient;
/// the sign at infinity is the sign of the leading coefficient. Multiple
/// roots are counted once.
///
/// Panics if `p` is the zero polynomial.
pub fn sturm_count_positive_roots(p: &Poly) -> usize {
    assert!(!p.is_zero(), "Sturm count of the zero polynomial");
    if p.degree() == Some(0) {
        return 0;
    }
    let chain = sturm_chain(p);
    let at_zero = sign_variations(chain.iter().map(Poly::sign_at_zero_plus));
    let at_inf = sign_variations(chain.iter().map(Poly::sign_at_infinity));
    at_zero - at_inf
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![normalize(p.clone()), normalize(p.derivative())];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, rem) = chain[n - 2].div_rem(&chain[n - 1]);
        chain.push(normalize(-rem));
    }
}

// Scaling a chain element by a positive constant preserves all signs; keep
// leading coefficients at +/-1 so intermediate rationals stay small.
fn normalize(p: Poly) -> Poly {
    match p.leading_coeff() {
        Some(lead) => {
            let inv = Rational::from_integer(1.into()) / lead.abs();
            p.scale(&inv)
        }
        None => p,
    }
}

fn sign_variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}
