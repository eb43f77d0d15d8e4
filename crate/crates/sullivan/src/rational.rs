//! The ground field: arbitrary-precision rationals, always in lowest terms.

use num_bigint::BigInt;

/// Exact rational scalar. Stored in lowest terms with positive denominator;
/// every operation in this crate is exact, there is no floating point anywhere.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational, reduced.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn ratio_reduces_to_lowest_terms() {
        let r = ratio(6, -4);
        assert_eq!(r, ratio(-3, 2));
        assert!(r.denom() > &BigInt::zero());
    }
}
