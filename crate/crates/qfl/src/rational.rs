//! Exact rational scalars: the coefficient domain for every identity check.
//!
//! Backed by `num`'s arbitrary-precision `BigRational`, which keeps values
//! reduced with a positive denominator. Helpers here cover the handful of
//! operations the rest of the crate leans on: integer construction, `p/q`
//! string parsing, signed powers and factorials/binomials.

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};

pub type Rational = BigRational;

/// `n` as an exact rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"p"` or `"p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| format!("invalid rational {s:?}: {e}"))
}

/// `r^e` for signed integer exponents; `e < 0` requires `r != 0`.
pub fn rat_pow(r: &Rational, e: i64) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let base = if e < 0 {
        assert!(!r.is_zero(), "zero raised to a negative power");
        r.recip()
    } else {
        r.clone()
    };
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Exact n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Ordinary binomial coefficient C(n, k); zero outside 0 <= k <= n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k) as u64;
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n as u64 - j) / (j + 1);
    }
    acc
}

/// Convert to f64, used only on the quadrature side.
pub fn to_f64(r: &Rational) -> f64 {
    // BigRational::to_f64 can overflow for huge numerator/denominator pairs;
    // the values handled here stay far below that range.
    num::ToPrimitive::to_f64(r).expect("rational out of f64 range")
}

/// Render as `p` or `p/q`.
pub fn display(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True if `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// True if `r` is a non-positive integer (a gamma pole location).
pub fn is_nonpositive_integer(r: &Rational) -> bool {
    is_integer(r) && !r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round() {
        let r = parse_rational("-3/6").unwrap();
        assert_eq!(r, rat(-1, 2));
        assert_eq!(display(&r), "-1/2");
        assert_eq!(display(&rat_int(7)), "7");
    }

    #[test]
    fn signed_powers() {
        assert_eq!(rat_pow(&rat(2, 3), 2), rat(4, 9));
        assert_eq!(rat_pow(&rat(2, 3), -1), rat(3, 2));
        assert_eq!(rat_pow(&rat(5, 1), 0), rat_int(1));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
