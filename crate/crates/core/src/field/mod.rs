//! Exact arithmetic for precise elements.
//!
//! A precise element is a ratio of two [`RhoPoly`]s: finite sums
//! `Σ cᵢ·ρ^{qᵢ}` with rational coefficients and rational exponents, where
//! `ρ` is a fixed positive infinitely large symbol. The ordering is decided by
//! leading terms, so `ρ > n` for every rational `n`.

mod dense;
mod poly;
mod precise;

pub use poly::RhoPoly;
pub use precise::PreciseNum;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Valuation of a precise element: `None` stands for `-∞` (the degree of 0).
///
/// `Option`'s ordering puts `None` below every `Some`, which is exactly the
/// ordering of the extended rationals used here.
pub type Degree = Option<Rational>;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational the way the expression grammar reads it back.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Greatest common divisor of two rationals: the largest `g > 0` such that
/// both are integer multiples of `g`. `gcd(0, 0) = 0`.
pub(crate) fn rational_gcd(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let n = a.numer().gcd(b.numer());
    let d = a.denom().lcm(b.denom());
    Rational::new(n, d)
}
