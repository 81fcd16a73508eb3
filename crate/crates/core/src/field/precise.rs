use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::dense::{self, Dense};
use super::{rational_gcd, Degree, Rational, RhoPoly};
use crate::error::{Error, Result};

/// Dense vectors longer than this are not searched for common factors; the
/// ratio is then kept unreduced, which is still exact.
const GCD_DENSE_LIMIT: usize = 768;

/// Rational Euclid suffers coefficient growth; past this length only the
/// modular coprimality test runs.
const EUCLID_LIMIT: usize = 160;

/// An element of the precise field: a ratio `num / den` of ρ-polynomials.
///
/// Construction reduces the ratio: common polynomial factors are cancelled
/// and the denominator is scaled so that its leading coefficient is 1 and its
/// lowest exponent is 0. A denominator that is a single monomial is folded
/// into the numerator, so every Laurent polynomial has `den == 1`. Equality
/// and ordering are nonetheless decided by cross-multiplication and do not
/// rely on the reduction.
#[derive(Clone)]
pub struct PreciseNum {
    num: RhoPoly,
    den: RhoPoly,
}

impl PreciseNum {
    pub fn new(num: RhoPoly, den: RhoPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: RhoPoly) -> Self {
        Self {
            num: p,
            den: RhoPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(RhoPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(RhoPoly::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_poly(RhoPoly::constant(q))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(super::int(n))
    }

    /// The infinitely large generator `ρ`.
    pub fn rho() -> Self {
        Self::rho_pow(Rational::one())
    }

    pub fn rho_pow(e: Rational) -> Self {
        Self::from_poly(RhoPoly::rho_pow(e))
    }

    pub fn monomial(c: Rational, e: Rational) -> Self {
        Self::from_poly(RhoPoly::monomial(c, e))
    }

    pub fn num(&self) -> &RhoPoly {
        &self.num
    }

    pub fn den(&self) -> &RhoPoly {
        &self.den
    }

    /// The value as a ρ-polynomial, when the denominator is 1.
    pub fn as_poly(&self) -> Option<&RhoPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// `degree(num) − degree(den)`; `None` (−∞) for zero.
    pub fn degree(&self) -> Degree {
        let n = self.num.degree()?;
        let d = self.den.degree().expect("nonzero denominator");
        Some(n - d)
    }

    /// Sign of the value: the product of the signs of the two leading
    /// coefficients.
    pub fn signum(&self) -> i32 {
        self.num.signum() * self.den.signum()
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Coefficient of the dominant monomial `c·ρ^{degree}`.
    pub fn leading_coeff(&self) -> Rational {
        match (self.num.leading_coeff(), self.den.leading_coeff()) {
            (Some(n), Some(d)) => n / d,
            _ => Rational::zero(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Leading part of the descending expansion of `num / den`.
    ///
    /// Returns the polynomial `p` made of the expansion terms with exponent
    /// `> cutoff` (`strict`) or `>= cutoff`, so that `self − p` has degree at
    /// most `cutoff` (`strict`) or below `cutoff`.
    ///
    /// Each long-division step cancels the leading term of the remainder. The
    /// exponents of the remainder stay inside `e₀ + δℤ`, where `δ` generates
    /// the exponent differences of `num` and `den`, so every step lowers the
    /// quotient exponent by a positive multiple of `δ` and the loop runs at
    /// most `(degree − cutoff)/δ + 1` times.
    pub fn series_expand(&self, cutoff: &Rational, strict: bool) -> RhoPoly {
        let keeps = |e: &Rational| if strict { e > cutoff } else { e >= cutoff };
        if let Some(p) = self.as_poly() {
            return p.truncate_below(cutoff, strict);
        }
        let Some(top) = self.degree() else {
            return RhoPoly::zero();
        };
        if !keeps(&top) {
            return RhoPoly::zero();
        }
        let step = match (self.num.exponent_step(), self.den.exponent_step()) {
            (Some(a), Some(b)) => Some(rational_gcd(&a, &b)),
            (a, b) => a.or(b),
        };
        let max_steps = match &step {
            Some(d) => ((&top - cutoff) / d).floor().to_integer() + 2u32,
            None => 2u32.into(),
        };
        let (de, dc) = {
            let (e, c) = self.den.leading().expect("nonzero denominator");
            (e.clone(), c.clone())
        };
        let mut rem = self.num.clone();
        let mut out = RhoPoly::zero();
        let mut steps = num_bigint::BigInt::zero();
        while let Some((re, rc)) = rem.leading() {
            let qe = re - &de;
            if !keeps(&qe) {
                break;
            }
            steps += 1;
            assert!(
                steps <= max_steps,
                "series expansion of {self} exceeded its step bound"
            );
            let term = RhoPoly::monomial(rc / &dc, qe);
            rem = &rem - &(&term * &self.den);
            out = &out + &term;
        }
        out
    }

    fn normalized(num: RhoPoly, den: RhoPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self::from_poly(num);
        }
        if den.is_monomial() {
            let (e, c) = den.leading().expect("nonzero");
            let num = num.shift(&-e).scale(&c.recip());
            return Self::from_poly(num);
        }
        let (num, den) = cancel_common_factor(num, den);
        let (low, _) = den.trailing().expect("nonzero");
        let shift = -low.clone();
        let lead = den.leading_coeff().expect("nonzero").recip();
        let num = num.shift(&shift).scale(&lead);
        let den = den.shift(&shift).scale(&lead);
        if den.is_one() {
            Self::from_poly(num)
        } else {
            Self { num, den }
        }
    }
}

/// Cancels the polynomial gcd of `num` and `den`.
///
/// Both are written as `ρ^m · P(t)` with `t = ρ^δ`, where `δ` generates every
/// exponent once the monomial factors `ρ^m` are split off. A common factor
/// over a finer exponent group is invariant under the roots of unity acting
/// on `t^{1/k}`, so it already lives in `Q[t]` and the ordinary univariate
/// gcd finds it.
fn cancel_common_factor(num: RhoPoly, den: RhoPoly) -> (RhoPoly, RhoPoly) {
    let mn = num.low_degree().expect("nonzero");
    let md = den.low_degree().expect("nonzero");
    let n0 = num.shift(&-mn.clone());
    let d0 = den.shift(&-md.clone());
    let step = n0
        .terms()
        .chain(d0.terms())
        .fold(Rational::zero(), |g, (e, _)| rational_gcd(&g, e));
    if step.is_zero() {
        return (num, den);
    }
    let (Some(nd), Some(dd)) = (to_dense(&n0, &step), to_dense(&d0, &step)) else {
        return (num, den);
    };
    if dense::certainly_coprime(&nd, &dd) || nd.len().max(dd.len()) > EUCLID_LIMIT {
        return (num, den);
    }
    let g = dense::gcd(&nd, &dd);
    if g.len() <= 1 {
        return (num, den);
    }
    let (nq, _) = dense::div_rem(&nd, &g);
    let (dq, _) = dense::div_rem(&dd, &g);
    (from_dense(&nq, &step).shift(&mn), from_dense(&dq, &step).shift(&md))
}

fn to_dense(p: &RhoPoly, step: &Rational) -> Option<Dense> {
    let top = (p.degree()? / step).to_integer();
    let len: usize = usize::try_from(top).ok()? + 1;
    if len > GCD_DENSE_LIMIT {
        return None;
    }
    let mut out = vec![Rational::zero(); len];
    for (e, c) in p.terms() {
        let k = usize::try_from((e / step).to_integer()).ok()?;
        out[k] = c.clone();
    }
    Some(out)
}

fn from_dense(d: &Dense, step: &Rational) -> RhoPoly {
    RhoPoly::from_terms(
        d.iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), step * Rational::from_integer((k as i64).into()))),
    )
}

impl PartialEq for PreciseNum {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for PreciseNum {}

impl Ord for PreciseNum {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = &(&self.num * &other.den) - &(&other.num * &self.den);
        let s = diff.signum() * self.den.signum() * other.den.signum();
        s.cmp(&0)
    }
}

impl PartialOrd for PreciseNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Neg for &PreciseNum {
    type Output = PreciseNum;
    fn neg(self) -> PreciseNum {
        PreciseNum {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for PreciseNum {
    type Output = PreciseNum;
    fn neg(self) -> PreciseNum {
        -&self
    }
}

impl Add for &PreciseNum {
    type Output = PreciseNum;
    fn add(self, rhs: &PreciseNum) -> PreciseNum {
        if self.den == rhs.den {
            return PreciseNum::normalized(&self.num + &rhs.num, self.den.clone());
        }
        PreciseNum::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &PreciseNum {
    type Output = PreciseNum;
    fn sub(self, rhs: &PreciseNum) -> PreciseNum {
        self + &-rhs
    }
}

impl Mul for &PreciseNum {
    type Output = PreciseNum;
    fn mul(self, rhs: &PreciseNum) -> PreciseNum {
        PreciseNum::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for PreciseNum {
            type Output = PreciseNum;
            fn $m(self, rhs: PreciseNum) -> PreciseNum {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl From<RhoPoly> for PreciseNum {
    fn from(p: RhoPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<Rational> for PreciseNum {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl fmt::Display for PreciseNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for PreciseNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PreciseNum({self})")
    }
}
