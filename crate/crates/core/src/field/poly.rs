use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{fmt_rational, rational_gcd, Degree, Rational};

/// A finite formal sum `Σ cᵢ·ρ^{qᵢ}` with nonzero rational coefficients and
/// rational exponents.
///
/// Terms are keyed by exponent; no stored coefficient is ever zero, so the
/// zero polynomial is the empty map and structural equality is value
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RhoPoly {
    terms: BTreeMap<Rational, Rational>,
}

impl RhoPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Rational::zero())
    }

    /// `c·ρ^e`
    pub fn monomial(c: Rational, e: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `ρ^e`
    pub fn rho_pow(e: Rational) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs, merging equal
    /// exponents and dropping zero coefficients.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut p = Self::zero();
        for (c, e) in terms {
            p.add_term(c, e);
        }
        p
    }

    fn add_term(&mut self, c: Rational, e: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.is_zero() && c.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Degree {
        self.terms.keys().next_back().cloned()
    }

    /// Smallest exponent, `None` for the zero polynomial.
    pub fn low_degree(&self) -> Degree {
        self.terms.keys().next().cloned()
    }

    /// `(exponent, coefficient)` of the leading term.
    pub fn leading(&self) -> Option<(&Rational, &Rational)> {
        self.terms.iter().next_back()
    }

    /// `(exponent, coefficient)` of the lowest term.
    pub fn trailing(&self) -> Option<(&Rational, &Rational)> {
        self.terms.iter().next()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.leading().map(|(_, c)| c)
    }

    /// Terms as `(exponent, coefficient)` in strictly decreasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Rational, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, e: &Rational) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// -1, 0 or 1 according to the sign of the leading coefficient.
    pub fn signum(&self) -> i32 {
        match self.leading_coeff() {
            None => 0,
            Some(c) if c.is_positive() => 1,
            Some(_) => -1,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k * c))
                .collect(),
        }
    }

    /// Multiplies by `ρ^e`.
    pub fn shift(&self, e: &Rational) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k + e, c.clone()))
                .collect(),
        }
    }

    /// Keeps the terms with exponent `> cutoff` (`strict`) or `>= cutoff`.
    pub fn truncate_below(&self, cutoff: &Rational, strict: bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| if strict { *e > cutoff } else { *e >= cutoff })
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Removes the term with exponent `e`, if any.
    pub fn without_term(&self, e: &Rational) -> Self {
        let mut p = self.clone();
        p.terms.remove(e);
        p
    }

    /// Generator of the group spanned by the pairwise exponent differences,
    /// `None` when there is at most one term.
    pub(crate) fn exponent_step(&self) -> Option<Rational> {
        let low = self.terms.keys().next()?;
        let g = self
            .terms
            .keys()
            .fold(Rational::zero(), |g, e| rational_gcd(&g, &(e - low)));
        if g.is_zero() {
            None
        } else {
            Some(g)
        }
    }

    /// True when every exponent and every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| e.is_integer() && c.is_integer())
    }
}

impl Neg for RhoPoly {
    type Output = RhoPoly;
    fn neg(self) -> RhoPoly {
        -&self
    }
}

impl Neg for &RhoPoly {
    type Output = RhoPoly;
    fn neg(self) -> RhoPoly {
        RhoPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c))
                .collect(),
        }
    }
}

impl Add for &RhoPoly {
    type Output = RhoPoly;
    fn add(self, rhs: &RhoPoly) -> RhoPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(c.clone(), e.clone());
        }
        out
    }
}

impl Sub for &RhoPoly {
    type Output = RhoPoly;
    fn sub(self, rhs: &RhoPoly) -> RhoPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(-c, e.clone());
        }
        out
    }
}

impl Mul for &RhoPoly {
    type Output = RhoPoly;
    fn mul(self, rhs: &RhoPoly) -> RhoPoly {
        let mut out = RhoPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for RhoPoly {
            type Output = RhoPoly;
            fn $m(self, rhs: RhoPoly) -> RhoPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

/// `ρ`, `ρ^2`, `ρ^(1/2)`, `ρ^(-1)`: bare for positive integer exponents,
/// parenthesized otherwise.
pub(crate) fn fmt_rho_power(e: &Rational) -> String {
    if e.is_one() {
        "rho".to_string()
    } else if e.is_integer() && e.is_positive() {
        format!("rho^{}", e.numer())
    } else {
        format!("rho^({})", fmt_rational(e))
    }
}

impl fmt::Display for RhoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if e.is_zero() {
                f.write_str(&fmt_rational(&mag))?;
            } else if mag.is_one() {
                f.write_str(&fmt_rho_power(e))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), fmt_rho_power(e))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RhoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RhoPoly({self})")
    }
}
