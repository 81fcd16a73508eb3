//! Magnitudes: the convex additive subgroups `{0}`, `ρ^q·⊘`, `ρ^q·£` and the
//! whole precise field.
//!
//! `ρ^q·⊘` holds the precise elements of degree `< q` and `ρ^q·£` those of
//! degree `≤ q`; `⊘` (the infinitesimals) and `£` (the limited elements) are
//! the case `q = 0`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Degree, PreciseNum, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Neutrix {
    Zero,
    /// `ρ^q·⊘ = {x : degree(x) < q}`
    ScaledOslash(Rational),
    /// `ρ^q·£ = {x : degree(x) ≤ q}`
    ScaledPound(Rational),
    Max,
}

/// Which factor a magnitude product is a precise multiple of.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Factor {
    Left,
    Right,
}

impl Neutrix {
    /// `⊘`, the infinitesimals.
    pub fn oslash() -> Self {
        Neutrix::ScaledOslash(Rational::zero())
    }

    /// `£`, the limited elements.
    pub fn pound() -> Self {
        Neutrix::ScaledPound(Rational::zero())
    }

    pub fn threshold(&self) -> Option<&Rational> {
        match self {
            Neutrix::ScaledOslash(q) | Neutrix::ScaledPound(q) => Some(q),
            Neutrix::Zero | Neutrix::Max => None,
        }
    }

    fn rank(&self) -> (u8, Option<&Rational>, u8) {
        match self {
            Neutrix::Zero => (0, None, 0),
            Neutrix::ScaledOslash(q) => (1, Some(q), 0),
            Neutrix::ScaledPound(q) => (1, Some(q), 1),
            Neutrix::Max => (2, None, 0),
        }
    }

    pub fn contains(&self, p: &PreciseNum) -> bool {
        match self {
            Neutrix::Zero => p.is_zero(),
            Neutrix::Max => true,
            Neutrix::ScaledOslash(q) => p.degree() < Some(q.clone()),
            Neutrix::ScaledPound(q) => p.degree() <= Some(q.clone()),
        }
    }

    /// Degree test behind [`contains`](Self::contains), for callers that only
    /// have a valuation at hand.
    pub fn contains_degree(&self, d: &Degree) -> bool {
        match self {
            Neutrix::Zero => d.is_none(),
            Neutrix::Max => true,
            Neutrix::ScaledOslash(q) => d < &Some(q.clone()),
            Neutrix::ScaledPound(q) => d <= &Some(q.clone()),
        }
    }

    /// Sum of magnitudes: the larger of the two.
    pub fn add(&self, other: &Neutrix) -> Neutrix {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn mul(&self, other: &Neutrix) -> Neutrix {
        use Neutrix::*;
        match (self, other) {
            (Zero, _) | (_, Zero) => Zero,
            (Max, _) | (_, Max) => Max,
            (ScaledOslash(q), ScaledOslash(r)) => ScaledOslash(q + r),
            (ScaledPound(q), ScaledPound(r)) => ScaledPound(q + r),
            (ScaledPound(q), ScaledOslash(r)) | (ScaledOslash(r), ScaledPound(q)) => {
                ScaledOslash(q + r)
            }
        }
    }

    /// `p·A` for a nonzero precise `p`. Only the degree of `p` matters.
    pub fn scale(&self, p: &PreciseNum) -> Result<Neutrix> {
        match p.degree() {
            None => Err(Error::ZeroScalar),
            Some(d) => Ok(self.shift(&d)),
        }
    }

    /// `p·A`, with `0·A = 0`.
    pub fn scale_or_zero(&self, p: &PreciseNum) -> Neutrix {
        self.scale(p).unwrap_or(Neutrix::Zero)
    }

    /// `ρ^d·A`
    pub fn shift(&self, d: &Rational) -> Neutrix {
        match self {
            Neutrix::ScaledOslash(q) => Neutrix::ScaledOslash(q + d),
            Neutrix::ScaledPound(q) => Neutrix::ScaledPound(q + d),
            other => other.clone(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    /// True when the magnitude contains 1, i.e. `1 < A` in the external order.
    pub fn above_unity(&self) -> bool {
        self.contains(&PreciseNum::one())
    }

    fn require_idempotent_above_one(&self) -> Result<()> {
        if !self.is_idempotent() {
            return Err(Error::NotIdempotent(self.to_string()));
        }
        if !self.above_unity() {
            return Err(Error::NotAboveUnity(self.to_string()));
        }
        Ok(())
    }

    /// Maximal ideal of an idempotent magnitude above 1: `⊘` for `£`,
    /// `0` for `M`.
    pub fn maximal_ideal(&self) -> Result<Neutrix> {
        self.require_idempotent_above_one()?;
        Ok(match self {
            Neutrix::Max => Neutrix::Zero,
            _ => Neutrix::oslash(),
        })
    }

    /// Whether `self` is an ideal of the idempotent magnitude `j > 1`:
    /// `self ≤ j` and `p·self ≤ self` for every precise `0 ≤ p < j`.
    ///
    /// For `j = £` the admissible `p` are the limited ones, which never raise
    /// a threshold, so every magnitude up to `£` qualifies. For `j = M` every
    /// precise `p` is admissible and only `0` and `M` survive.
    pub fn is_ideal_of(&self, j: &Neutrix) -> Result<bool> {
        j.require_idempotent_above_one()?;
        Ok(match j {
            Neutrix::Max => matches!(self, Neutrix::Zero | Neutrix::Max),
            _ => self <= j,
        })
    }

    /// Writes the magnitude as `p·I` with `I` idempotent. The idempotent part
    /// is unique; `p` may be replaced by any precise element of equal degree.
    pub fn decompose(&self) -> (PreciseNum, Neutrix) {
        match self {
            Neutrix::ScaledOslash(q) => (PreciseNum::rho_pow(q.clone()), Neutrix::oslash()),
            Neutrix::ScaledPound(q) => (PreciseNum::rho_pow(q.clone()), Neutrix::pound()),
            other => (PreciseNum::one(), other.clone()),
        }
    }

    /// A positive precise `p` and a factor `X ∈ {self, other}` with
    /// `self·other = p·X`.
    pub fn linearize(&self, other: &Neutrix) -> (PreciseNum, Factor) {
        use Neutrix::*;
        match (self, other) {
            (Zero, _) => (PreciseNum::one(), Factor::Left),
            (_, Zero) => (PreciseNum::one(), Factor::Right),
            (Max, _) => (PreciseNum::one(), Factor::Left),
            (_, Max) => (PreciseNum::one(), Factor::Right),
            (ScaledOslash(_), ScaledPound(q)) => (PreciseNum::rho_pow(q.clone()), Factor::Left),
            (ScaledPound(q), ScaledOslash(_)) => (PreciseNum::rho_pow(q.clone()), Factor::Right),
            (ScaledOslash(_), ScaledOslash(q)) | (ScaledPound(_), ScaledPound(q)) => {
                (PreciseNum::rho_pow(q.clone()), Factor::Left)
            }
        }
    }

    /// Least magnitude strictly above the positive precise `p`.
    pub fn least_above(p: &PreciseNum) -> Result<Neutrix> {
        if !p.is_positive() {
            return Err(Error::PreconditionFailed(format!("`{p}` is not positive")));
        }
        Ok(Neutrix::ScaledPound(p.degree().expect("nonzero")))
    }

    /// Greatest magnitude strictly below the positive precise `p`.
    pub fn greatest_below(p: &PreciseNum) -> Result<Neutrix> {
        if !p.is_positive() {
            return Err(Error::PreconditionFailed(format!("`{p}` is not positive")));
        }
        Ok(Neutrix::ScaledOslash(p.degree().expect("nonzero")))
    }

    /// A positive precise element of `upper` lying outside `lower`.
    /// Requires `lower < upper`.
    pub fn element_between(lower: &Neutrix, upper: &Neutrix) -> Option<PreciseNum> {
        if lower >= upper {
            return None;
        }
        let exponent = match (lower.threshold(), upper) {
            (_, Neutrix::ScaledPound(q)) => q.clone(),
            (Some(t), Neutrix::ScaledOslash(q)) => (t + q) / Rational::from_integer(2.into()),
            (None, Neutrix::ScaledOslash(q)) => q - Rational::one(),
            (Some(t), Neutrix::Max) => t + Rational::one(),
            (None, Neutrix::Max) => Rational::zero(),
            (_, Neutrix::Zero) => unreachable!("nothing lies below zero"),
        };
        Some(PreciseNum::rho_pow(exponent))
    }
}

impl Ord for Neutrix {
    /// `0 < ρ^q⊘ < ρ^q£ < ρ^{q'}⊘` for `q < q'`, all below `M`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Neutrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Neutrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scaled = |f: &mut fmt::Formatter<'_>, q: &Rational, sym: &str| {
            if q.is_zero() {
                f.write_str(sym)
            } else {
                write!(f, "rho^({})*{sym}", crate::field::fmt_rational(q))
            }
        };
        match self {
            Neutrix::Zero => f.write_str("0"),
            Neutrix::Max => f.write_str("M"),
            Neutrix::ScaledOslash(q) => scaled(f, q, "o"),
            Neutrix::ScaledPound(q) => scaled(f, q, "L"),
        }
    }
}
