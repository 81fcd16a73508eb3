//! External numbers `α = a + A`: a precise representative plus a magnitude.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{PreciseNum, Rational};
use crate::neutrix::Neutrix;

/// `rep + nx`, always stored in canonical form.
///
/// With `nx = 0` the representative is an arbitrary precise number. With
/// `nx = M` it is 0. Otherwise it is a ρ-polynomial with every term absorbed
/// by `nx` removed: `ρ^q·⊘` keeps exponents `≥ q`, `ρ^q·£` keeps exponents
/// `> q`. Two canonical forms denote the same set iff they are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExternalNum {
    rep: PreciseNum,
    nx: Neutrix,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Class {
    Precise,
    PureNeutrix,
    ZerolessNonPrecise,
}

/// How two external numbers sit relative to each other as sets. Exactly one
/// case applies to any pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SetRelation {
    Disjoint,
    Equal,
    ProperSubset,
    ProperSuperset,
}

impl ExternalNum {
    /// Canonical form of `rep + nx`.
    pub fn new(rep: PreciseNum, nx: Neutrix) -> Self {
        let rep = match &nx {
            Neutrix::Zero => rep,
            Neutrix::Max => PreciseNum::zero(),
            Neutrix::ScaledOslash(q) => PreciseNum::from_poly(rep.series_expand(q, false)),
            Neutrix::ScaledPound(q) => PreciseNum::from_poly(rep.series_expand(q, true)),
        };
        Self { rep, nx }
    }

    pub fn precise(p: PreciseNum) -> Self {
        Self {
            rep: p,
            nx: Neutrix::Zero,
        }
    }

    pub fn from_neutrix(nx: Neutrix) -> Self {
        Self {
            rep: PreciseNum::zero(),
            nx,
        }
    }

    pub fn zero() -> Self {
        Self::precise(PreciseNum::zero())
    }

    pub fn one() -> Self {
        Self::precise(PreciseNum::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::precise(PreciseNum::from_int(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::precise(PreciseNum::from_rational(q))
    }

    pub fn rep(&self) -> &PreciseNum {
        &self.rep
    }

    pub fn nx(&self) -> &Neutrix {
        &self.nx
    }

    /// The magnitude `e(α)` as an external number `0 + A`.
    pub fn magnitude(&self) -> ExternalNum {
        Self::from_neutrix(self.nx.clone())
    }

    pub fn is_precise(&self) -> bool {
        self.nx == Neutrix::Zero
    }

    /// `0 ∉ α`
    pub fn is_zeroless(&self) -> bool {
        !self.nx.contains(&self.rep)
    }

    pub fn classify(&self) -> Class {
        if self.is_precise() {
            Class::Precise
        } else if self.nx.contains(&self.rep) {
            Class::PureNeutrix
        } else {
            Class::ZerolessNonPrecise
        }
    }

    /// `y ∈ α`
    pub fn contains(&self, y: &PreciseNum) -> bool {
        self.nx.contains(&(y - &self.rep))
    }

    pub fn relation(&self, other: &ExternalNum) -> SetRelation {
        let delta = &self.rep - &other.rep;
        if !self.nx.add(&other.nx).contains(&delta) {
            return SetRelation::Disjoint;
        }
        match self.nx.cmp(&other.nx) {
            Ordering::Less => SetRelation::ProperSubset,
            Ordering::Equal => SetRelation::Equal,
            Ordering::Greater => SetRelation::ProperSuperset,
        }
    }

    /// Order of external numbers: `α ≤ β` iff every element of `α` is below
    /// some element of `β`.
    ///
    /// Disjoint numbers compare by any pair of representatives. Overlapping
    /// numbers are nested, and the smaller set is the smaller number.
    pub fn compare(&self, other: &ExternalNum) -> Ordering {
        let delta = &self.rep - &other.rep;
        if self.nx.add(&other.nx).contains(&delta) {
            self.nx.cmp(&other.nx)
        } else {
            delta.signum().cmp(&0)
        }
    }

    pub fn ext_add(&self, other: &ExternalNum) -> ExternalNum {
        Self::new(&self.rep + &other.rep, self.nx.add(&other.nx))
    }

    pub fn ext_neg(&self) -> ExternalNum {
        Self {
            rep: -&self.rep,
            nx: self.nx.clone(),
        }
    }

    pub fn ext_sub(&self, other: &ExternalNum) -> ExternalNum {
        self.ext_add(&other.ext_neg())
    }

    /// `(a + A)(b + B) = ab + aB + bA + AB`
    pub fn ext_mul(&self, other: &ExternalNum) -> ExternalNum {
        let nx = other
            .nx
            .scale_or_zero(&self.rep)
            .add(&self.nx.scale_or_zero(&other.rep))
            .add(&self.nx.mul(&other.nx));
        Self::new(&self.rep * &other.rep, nx)
    }

    fn require_zeroless(&self) -> Result<()> {
        if self.is_zeroless() {
            Ok(())
        } else {
            Err(Error::NotZeroless(self.to_string()))
        }
    }

    /// `1/(b + B) = 1/b + B/b²` for zeroless `b + B`.
    pub fn ext_inv(&self) -> Result<ExternalNum> {
        self.require_zeroless()?;
        let inv = self.rep.recip()?;
        let nx = self.nx.scale_or_zero(&(&inv * &inv));
        Ok(Self::new(inv, nx))
    }

    pub fn ext_div(&self, other: &ExternalNum) -> Result<ExternalNum> {
        Ok(self.ext_mul(&other.ext_inv()?))
    }

    /// `u(α) = 1 + A/a` for zeroless `α`.
    pub fn unity(&self) -> Result<ExternalNum> {
        self.require_zeroless()?;
        let nx = self.nx.scale_or_zero(&self.rep.recip()?);
        Ok(Self::new(PreciseNum::one(), nx))
    }

    /// `|α|`: the representative's sign decides, the magnitude is unchanged.
    pub fn abs(&self) -> ExternalNum {
        if self.rep.is_negative() {
            self.ext_neg()
        } else {
            self.clone()
        }
    }

    /// `|α| ≤ £`
    pub fn is_limited(&self) -> bool {
        self.rep.degree() <= Some(Rational::zero()) && self.nx <= Neutrix::pound()
    }

    /// The shadow `α + ⊘` of a limited number.
    pub fn shadow(&self) -> Result<ExternalNum> {
        if !self.is_limited() {
            return Err(Error::NotLimited(self.to_string()));
        }
        Ok(Self::new(self.rep.clone(), self.nx.add(&Neutrix::oslash())))
    }
}

impl Ord for ExternalNum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl PartialOrd for ExternalNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<PreciseNum> for ExternalNum {
    fn from(p: PreciseNum) -> Self {
        Self::precise(p)
    }
}

impl From<Neutrix> for ExternalNum {
    fn from(nx: Neutrix) -> Self {
        Self::from_neutrix(nx)
    }
}

impl Neg for &ExternalNum {
    type Output = ExternalNum;
    fn neg(self) -> ExternalNum {
        self.ext_neg()
    }
}

impl Neg for ExternalNum {
    type Output = ExternalNum;
    fn neg(self) -> ExternalNum {
        self.ext_neg()
    }
}

impl Add for &ExternalNum {
    type Output = ExternalNum;
    fn add(self, rhs: &ExternalNum) -> ExternalNum {
        self.ext_add(rhs)
    }
}

impl Sub for &ExternalNum {
    type Output = ExternalNum;
    fn sub(self, rhs: &ExternalNum) -> ExternalNum {
        self.ext_sub(rhs)
    }
}

impl Mul for &ExternalNum {
    type Output = ExternalNum;
    fn mul(self, rhs: &ExternalNum) -> ExternalNum {
        self.ext_mul(rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for ExternalNum {
            type Output = ExternalNum;
            fn $m(self, rhs: ExternalNum) -> ExternalNum {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for ExternalNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.nx, self.rep.is_zero()) {
            (Neutrix::Zero, _) => write!(f, "{}", self.rep),
            (nx, true) => write!(f, "{nx}"),
            (nx, false) => write!(f, "{} + {nx}", self.rep),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat, RhoPoly};

    fn p(n: i64) -> PreciseNum {
        PreciseNum::from_int(n)
    }

    fn rho() -> PreciseNum {
        PreciseNum::rho()
    }

    fn rho_pow(n: i64, d: i64) -> PreciseNum {
        PreciseNum::rho_pow(rat(n, d))
    }

    fn x(rep: PreciseNum, nx: Neutrix) -> ExternalNum {
        ExternalNum::new(rep, nx)
    }

    fn o() -> Neutrix {
        Neutrix::oslash()
    }

    fn l() -> Neutrix {
        Neutrix::pound()
    }

    fn geometric() -> PreciseNum {
        let den = &p(1) - &rho().recip().unwrap();
        den.recip().unwrap()
    }

    #[test]
    fn canonical_forms_absorb() {
        let r = &(&rho() + &p(3)) + &rho().recip().unwrap();
        assert_eq!(x(r, l()), x(rho(), l()));
        assert_eq!(x(geometric(), o()), x(p(1), o()));
        assert_eq!(x(p(7), Neutrix::Max), ExternalNum::from_neutrix(Neutrix::Max));
        let g = x(geometric(), Neutrix::Zero);
        assert_eq!(g.rep(), &geometric());
        // ρ^2·⊘ keeps the ρ^2 term, ρ^2·£ drops it.
        let r = &rho_pow(2, 1) + &rho();
        assert_eq!(x(r.clone(), Neutrix::ScaledOslash(int(2))).rep(), &rho_pow(2, 1));
        assert!(x(r, Neutrix::ScaledPound(int(2))).rep().is_zero());
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&x(rho(), l()) + &x(p(3), o()), x(rho(), l()));
        let a = x(rho(), o());
        assert_eq!(&a + &ExternalNum::zero(), a);
        let five = x(p(5), o());
        assert_eq!(&five - &five, ExternalNum::from_neutrix(o()));
    }

    #[test]
    fn multiplication_examples() {
        let a = x(p(1), o());
        assert_eq!(&a * &a, a);
        let b = x(rho(), l());
        assert_eq!(&b * &ExternalNum::one(), b);
        assert_eq!(&b * &b, x(rho_pow(2, 1), Neutrix::ScaledPound(int(1))));
        let zero_times_max = &ExternalNum::zero() * &ExternalNum::from_neutrix(Neutrix::Max);
        assert_eq!(zero_times_max, ExternalNum::zero());
    }

    #[test]
    fn inverse_examples() {
        let b = x(rho(), l());
        let inv = b.ext_inv().unwrap();
        assert_eq!(inv, x(rho().recip().unwrap(), Neutrix::ScaledPound(int(-2))));
        assert_eq!(&b * &inv, b.unity().unwrap());
        assert_eq!(ExternalNum::from_int(2).ext_inv().unwrap(), ExternalNum::from_rational(rat(1, 2)));
        assert!(matches!(
            ExternalNum::from_neutrix(l()).ext_inv(),
            Err(Error::NotZeroless(_))
        ));
        assert!(matches!(ExternalNum::zero().ext_inv(), Err(Error::NotZeroless(_))));
    }

    #[test]
    fn unity_example() {
        let u = x(rho(), l()).unity().unwrap();
        assert_eq!(u, x(p(1), Neutrix::ScaledPound(int(-1))));
        assert_eq!(ExternalNum::from_int(-4).unity().unwrap(), ExternalNum::one());
    }

    #[test]
    fn comparison_examples() {
        let zero = ExternalNum::zero();
        let oslash = ExternalNum::from_neutrix(o());
        assert_eq!(zero.compare(&oslash), Ordering::Less);
        assert_eq!(oslash.compare(&oslash), Ordering::Equal);
        assert_eq!(x(p(1), o()).compare(&x(p(1), l())), Ordering::Less);
        assert_eq!(x(p(1), o()).compare(&ExternalNum::from_neutrix(l())), Ordering::Less);
        assert!(oslash < ExternalNum::one());
        assert!(ExternalNum::one() < ExternalNum::from_neutrix(l()));
        assert!(ExternalNum::from_neutrix(l()) < ExternalNum::from_neutrix(Neutrix::Max));
        assert!(ExternalNum::from_neutrix(Neutrix::Max) > ExternalNum::precise(rho()));
    }

    #[test]
    fn relations() {
        let a = x(p(1), o());
        assert_eq!(a.relation(&x(p(1), l())), SetRelation::ProperSubset);
        assert_eq!(x(p(1), l()).relation(&a), SetRelation::ProperSuperset);
        assert_eq!(a.relation(&x(p(2), o())), SetRelation::Disjoint);
        assert_eq!(a.relation(&a), SetRelation::Equal);
    }

    #[test]
    fn classification() {
        assert_eq!(x(p(3), o()).nx(), &o());
        assert_eq!(ExternalNum::from_neutrix(l()).classify(), Class::PureNeutrix);
        assert_eq!(ExternalNum::from_neutrix(Neutrix::Max).classify(), Class::PureNeutrix);
        assert_eq!(x(rho(), l()).classify(), Class::ZerolessNonPrecise);
        assert_eq!(ExternalNum::zero().classify(), Class::Precise);
    }

    #[test]
    fn membership() {
        let limited = ExternalNum::from_neutrix(l());
        assert!(limited.contains(&p(3)));
        assert!(!limited.contains(&rho()));
        let y = &p(1) + &rho().recip().unwrap();
        assert!(x(p(1), o()).contains(&y));
    }

    #[test]
    fn shadows() {
        let a = ExternalNum::precise(&p(3) + &rho().recip().unwrap());
        assert_eq!(a.shadow().unwrap(), x(p(3), o()));
        assert_eq!(ExternalNum::zero().shadow().unwrap(), ExternalNum::from_neutrix(o()));
        assert!(matches!(ExternalNum::precise(rho()).shadow(), Err(Error::NotLimited(_))));
        assert!(matches!(
            ExternalNum::from_neutrix(Neutrix::ScaledOslash(int(1))).shadow(),
            Err(Error::NotLimited(_))
        ));
    }

    #[test]
    fn absolute_value() {
        let a = x(-&rho(), l());
        assert_eq!(a.abs(), x(rho(), l()));
        let n = ExternalNum::from_neutrix(o());
        assert_eq!(n.abs(), n);
    }

    #[test]
    fn rendering() {
        assert_eq!(x(rho(), l()).to_string(), "rho + L");
        assert_eq!(ExternalNum::from_neutrix(o()).to_string(), "o");
        assert_eq!(ExternalNum::from_int(-3).to_string(), "-3");
        let poly = RhoPoly::from_terms([(int(2), int(1)), (int(-1), int(0))]);
        let a = x(PreciseNum::from_poly(poly), Neutrix::ScaledPound(int(-1)));
        assert_eq!(a.to_string(), "2*rho - 1 + rho^(-1)*L");
        assert_eq!(ExternalNum::precise(geometric()).to_string(), "(rho)/(rho - 1)");
    }
}
