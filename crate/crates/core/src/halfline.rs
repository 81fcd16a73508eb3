//! Halflines of external numbers and their weak bounds.
//!
//! Every lower halfline is one of `{x ≤ ρ}`, `{x < σ}` or `{x + e(τ) < τ}`
//! for an external number bound; upper halflines are their complements.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::external::ExternalNum;
use crate::field::{rat, PreciseNum, Rational};
use crate::neutrix::Neutrix;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Kind {
    Closed,
    Open,
    StronglyOpen,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Closed, Kind::Open, Kind::StronglyOpen];
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Halfline {
    pub side: Side,
    pub kind: Kind,
    pub bound: ExternalNum,
}

impl Halfline {
    pub fn new(side: Side, kind: Kind, bound: ExternalNum) -> Self {
        Self { side, kind, bound }
    }

    pub fn lower(kind: Kind, bound: ExternalNum) -> Self {
        Self::new(Side::Lower, kind, bound)
    }

    pub fn upper(kind: Kind, bound: ExternalNum) -> Self {
        Self::new(Side::Upper, kind, bound)
    }

    /// `x + e(τ) < τ`: `x` lies below every element of the bound `τ`.
    fn below_hole(&self, x: &ExternalNum) -> bool {
        let shifted = x.ext_add(&self.bound.magnitude());
        shifted < self.bound
    }

    pub fn contains(&self, x: &ExternalNum) -> bool {
        let b = &self.bound;
        match (self.side, self.kind) {
            (Side::Lower, Kind::Closed) => x <= b,
            (Side::Lower, Kind::Open) => x < b,
            (Side::Lower, Kind::StronglyOpen) => self.below_hole(x),
            (Side::Upper, Kind::Closed) => b <= x,
            (Side::Upper, Kind::Open) => b < x,
            (Side::Upper, Kind::StronglyOpen) => !self.below_hole(x),
        }
    }

    /// True for the two representations of the whole domain, `{x ≤ M}` and
    /// its upper counterpart `]]M, +inf)`.
    pub fn is_entire_domain(&self) -> bool {
        *self.bound.nx() == Neutrix::Max
            && matches!(
                (self.side, self.kind),
                (Side::Lower, Kind::Closed) | (Side::Upper, Kind::StronglyOpen)
            )
    }

    pub fn complement(&self) -> Result<Halfline> {
        if self.is_entire_domain() {
            return Err(Error::DegenerateDomain);
        }
        let (side, kind) = match (self.side, self.kind) {
            (Side::Lower, Kind::Closed) => (Side::Upper, Kind::Open),
            (Side::Lower, Kind::Open) => (Side::Upper, Kind::Closed),
            (Side::Lower, Kind::StronglyOpen) => (Side::Upper, Kind::StronglyOpen),
            (Side::Upper, Kind::Closed) => (Side::Lower, Kind::Open),
            (Side::Upper, Kind::Open) => (Side::Lower, Kind::Closed),
            (Side::Upper, Kind::StronglyOpen) => (Side::Lower, Kind::StronglyOpen),
        };
        Ok(Self::new(side, kind, self.bound.clone()))
    }

    /// Weak least upper bound of a lower halfline.
    pub fn zup(&self) -> Result<&ExternalNum> {
        match self.side {
            Side::Lower => Ok(&self.bound),
            Side::Upper => Err(Error::PreconditionFailed(
                "zup is taken of a lower halfline".into(),
            )),
        }
    }

    /// Weak greatest lower bound of an upper halfline.
    pub fn winf(&self) -> Result<&ExternalNum> {
        match self.side {
            Side::Upper => Ok(&self.bound),
            Side::Lower => Err(Error::PreconditionFailed(
                "winf is taken of an upper halfline".into(),
            )),
        }
    }
}

impl fmt::Display for Halfline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = &self.bound;
        match (self.side, self.kind) {
            (Side::Lower, Kind::Closed) => write!(f, "(-inf, {b}]"),
            (Side::Lower, Kind::Open) => write!(f, "(-inf, {b})"),
            (Side::Lower, Kind::StronglyOpen) => write!(f, "(-inf, {b}[["),
            (Side::Upper, Kind::Closed) => write!(f, "[{b}, +inf)"),
            (Side::Upper, Kind::Open) => write!(f, "({b}, +inf)"),
            (Side::Upper, Kind::StronglyOpen) => write!(f, "]]{b}, +inf)"),
        }
    }
}

/// The lower halfline generated by a finite set: everything below some
/// element. Its bound is the maximum and the halfline is closed.
pub fn zup_finite(set: &[ExternalNum]) -> Result<Halfline> {
    let max = set.iter().max().ok_or(Error::EmptySet)?;
    Ok(Halfline::lower(Kind::Closed, max.clone()))
}

/// A precise `p` with `x < p < y`.
///
/// Disjoint `x < y` are separated by the midpoint of their representatives:
/// halving an element outside a magnitude keeps it outside. Otherwise
/// `x ⊂ y`, and adding to `x`'s representative a positive element of
/// `e(y) \ e(x)` lands inside `y` but above `x`.
pub fn separate_precise(x: &ExternalNum, y: &ExternalNum) -> Result<PreciseNum> {
    if x >= y {
        return Err(Error::NotStrictlyOrdered(x.to_string(), y.to_string()));
    }
    let (a, b) = (x.rep(), y.rep());
    let delta = b - a;
    if !x.nx().add(y.nx()).contains(&delta) {
        return Ok((a + b).scale(&rat(1, 2)));
    }
    let w = Neutrix::element_between(x.nx(), y.nx())
        .expect("overlapping numbers with x < y are nested with e(x) < e(y)");
    Ok(a + &w)
}

/// A precise `p` with `x < p` and `p + e(τ) < τ`, given `x + e(τ) < τ`.
///
/// Follows the halving construction `p = q/2` for the representative `q` of
/// `τ` when that works, and otherwise takes the midpoint of the two
/// representatives. The precondition forces `x + e(τ)` and `τ` to be
/// disjoint, so the midpoint is always admissible.
pub fn separate_from_hole(x: &ExternalNum, tau: &ExternalNum) -> Result<PreciseNum> {
    let hole = Halfline::lower(Kind::StronglyOpen, tau.clone());
    if !hole.contains(x) {
        return Err(Error::PreconditionFailed(format!(
            "`{x}` is not below every element of `{tau}`"
        )));
    }
    let ok = |p: &PreciseNum| {
        let p_ext = ExternalNum::precise(p.clone());
        *x < p_ext && hole.contains(&p_ext)
    };
    let half = tau.rep().scale(&rat(1, 2));
    if ok(&half) {
        return Ok(half);
    }
    let mid = (x.rep() + tau.rep()).scale(&rat(1, 2));
    debug_assert!(ok(&mid));
    Ok(mid)
}

/// Precise probes around `b`: its representative and points just inside and
/// just outside its magnitude on either side.
fn probes_around(b: &ExternalNum) -> Vec<PreciseNum> {
    let a = b.rep().clone();
    let mut out = vec![a.clone()];
    let exps: Vec<Rational> = match b.nx().threshold() {
        Some(q) => vec![q - rat(1, 2), q.clone(), q + rat(1, 2)],
        None => vec![-Rational::one(), Rational::zero(), Rational::one()],
    };
    for e in exps {
        let w = PreciseNum::rho_pow(e);
        out.push(&a + &w);
        out.push(&a - &w);
    }
    if *b.nx() == Neutrix::Max {
        out.push(PreciseNum::zero());
    }
    out
}

/// Finds an external number that belongs to exactly one of `h1`, `h2`.
///
/// Candidates are the bounds, precise probes around them, and the outputs of
/// the separation constructions between the bounds.
pub fn separating_element(h1: &Halfline, h2: &Halfline) -> Option<ExternalNum> {
    let (b1, b2) = (&h1.bound, &h2.bound);
    let mut candidates = vec![b1.clone(), b2.clone(), b1.magnitude(), b2.magnitude()];
    for b in [b1, b2] {
        candidates.extend(probes_around(b).into_iter().map(ExternalNum::precise));
    }
    for (lo, hi) in [(b1, b2), (b2, b1)] {
        if lo.compare(hi) == Ordering::Less {
            if let Ok(p) = separate_precise(lo, hi) {
                candidates.push(ExternalNum::precise(p));
            }
        }
        if let Ok(p) = separate_from_hole(lo, hi) {
            candidates.push(ExternalNum::precise(p));
        }
    }
    candidates
        .into_iter()
        .find(|c| h1.contains(c) != h2.contains(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    fn p(n: i64) -> PreciseNum {
        PreciseNum::from_int(n)
    }

    fn rho() -> PreciseNum {
        PreciseNum::rho()
    }

    fn ext(rep: PreciseNum, nx: Neutrix) -> ExternalNum {
        ExternalNum::new(rep, nx)
    }

    fn limited() -> ExternalNum {
        ExternalNum::from_neutrix(Neutrix::pound())
    }

    fn sample_points() -> Vec<ExternalNum> {
        let mut out = Vec::new();
        let nxs = [
            Neutrix::Zero,
            Neutrix::oslash(),
            Neutrix::pound(),
            Neutrix::ScaledPound(int(1)),
            Neutrix::Max,
        ];
        let reps = [p(0), p(1), p(-1), rho(), -&rho(), &rho() + &p(2), rho().recip().unwrap()];
        for r in &reps {
            for nx in &nxs {
                out.push(ext(r.clone(), nx.clone()));
            }
        }
        out
    }

    #[test]
    fn membership_examples() {
        let b = ext(p(1), Neutrix::oslash());
        assert!(Halfline::lower(Kind::Closed, b.clone()).contains(&ExternalNum::one()));
        let hole = Halfline::lower(Kind::StronglyOpen, limited());
        assert!(hole.contains(&ExternalNum::precise(-&rho())));
        assert!(!hole.contains(&ExternalNum::from_int(-1)));
        assert!(!Halfline::lower(Kind::Open, b.clone()).contains(&b));
    }

    /// `x` lies below the hole `τ` iff it is below every sampled element of `τ`.
    #[test]
    fn strongly_open_matches_enumeration() {
        let tau = ext(rho(), Neutrix::pound());
        let hole = Halfline::lower(Kind::StronglyOpen, tau.clone());
        let ts: Vec<PreciseNum> = [-1000, -3, 0, 7, 1000]
            .into_iter()
            .map(|k| tau.rep() + &p(k))
            .chain([tau.rep() + &rho().recip().unwrap()])
            .collect();
        for x in sample_points() {
            if hole.contains(&x) {
                for t in &ts {
                    assert!(x < ExternalNum::precise(t.clone()), "{x} vs {t}");
                }
            }
        }
        for k in [-50, 0, 50] {
            let x = ExternalNum::precise(tau.rep() + &p(k));
            assert!(!hole.contains(&x));
        }
        let below = ExternalNum::precise(tau.rep() - &PreciseNum::rho_pow(rat(1, 2)));
        assert!(hole.contains(&below));
    }

    #[test]
    fn complement_partitions() {
        let bounds = [ext(p(1), Neutrix::oslash()), limited(), ext(rho(), Neutrix::Zero)];
        for b in &bounds {
            for side in [Side::Lower, Side::Upper] {
                for kind in Kind::ALL {
                    let h = Halfline::new(side, kind, b.clone());
                    let c = h.complement().unwrap();
                    assert_eq!(c.complement().unwrap(), h);
                    for x in sample_points() {
                        assert_ne!(h.contains(&x), c.contains(&x), "{h} {x}");
                    }
                }
            }
        }
        let c = Halfline::lower(Kind::Closed, ext(p(1), Neutrix::oslash())).complement();
        assert_eq!(c.unwrap(), Halfline::upper(Kind::Open, ext(p(1), Neutrix::oslash())));
        let c = Halfline::lower(Kind::StronglyOpen, limited()).complement().unwrap();
        assert_eq!(c, Halfline::upper(Kind::StronglyOpen, limited()));
    }

    #[test]
    fn entire_domain_has_no_complement() {
        let m = ExternalNum::from_neutrix(Neutrix::Max);
        let all = Halfline::lower(Kind::Closed, m.clone());
        for x in sample_points() {
            assert!(all.contains(&x));
        }
        assert_eq!(all.complement(), Err(Error::DegenerateDomain));
        assert_eq!(
            Halfline::upper(Kind::StronglyOpen, m).complement(),
            Err(Error::DegenerateDomain)
        );
    }

    #[test]
    fn weak_bounds() {
        let b = ext(rho(), Neutrix::pound());
        assert_eq!(Halfline::lower(Kind::Closed, b.clone()).zup(), Ok(&b));
        assert_eq!(Halfline::lower(Kind::StronglyOpen, limited()).zup(), Ok(&limited()));
        assert!(Halfline::upper(Kind::Closed, b.clone()).zup().is_err());
        assert_eq!(Halfline::upper(Kind::Open, b.clone()).winf(), Ok(&b));
    }

    /// The magnitudes above 1 form the upper halfline `[£, +inf)`.
    #[test]
    fn pound_is_winf_of_magnitudes_above_one() {
        let h = Halfline::upper(Kind::Closed, limited());
        let mut mags = vec![Neutrix::Zero, Neutrix::Max];
        for n in -6..=6 {
            mags.push(Neutrix::ScaledOslash(rat(n, 3)));
            mags.push(Neutrix::ScaledPound(rat(n, 3)));
        }
        for e in mags {
            let x = ExternalNum::from_neutrix(e);
            assert_eq!(h.contains(&x), ExternalNum::one() < x, "{x}");
        }
    }

    #[test]
    fn finite_zup() {
        let a = ExternalNum::from_neutrix(Neutrix::oslash());
        let b = ext(p(1), Neutrix::oslash());
        assert_eq!(zup_finite(&[a.clone(), b.clone()]).unwrap().bound, b);
        assert_eq!(zup_finite(std::slice::from_ref(&a)).unwrap().bound, a);
        let s = [
            ExternalNum::from_neutrix(Neutrix::ScaledOslash(int(-2))),
            ExternalNum::from_neutrix(Neutrix::ScaledPound(int(-1))),
        ];
        let z = zup_finite(&s).unwrap();
        assert_eq!(z.bound, s[1]);
        assert_eq!(z.kind, Kind::Closed);
        assert_eq!(zup_finite(&[]), Err(Error::EmptySet));
    }

    #[test]
    fn precise_separation() {
        let pairs = [
            (ExternalNum::from_neutrix(Neutrix::oslash()), limited()),
            (ExternalNum::zero(), ExternalNum::from_int(2)),
            (
                ExternalNum::from_neutrix(Neutrix::ScaledOslash(int(1))),
                ExternalNum::from_neutrix(Neutrix::ScaledPound(int(2))),
            ),
            (ext(p(1), Neutrix::oslash()), ext(p(1), Neutrix::pound())),
            (ExternalNum::precise(rho()), ExternalNum::from_neutrix(Neutrix::Max)),
        ];
        for (x, y) in pairs {
            let s = ExternalNum::precise(separate_precise(&x, &y).unwrap());
            assert!(x < s && s < y, "{x} < {s} < {y}");
        }
        let one = separate_precise(&ExternalNum::from_neutrix(Neutrix::oslash()), &limited());
        assert_eq!(one, Ok(p(1)));
        assert_eq!(separate_precise(&ExternalNum::zero(), &ExternalNum::from_int(2)), Ok(p(1)));
        assert!(matches!(
            separate_precise(&limited(), &limited()),
            Err(Error::NotStrictlyOrdered(..))
        ));
    }

    #[test]
    fn hole_separation() {
        let half_rho = rho().scale(&rat(1, 2));
        let tau = ext(rho(), Neutrix::pound());
        assert_eq!(separate_from_hole(&ExternalNum::zero(), &tau), Ok(half_rho.clone()));
        let r = separate_from_hole(&ExternalNum::from_int(-1), &ExternalNum::one());
        assert_eq!(r, Ok(PreciseNum::from_rational(rat(1, 2))));
        let tau = ext(rho(), Neutrix::ScaledPound(rat(1, 2)));
        let w = separate_from_hole(&limited(), &tau).unwrap();
        assert_eq!(w, half_rho);
        let hole = Halfline::lower(Kind::StronglyOpen, tau.clone());
        assert!(limited() < ExternalNum::precise(w.clone()));
        assert!(hole.contains(&ExternalNum::precise(w)));
        // q/2 is not above x here, so the midpoint is used.
        let x = ExternalNum::precise(&rho() - &p(5));
        let tau = ext(rho(), Neutrix::oslash());
        let s = separate_from_hole(&x, &tau).unwrap();
        assert!(x < ExternalNum::precise(s.clone()));
        assert!(Halfline::lower(Kind::StronglyOpen, tau.clone()).contains(&ExternalNum::precise(s)));
        assert!(matches!(
            separate_from_hole(&ExternalNum::one(), &limited()),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn kinds_are_distinguished_for_non_precise_bounds() {
        for b in [ext(p(1), Neutrix::oslash()), limited(), ext(-&rho(), Neutrix::ScaledPound(rat(1, 2)))] {
            for k1 in Kind::ALL {
                for k2 in Kind::ALL {
                    if k1 == k2 {
                        continue;
                    }
                    let h1 = Halfline::lower(k1, b.clone());
                    let h2 = Halfline::lower(k2, b.clone());
                    assert!(separating_element(&h1, &h2).is_some(), "{h1} {h2}");
                }
            }
        }
    }

    #[test]
    fn precise_bounds_collapse_open_kinds() {
        let b = ExternalNum::precise(&rho() + &p(1));
        let open = Halfline::lower(Kind::Open, b.clone());
        let strong = Halfline::lower(Kind::StronglyOpen, b.clone());
        for x in sample_points().into_iter().chain([b.clone()]) {
            assert_eq!(open.contains(&x), strong.contains(&x), "{x}");
        }
        assert!(separating_element(&open, &strong).is_none());
    }

    #[test]
    fn rendering() {
        let b = ext(p(1), Neutrix::oslash());
        assert_eq!(Halfline::lower(Kind::Closed, b.clone()).to_string(), "(-inf, 1 + o]");
        assert_eq!(Halfline::lower(Kind::StronglyOpen, b.clone()).to_string(), "(-inf, 1 + o[[");
        assert_eq!(Halfline::upper(Kind::StronglyOpen, b).to_string(), "]]1 + o, +inf)");
    }
}
