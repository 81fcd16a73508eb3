//! Greedy counterexample shrinking.
//!
//! Candidates are tried in a fixed order: dropping terms and clearing
//! exponent denominators, then shrinking coefficients, then simplifying the
//! neutrix. A candidate is kept only if it is strictly smaller under
//! [`size`] and the predicate still fails on it.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::field::{PreciseNum, Rational, RhoPoly};
use crate::{ExternalNum, Neutrix};

use super::{Check, Outcome};

const MAX_STEPS: usize = 300;

type Size = (usize, BigInt, BigInt, BigInt);

fn den_sum(p: &RhoPoly) -> BigInt {
    p.terms().map(|(e, _)| e.denom().clone()).sum()
}

fn coeff_sum(p: &RhoPoly) -> BigInt {
    p.terms()
        .map(|(_, c)| c.numer().abs() + c.denom())
        .sum()
}

fn nx_size(nx: &Neutrix) -> (BigInt, BigInt) {
    match nx {
        Neutrix::Zero => (BigInt::zero(), BigInt::zero()),
        Neutrix::ScaledOslash(q) | Neutrix::ScaledPound(q) => {
            (q.denom().clone(), q.numer().abs() + BigInt::one())
        }
        Neutrix::Max => (BigInt::zero(), BigInt::one()),
    }
}

/// Term count, then exponent denominators, then coefficient size, then the
/// neutrix threshold.
fn size(xs: &[ExternalNum]) -> Size {
    let mut s: Size = Default::default();
    for x in xs {
        let (num, den) = (x.rep().num(), x.rep().den());
        let (nd, nq) = nx_size(x.nx());
        s.0 += num.len() + if den.is_one() { 0 } else { den.len() };
        s.1 += den_sum(num) + den_sum(den) + nd;
        s.2 += coeff_sum(num) + coeff_sum(den);
        s.3 += nq;
    }
    s
}

fn with_rep(x: &ExternalNum, num: RhoPoly) -> ExternalNum {
    ExternalNum::new(PreciseNum::from_poly(num), x.nx().clone())
}

fn candidates(x: &ExternalNum) -> Vec<ExternalNum> {
    let mut out = Vec::new();
    let num = x.rep().num();
    let den = x.rep().den();
    if !den.is_one() {
        out.push(with_rep(x, num.clone()));
    }
    let poly = x.rep().as_poly().cloned();
    if let Some(p) = &poly {
        for (e, _) in p.terms() {
            out.push(with_rep(x, p.without_term(e)));
        }
        for (e, c) in p.terms() {
            if !e.is_integer() {
                for e2 in [e.floor(), e.ceil()] {
                    let q = &p.without_term(e) + &RhoPoly::monomial(c.clone(), e2);
                    out.push(with_rep(x, q));
                }
            }
        }
        for (e, c) in p.terms() {
            let mut smaller = vec![c.signum()];
            if !c.is_integer() {
                smaller.push(c.trunc());
                smaller.push(c.round());
            }
            let half = (c / Rational::from_integer(BigInt::from(2))).trunc();
            smaller.push(half);
            for c2 in smaller {
                if &c2 != c {
                    let q = &p.without_term(e) + &RhoPoly::monomial(c2, e.clone());
                    out.push(with_rep(x, q));
                }
            }
        }
    }
    let rep = x.rep().clone();
    match x.nx() {
        Neutrix::Zero => {}
        Neutrix::Max => out.push(ExternalNum::new(rep.clone(), Neutrix::pound())),
        Neutrix::ScaledOslash(q) | Neutrix::ScaledPound(q) => {
            let make = |t: Rational| match x.nx() {
                Neutrix::ScaledOslash(_) => Neutrix::ScaledOslash(t),
                _ => Neutrix::ScaledPound(t),
            };
            out.push(ExternalNum::new(rep.clone(), Neutrix::Zero));
            if !q.is_integer() {
                out.push(ExternalNum::new(rep.clone(), make(q.floor())));
                out.push(ExternalNum::new(rep.clone(), make(q.ceil())));
            }
            if !q.is_zero() {
                out.push(ExternalNum::new(rep.clone(), make(Rational::zero())));
            }
            if let Neutrix::ScaledPound(q) = x.nx() {
                out.push(ExternalNum::new(rep, Neutrix::ScaledOslash(q.clone())));
            }
        }
    }
    out
}

/// Shrinks a failing tuple; returns the smallest tuple found and its outcome.
pub(crate) fn shrink(
    check: &Check,
    mut xs: Vec<ExternalNum>,
    mut out: Outcome,
) -> (Vec<ExternalNum>, Outcome) {
    let mut best = size(&xs);
    for _ in 0..MAX_STEPS {
        let mut improved = false;
        'outer: for i in 0..xs.len() {
            for cand in candidates(&xs[i]) {
                let mut ys = xs.clone();
                ys[i] = cand;
                let s = size(&ys);
                if s >= best {
                    continue;
                }
                let o = check.evaluate(&ys);
                if o.is_fail() {
                    xs = ys;
                    out = o;
                    best = s;
                    improved = true;
                    break 'outer;
                }
            }
        }
        if !improved {
            break;
        }
    }
    (xs, out)
}
