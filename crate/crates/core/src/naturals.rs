//! Natural numbers: ρ-polynomials with integer exponents `≥ 0`, integer
//! coefficients and nonnegative value, such as `ρ − 1`.
//!
//! This family is closed under `+` and `·`, discrete and cofinal, so the
//! axioms on `N` and the Archimedean axiom hold. Full induction cannot hold
//! for any computable interpretation; [`induction_spotcheck`] tests a fixed
//! catalog of instances, and "every natural is even or odd" is a known
//! failure at `x = ρ`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::external::ExternalNum;
use crate::field::{int, rat, PreciseNum, Rational, RhoPoly};
use crate::neutrix::Neutrix;

pub fn is_natural(p: &PreciseNum) -> bool {
    match p.as_poly() {
        Some(poly) => is_natural_poly(poly),
        None => false,
    }
}

fn is_natural_poly(poly: &RhoPoly) -> bool {
    poly.signum() >= 0
        && poly
            .terms()
            .all(|(e, c)| e.is_integer() && !e.is_negative() && c.is_integer())
}

/// A value known to satisfy [`is_natural`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NaturalWitness {
    value: RhoPoly,
}

impl NaturalWitness {
    pub fn new(value: RhoPoly) -> Result<Self> {
        if is_natural_poly(&value) {
            Ok(Self { value })
        } else {
            Err(Error::PreconditionFailed(format!("`{value}` is not a natural number")))
        }
    }

    pub fn value(&self) -> &RhoPoly {
        &self.value
    }

    pub fn to_precise(&self) -> PreciseNum {
        PreciseNum::from_poly(self.value.clone())
    }
}

impl fmt::Display for NaturalWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// Order of size of a nonzero external number: the larger of the
/// representative's degree and the magnitude's threshold.
fn size(x: &ExternalNum) -> Option<Rational> {
    let thr = x.nx().threshold().cloned();
    std::cmp::max(x.rep().degree(), thr)
}

/// A natural `z` with `z·x > y`, for `0 < x < y`.
///
/// With `d` the difference of the orders of size of `y` and `x`, the first
/// candidate is `ρ^(⌈d⌉+1)` when `d > 0` and the constant
/// `⌊lc(y)/lc(x)⌋ + 1` otherwise. Candidates are verified and multiplied by
/// `ρ` until the inequality holds.
pub fn archimedean_witness(x: &ExternalNum, y: &ExternalNum) -> Result<NaturalWitness> {
    let zero = ExternalNum::zero();
    if !(zero < *x && x < y) {
        return Err(Error::PreconditionFailed(format!("0 < {x} < {y} does not hold")));
    }
    if *y.nx() == Neutrix::Max {
        return Err(Error::PreconditionFailed(format!(
            "no multiple of `{x}` exceeds `{y}`"
        )));
    }
    let sx = size(x).expect("positive");
    let sy = size(y).expect("positive");
    let d = &sy - &sx;
    let first = if d.is_positive() {
        let k = d.ceil() + Rational::from_integer(1.into());
        RhoPoly::rho_pow(k)
    } else {
        let same_order = x.rep().degree() == Some(sx) && y.rep().degree() == Some(sy);
        let c = if same_order && d.is_zero() {
            (y.rep().leading_coeff() / x.rep().leading_coeff()).floor() + int(1)
        } else {
            int(1)
        };
        RhoPoly::constant(c.max(int(1)))
    };
    let rho = RhoPoly::rho_pow(int(1));
    let mut z = first;
    loop {
        let zx = ExternalNum::precise(PreciseNum::from_poly(z.clone())).ext_mul(x);
        if zx > *y {
            return NaturalWitness::new(z);
        }
        z = &z * &rho;
    }
}

/// Whether the induction instance is expected to hold in this model.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Expectation {
    Holds,
    /// Holds on the standard naturals but not on all of `N`.
    FailsNonstandard,
}

/// One instance of the induction scheme: a formula `A(x; y, z)` with natural
/// parameters, evaluated exactly.
pub struct Formula {
    pub id: &'static str,
    pub text: &'static str,
    /// How many of the parameters `y`, `z` the formula uses.
    pub params: usize,
    pub expectation: Expectation,
    pub note: &'static str,
    holds: fn(&PreciseNum, &PreciseNum, &PreciseNum) -> bool,
}

impl Formula {
    pub fn holds(&self, x: &PreciseNum, y: &PreciseNum, z: &PreciseNum) -> bool {
        (self.holds)(x, y, z)
    }
}

fn one() -> PreciseNum {
    PreciseNum::one()
}

fn succ(x: &PreciseNum) -> PreciseNum {
    x + &one()
}

/// `y` with `x = 2y + r`, when it is natural.
fn half_of(x: &PreciseNum, r: i64) -> Option<PreciseNum> {
    let y = (x - &PreciseNum::from_int(r)).scale(&rat(1, 2));
    is_natural(&y).then_some(y)
}

/// Predecessor in `N`, when there is one.
fn predecessor(x: &PreciseNum) -> Option<PreciseNum> {
    let y = x - &one();
    is_natural(&y).then_some(y)
}

pub fn catalog() -> &'static [Formula] {
    const CATALOG: &[Formula] = &[
        Formula {
            id: "add_zero",
            text: "x+0=x",
            params: 0,
            expectation: Expectation::Holds,
            note: "",
            holds: |x, _, _| x + &PreciseNum::zero() == *x,
        },
        Formula {
            id: "zero_add",
            text: "0+x=x",
            params: 0,
            expectation: Expectation::Holds,
            note: "",
            holds: |x, _, _| &PreciseNum::zero() + x == *x,
        },
        Formula {
            id: "mul_one",
            text: "x*1=x",
            params: 0,
            expectation: Expectation::Holds,
            note: "",
            holds: |x, _, _| x * &one() == *x,
        },
        Formula {
            id: "mul_succ",
            text: "x*(y+1)=x*y+x",
            params: 1,
            expectation: Expectation::Holds,
            note: "",
            holds: |x, y, _| x * &succ(y) == &(x * y) + x,
        },
        Formula {
            id: "add_comm",
            text: "x+y=y+x",
            params: 1,
            expectation: Expectation::Holds,
            note: "",
            holds: |x, y, _| x + y == y + x,
        },
        Formula {
            id: "add_assoc",
            text: "(x+y)+z=x+(y+z)",
            params: 2,
            expectation: Expectation::Holds,
            note: "",
            holds: |x, y, z| &(x + y) + z == x + &(y + z),
        },
        Formula {
            id: "mul_comm",
            text: "x*y=y*x",
            params: 1,
            expectation: Expectation::Holds,
            note: "",
            holds: |x, y, _| x * y == y * x,
        },
        Formula {
            id: "distrib",
            text: "x*(y+z)=x*y+x*z",
            params: 2,
            expectation: Expectation::Holds,
            note: "",
            holds: |x, y, z| x * &(y + z) == &(x * y) + &(x * z),
        },
        Formula {
            id: "nonneg",
            text: "0<=x",
            params: 0,
            expectation: Expectation::Holds,
            note: "",
            holds: |x, _, _| !x.is_negative(),
        },
        Formula {
            id: "succ_nonzero",
            text: "x+1!=0",
            params: 0,
            expectation: Expectation::Holds,
            note: "",
            holds: |x, _, _| !succ(x).is_zero(),
        },
        Formula {
            id: "square_ge",
            text: "x<=x*x",
            params: 0,
            expectation: Expectation::Holds,
            note: "",
            holds: |x, _, _| *x <= x * x,
        },
        Formula {
            id: "closure",
            text: "N(x*y+x+z)",
            params: 2,
            expectation: Expectation::Holds,
            note: "",
            holds: |x, y, z| is_natural(&(&(&(x * y) + x) + z)),
        },
        Formula {
            id: "predecessor",
            text: "x=0 or exists y(N(y) and x=y+1)",
            params: 0,
            expectation: Expectation::Holds,
            note: "",
            holds: |x, _, _| x.is_zero() || predecessor(x).is_some(),
        },
        Formula {
            id: "even_or_odd",
            text: "exists y(N(y) and (x=2y or x=2y+1))",
            params: 0,
            expectation: Expectation::FailsNonstandard,
            note: "fails at x=rho: neither rho/2 nor (rho-1)/2 has integer coefficients; base case and step still hold, so the induction scheme itself fails for this formula",
            holds: |x, _, _| half_of(x, 0).is_some() || half_of(x, 1).is_some(),
        },
    ];
    CATALOG
}

/// Nonstandard naturals used for steps, conclusions and parameters.
pub fn nonstandard_samples() -> Vec<PreciseNum> {
    let poly = |terms: &[(i64, i64)]| {
        PreciseNum::from_poly(RhoPoly::from_terms(terms.iter().map(|&(c, e)| (int(c), int(e)))))
    };
    vec![
        poly(&[(1, 1)]),
        poly(&[(1, 1), (1, 0)]),
        poly(&[(2, 1)]),
        poly(&[(2, 1), (1, 0)]),
        poly(&[(1, 2), (3, 1), (1, 0)]),
        poly(&[(1, 3), (5, 0)]),
        poly(&[(7, 2)]),
        poly(&[(1, 5), (2, 2), (9, 0)]),
    ]
}

fn parameter_samples() -> Vec<PreciseNum> {
    let mut out: Vec<PreciseNum> = [0, 1, 2, 7].into_iter().map(PreciseNum::from_int).collect();
    out.extend(nonstandard_samples().into_iter().take(3));
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InductionStatus {
    Pass,
    Fail,
    ExpectedFail,
}

impl fmt::Display for InductionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InductionStatus::Pass => "PASS",
            InductionStatus::Fail => "FAIL",
            InductionStatus::ExpectedFail => "EXPECTED-FAIL",
        })
    }
}

#[derive(Clone, Debug)]
pub struct InductionReport {
    pub id: &'static str,
    pub text: &'static str,
    pub base: bool,
    pub step: bool,
    pub conclusion: bool,
    pub counterexample: Option<String>,
    pub status: InductionStatus,
    pub note: &'static str,
}

impl fmt::Display for InductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "ok" } else { "fails" };
        write!(
            f,
            "induction.{}\t{}\tbase {}, step {}, conclusion {}\t{}",
            self.id,
            self.status,
            yn(self.base),
            yn(self.step),
            yn(self.conclusion),
            self.text
        )?;
        if let Some(cx) = &self.counterexample {
            write!(f, "\n  counterexample: {cx}")?;
        }
        if !self.note.is_empty() {
            write!(f, "\n  note: {}", self.note)?;
        }
        Ok(())
    }
}

/// Checks `A(0)`, then `A(x) → A(x+1)` and `A(x)` for `x` in `0..=bound` and
/// in a fixed set of nonstandard naturals, for every choice of parameters.
pub fn induction_spotcheck(formula_id: &str, bound: u32) -> Result<InductionReport> {
    let formula = catalog()
        .iter()
        .find(|f| f.id == formula_id)
        .ok_or_else(|| Error::UnknownFormula(formula_id.to_string()))?;
    let samples = parameter_samples();
    let zero_only = [PreciseNum::zero()];
    let ys: &[PreciseNum] = if formula.params >= 1 { &samples } else { &zero_only };
    let zs: &[PreciseNum] = if formula.params >= 2 { &samples } else { &zero_only };
    let standard: Vec<PreciseNum> = (0..=bound as i64).map(PreciseNum::from_int).collect();
    let nonstandard = nonstandard_samples();
    let zero = PreciseNum::zero();

    let mut base = true;
    let mut step = true;
    let mut conclusion = true;
    let mut counterexample = None;
    let mut record = |what: &str, x: &PreciseNum, y: &PreciseNum, z: &PreciseNum| {
        if counterexample.is_none() {
            counterexample = Some(format!("{what} at x = {x}, y = {y}, z = {z}"));
        }
    };
    for y in ys {
        for z in zs {
            if !formula.holds(&zero, y, z) {
                base = false;
                record("base case", &zero, y, z);
            }
            for x in standard.iter().chain(&nonstandard) {
                if formula.holds(x, y, z) && !formula.holds(&succ(x), y, z) {
                    step = false;
                    record("inductive step", x, y, z);
                }
            }
            for x in standard.iter().chain(&nonstandard) {
                if !formula.holds(x, y, z) {
                    conclusion = false;
                    record("conclusion", x, y, z);
                }
            }
        }
    }
    let all_hold = base && step && conclusion;
    let status = match (formula.expectation, all_hold) {
        (Expectation::Holds, true) => InductionStatus::Pass,
        (Expectation::FailsNonstandard, false) if base && step => InductionStatus::ExpectedFail,
        _ => InductionStatus::Fail,
    };
    Ok(InductionReport {
        id: formula.id,
        text: formula.text,
        base,
        step,
        conclusion,
        counterexample,
        status,
        note: formula.note,
    })
}

/// Runs every catalog formula.
pub fn induction_report(bound: u32) -> Vec<InductionReport> {
    catalog()
        .iter()
        .map(|f| induction_spotcheck(f.id, bound).expect("catalog id"))
        .collect()
}
