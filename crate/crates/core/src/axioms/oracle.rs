//! Sampling interpretations of the set-level definitions.
//!
//! An external number is a set of precise elements. These oracles draw
//! concrete members and test the set-level operations against the
//! elementwise definitions, independently of the closed-form rules.

use std::cmp::Ordering;

use crate::field::{int, rat, PreciseNum, Rational};
use crate::{ExternalNum, Neutrix};

use super::gen::{Gen, GeneratorConfig};
use super::{CheckReport, Failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Mul,
}

impl Op {
    fn apply(self, x: &PreciseNum, y: &PreciseNum) -> PreciseNum {
        match self {
            Op::Add => x + y,
            Op::Mul => x * y,
        }
    }

    fn apply_ext(self, x: &ExternalNum, y: &ExternalNum) -> ExternalNum {
        match self {
            Op::Add => x.ext_add(y),
            Op::Mul => x.ext_mul(y),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Op::Add => "add",
            Op::Mul => "mul",
        }
    }
}

/// Exponent of the farthest sampled offset from the representative.
fn top(nx: &Neutrix) -> Option<Rational> {
    match nx {
        Neutrix::Zero => None,
        Neutrix::ScaledOslash(q) => Some(q - rat(1, 1024)),
        Neutrix::ScaledPound(q) => Some(q.clone()),
        Neutrix::Max => Some(int(64)),
    }
}

/// `k` members of `x`: the two extreme ones first, then random ones.
pub(crate) fn members(g: &mut Gen<'_>, x: &ExternalNum, k: usize) -> Vec<PreciseNum> {
    let mut out = Vec::with_capacity(k);
    match top(x.nx()) {
        None => out.push(x.rep().clone()),
        Some(t) => {
            let far = PreciseNum::monomial(int(1_000_000), t);
            out.push(x.rep() + &far);
            out.push(x.rep() - &far);
        }
    }
    while out.len() < k {
        out.push(g.member(x));
    }
    out.truncate(k.max(1));
    out
}

/// Checks that `k` sampled members of `alpha` combined with `k` sampled
/// members of `beta` all land in the computed result.
pub fn minkowski_oracle_with(
    g: &mut Gen<'_>,
    alpha: &ExternalNum,
    beta: &ExternalNum,
    op: Op,
    k: usize,
) -> CheckReport {
    let k = k.max(1);
    let result = op.apply_ext(alpha, beta);
    let xs = members(g, alpha, k);
    let ys = members(g, beta, k);
    let mut failures = Vec::new();
    for (i, (x, y)) in xs.iter().zip(&ys).enumerate() {
        let z = op.apply(x, y);
        if !result.contains(&z) {
            failures.push(Failure {
                index: i as u64,
                inputs: vec![
                    ("alpha".into(), alpha.to_string()),
                    ("beta".into(), beta.to_string()),
                    ("x".into(), x.to_string()),
                    ("y".into(), y.to_string()),
                ],
                expected: format!("x {} y in {}", if op == Op::Add { "+" } else { "*" }, result),
                observed: z.to_string(),
            });
        }
    }
    CheckReport {
        check_id: format!("minkowski.{}", op.name()),
        samples: k as u64,
        vacuous: 0,
        failures,
    }
}

/// [`minkowski_oracle_with`] seeded from the default configuration and the
/// operands' canonical text.
pub fn minkowski_oracle(alpha: &ExternalNum, beta: &ExternalNum, op: Op, k: usize) -> CheckReport {
    let cfg = GeneratorConfig::default();
    let key = format!("minkowski {alpha} {beta}");
    let mut g = Gen::for_sample(&cfg, &key, 0);
    minkowski_oracle_with(&mut g, alpha, beta, op, k)
}

/// `α ≤ β` read off samples: every sampled member of `α` is below some
/// sampled member of `β`, or is itself a member of `β`.
pub fn sampled_le(g: &mut Gen<'_>, alpha: &ExternalNum, beta: &ExternalNum, k: usize) -> bool {
    let xs = members(g, alpha, k);
    let ys = members(g, beta, k);
    xs.iter()
        .all(|x| beta.contains(x) || ys.iter().any(|y| x <= y))
}

/// Order of two external numbers decided by sampling alone. `None` means the
/// samples found neither `α ≤ β` nor `β ≤ α`.
pub fn sampled_compare(
    g: &mut Gen<'_>,
    alpha: &ExternalNum,
    beta: &ExternalNum,
    k: usize,
) -> Option<Ordering> {
    match (sampled_le(g, alpha, beta, k), sampled_le(g, beta, alpha, k)) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}
