//! Executable axioms and theorems, checked on random instances.
//!
//! Each entry of the [`catalog`] pairs a generator of input tuples with a
//! predicate. Existential statements are checked constructively: the
//! predicate calls the operation that produces the witness and verifies it.

mod catalog;
mod gen;
mod oracle;
mod shrink;

use std::fmt;

use rayon::prelude::*;

pub use catalog::{catalog, find, Check, CheckKind};
pub use gen::{gen_external, gen_neutrix, gen_precise, gen_zeroless, Gen, GeneratorConfig};
pub use oracle::{minkowski_oracle, minkowski_oracle_with, sampled_compare, sampled_le, Op};

use crate::{Error, ExternalNum, Result};

/// Verdict of a predicate on one input tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    /// The premise of an implication is false for this tuple.
    Vacuous,
    Fails { expected: String, observed: String },
}

impl Outcome {
    pub fn fails(expected: impl Into<String>, observed: impl Into<String>) -> Self {
        Outcome::Fails {
            expected: expected.into(),
            observed: observed.into(),
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fails { .. })
    }
}

/// One counterexample, after shrinking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub index: u64,
    pub inputs: Vec<(String, String)>,
    pub expected: String,
    pub observed: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check_id: String,
    pub samples: u64,
    pub vacuous: u64,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.check_id,
            self.status(),
            self.samples,
            self.failures.len()
        )
    }
}

/// Most counterexample blocks printed per report; the count line always
/// reports the full number.
pub const MAX_BLOCKS: usize = 10;

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.summary_line())?;
        for fail in self.failures.iter().take(MAX_BLOCKS) {
            write!(f, "\n  counterexample (sample {}):", fail.index)?;
            for (name, value) in &fail.inputs {
                write!(f, "\n    {name} = {value}")?;
            }
            write!(f, "\n    expected: {}", fail.expected)?;
            write!(f, "\n    observed: {}", fail.observed)?;
        }
        if self.failures.len() > MAX_BLOCKS {
            write!(
                f,
                "\n  ({} more counterexamples not shown)",
                self.failures.len() - MAX_BLOCKS
            )?;
        }
        Ok(())
    }
}

/// Counterexamples beyond this many are reported as drawn, without shrinking.
const SHRINK_LIMIT: usize = 5;

fn render(names: &[&str], xs: &[ExternalNum]) -> Vec<(String, String)> {
    xs.iter()
        .enumerate()
        .map(|(i, x)| {
            let name = names
                .get(i)
                .map(|s| s.to_string())
                .unwrap_or_else(|| format!("x{i}"));
            (name, x.to_string())
        })
        .collect()
}

/// Runs `n` samples of one catalog entry.
pub fn check(check_id: &str, cfg: &GeneratorConfig, n: u64) -> Result<CheckReport> {
    let entry = find(check_id).ok_or_else(|| Error::UnknownCheck(check_id.to_string()))?;
    Ok(run(entry, cfg, n))
}

pub(crate) fn run(entry: &Check, cfg: &GeneratorConfig, n: u64) -> CheckReport {
    let results: Vec<(u64, Vec<ExternalNum>, Outcome)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut g = Gen::for_sample(cfg, entry.id, i);
            let xs = entry.generate(&mut g);
            let out = entry.evaluate(&xs);
            (i, xs, out)
        })
        .collect();
    let vacuous = results
        .iter()
        .filter(|(_, _, o)| *o == Outcome::Vacuous)
        .count() as u64;
    let failing: Vec<_> = results.into_iter().filter(|(_, _, o)| o.is_fail()).collect();
    let failures = failing
        .into_par_iter()
        .enumerate()
        .map(|(k, (i, xs, out))| {
            let (xs, out) = if k < SHRINK_LIMIT {
                shrink::shrink(entry, xs, out)
            } else {
                (xs, out)
            };
            let (expected, observed) = match out {
                Outcome::Fails { expected, observed } => (expected, observed),
                _ => unreachable!("shrinking keeps the failure"),
            };
            Failure {
                index: i,
                inputs: render(entry.names, &xs),
                expected,
                observed,
            }
        })
        .collect();
    CheckReport {
        check_id: entry.id.to_string(),
        samples: n,
        vacuous,
        failures,
    }
}

/// Runs every law in the catalog, or the single entry `only`.
pub fn run_suite(cfg: &GeneratorConfig, n: u64, only: Option<&str>) -> Result<Vec<CheckReport>> {
    match only {
        Some(id) => Ok(vec![check(id, cfg, n)?]),
        None => Ok(catalog()
            .iter()
            .filter(|c| c.kind != CheckKind::Mutant)
            .map(|c| run(c, cfg, n))
            .collect()),
    }
}
