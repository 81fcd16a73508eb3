use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, ToPrimitive};

use crate::field::{PreciseNum, Rational};
use crate::{ExternalNum, Neutrix};

use super::syntax::{BinOp, CmpOp, Expr, ExprKind, Func, Span};
use super::CliError;

/// Result of evaluating a line: a number, or the truth value of a comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Number(ExternalNum),
    Truth(bool),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(x) => x.fmt(f),
            Value::Truth(b) => b.fmt(f),
        }
    }
}

fn domain(span: Span) -> impl Fn(crate::Error) -> CliError {
    move |source| CliError::Domain { source, span }
}

/// `c·ρ^q` to the power `r`: `c` must be `1` unless `r` is an integer.
fn power(base: &ExternalNum, r: &Rational, span: Span) -> Result<ExternalNum, CliError> {
    let not_monomial = || CliError::Eval {
        msg: format!("`^` needs a precise power of rho as base, got `{base}`"),
        span,
    };
    if !base.is_precise() {
        return Err(not_monomial());
    }
    let poly = base.rep().as_poly().filter(|p| p.is_monomial()).ok_or_else(not_monomial)?;
    let (q, c) = poly.leading().expect("monomial");
    let q = q * r;
    if r.is_integer() {
        let k = r.to_integer().to_i64().ok_or_else(|| CliError::Eval {
            msg: "exponent too large".into(),
            span,
        })?;
        let ck = PreciseNum::from_rational(c.clone())
            .powi(k)
            .map_err(domain(span))?;
        return Ok(ExternalNum::precise(&ck * &PreciseNum::rho_pow(q)));
    }
    if !c.is_one() {
        return Err(CliError::Eval {
            msg: format!("fractional powers need a coefficient of 1, got `{base}`"),
            span,
        });
    }
    Ok(ExternalNum::precise(PreciseNum::rho_pow(q)))
}

fn number(e: &Expr) -> Result<ExternalNum, CliError> {
    let span = e.span;
    Ok(match &e.kind {
        ExprKind::Int(n) => ExternalNum::from_rational(Rational::from_integer(n.clone())),
        ExprKind::Rho => ExternalNum::precise(PreciseNum::rho()),
        ExprKind::Oslash => ExternalNum::from_neutrix(Neutrix::oslash()),
        ExprKind::Pound => ExternalNum::from_neutrix(Neutrix::pound()),
        ExprKind::Max => ExternalNum::from_neutrix(Neutrix::Max),
        ExprKind::Neg(a) => number(a)?.ext_neg(),
        ExprKind::Call(func, a) => {
            let x = number(a)?;
            match func {
                Func::Magnitude => x.magnitude(),
                Func::Unity => x.unity().map_err(domain(span))?,
                Func::Inv => x.ext_inv().map_err(domain(span))?,
                Func::Abs => x.abs(),
                Func::Shadow => x.shadow().map_err(domain(span))?,
            }
        }
        ExprKind::Bin(op, a, b) => {
            let (x, y) = (number(a)?, number(b)?);
            match op {
                BinOp::Add => x.ext_add(&y),
                BinOp::Sub => x.ext_sub(&y),
                BinOp::Mul => x.ext_mul(&y),
                BinOp::Div => x.ext_div(&y).map_err(domain(b.span))?,
            }
        }
        ExprKind::Pow(a, r) => power(&number(a)?, r, span)?,
        ExprKind::Cmp(..) => {
            return Err(CliError::Eval {
                msg: "a comparison is not a number".into(),
                span,
            })
        }
    })
}

/// Evaluates an expression to its canonical external number.
pub fn eval(e: &Expr) -> Result<ExternalNum, CliError> {
    number(e)
}

/// Evaluates a line, which may be a comparison.
pub fn evaluate(e: &Expr) -> Result<Value, CliError> {
    if let ExprKind::Cmp(op, a, b) = &e.kind {
        let ord = number(a)?.compare(&number(b)?);
        let t = match op {
            CmpOp::Eq => ord == Ordering::Equal,
            CmpOp::Lt => ord == Ordering::Less,
            CmpOp::Le => ord != Ordering::Greater,
        };
        return Ok(Value::Truth(t));
    }
    Ok(Value::Number(number(e)?))
}

/// `LT`, `EQ` or `GT`.
pub(crate) fn sign_word(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}
