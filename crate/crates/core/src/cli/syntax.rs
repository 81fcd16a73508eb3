//! Lexer and recursive-descent parser for the expression language.
//!
//! ```text
//! cmp    := expr (('=' | '<' | '<=') expr)?
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := atom ('^' exponent)?
//! exp    := '(' '-'? int ('/' posint)? ')' | int
//! atom   := int | 'rho' | 'o' | 'L' | 'M' | '(' expr ')' | ident '(' expr ')'
//! ```
//!
//! Unary minus binds looser than `^`, so `-rho^2` is `-(rho^2)`. Columns are
//! 1-based character positions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::field::{fmt_rational, Rational};

use super::CliError;

/// Half-open range of 1-based columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    fn join(self, other: Span) -> Span {
        Span {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eq,
    Lt,
    Le,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Lt => f.write_str("`<`"),
            Tok::Le => f.write_str("`<=`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(input: &str, offset: usize) -> Result<Vec<(Tok, Span)>, CliError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let col = |i: usize| i + 1 + offset;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && (chars[i] == '.' || chars[i] == 'e' && chars.get(i + 1).is_some_and(char::is_ascii_digit)) {
                    return Err(CliError::Syntax {
                        col: col(i),
                        msg: "floating-point literals are not accepted; write a fraction".into(),
                    });
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Int(s.parse().expect("digits")), Span { start: col(start), end: col(i) }));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Ident(s), Span { start: col(start), end: col(i) }));
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '=' => Tok::Eq,
            '<' if chars.get(i + 1) == Some(&'=') => {
                i += 2;
                out.push((Tok::Le, Span { start: col(start), end: col(i) }));
                continue;
            }
            '<' => Tok::Lt,
            other => {
                return Err(CliError::Syntax {
                    col: col(i),
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        i += 1;
        out.push((tok, Span { start: col(start), end: col(i) }));
    }
    out.push((Tok::End, Span { start: col(chars.len()), end: col(chars.len()) + 1 }));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Magnitude,
    Unity,
    Inv,
    Abs,
    Shadow,
}

impl Func {
    fn from_name(s: &str) -> Option<Func> {
        Some(match s {
            "e" => Func::Magnitude,
            "u" => Func::Unity,
            "inv" => Func::Inv,
            "abs" => Func::Abs,
            "shadow" => Func::Shadow,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Magnitude => "e",
            Func::Unity => "u",
            Func::Inv => "inv",
            Func::Abs => "abs",
            Func::Shadow => "shadow",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmpOp {
    Eq,
    Lt,
    Le,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigInt),
    Rho,
    Oslash,
    Pound,
    Max,
    Neg(Box<Expr>),
    Call(Func, Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Rational),
    Cmp(CmpOp, Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

/// Renders the tree as nested calls, e.g. `mul(add(3, o), pow(rho, 1/2))`.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Int(n) => write!(f, "{n}"),
            ExprKind::Rho => f.write_str("rho"),
            ExprKind::Oslash => f.write_str("o"),
            ExprKind::Pound => f.write_str("L"),
            ExprKind::Max => f.write_str("M"),
            ExprKind::Neg(a) => write!(f, "neg({a})"),
            ExprKind::Call(func, a) => write!(f, "{}({a})", func.name()),
            ExprKind::Bin(op, a, b) => {
                let name = match op {
                    BinOp::Add => "add",
                    BinOp::Sub => "sub",
                    BinOp::Mul => "mul",
                    BinOp::Div => "div",
                };
                write!(f, "{name}({a}, {b})")
            }
            ExprKind::Pow(a, q) => write!(f, "pow({a}, {})", fmt_rational(q)),
            ExprKind::Cmp(op, a, b) => {
                let name = match op {
                    CmpOp::Eq => "eq",
                    CmpOp::Lt => "lt",
                    CmpOp::Le => "le",
                };
                write!(f, "{name}({a}, {b})")
            }
        }
    }
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> CliError {
        CliError::Syntax {
            col: self.span().start,
            msg: format!("expected {wanted}, found {}", self.peek()),
        }
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<Span, CliError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn comparison(&mut self) -> Result<Expr, CliError> {
        let lhs = self.expr()?;
        let op = match self.peek() {
            Tok::Eq => CmpOp::Eq,
            Tok::Lt => CmpOp::Lt,
            Tok::Le => CmpOp::Le,
            _ => return Ok(lhs),
        };
        self.bump();
        let rhs = self.expr()?;
        let span = lhs.span.join(rhs.span);
        Ok(Expr {
            kind: ExprKind::Cmp(op, Box::new(lhs), Box::new(rhs)),
            span,
        })
    }

    fn binary(
        &mut self,
        next: fn(&mut Self) -> Result<Expr, CliError>,
        ops: &[(Tok, BinOp)],
    ) -> Result<Expr, CliError> {
        let mut lhs = next(self)?;
        while let Some((_, op)) = ops.iter().find(|(t, _)| t == self.peek()) {
            self.bump();
            let rhs = next(self)?;
            let span = lhs.span.join(rhs.span);
            lhs = Expr {
                kind: ExprKind::Bin(*op, Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
        Ok(lhs)
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        self.binary(Self::term, &[(Tok::Plus, BinOp::Add), (Tok::Minus, BinOp::Sub)])
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        self.binary(Self::unary, &[(Tok::Star, BinOp::Mul), (Tok::Slash, BinOp::Div)])
    }

    fn unary(&mut self) -> Result<Expr, CliError> {
        if *self.peek() == Tok::Minus {
            let (_, s) = self.bump();
            let inner = self.unary()?;
            let span = s.join(inner.span);
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(inner)),
                span,
            });
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Expr, CliError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (q, end) = self.exponent()?;
        let span = base.span.join(end);
        Ok(Expr {
            kind: ExprKind::Pow(Box::new(base), q),
            span,
        })
    }

    fn int(&mut self) -> Result<(BigInt, Span), CliError> {
        match self.bump() {
            (Tok::Int(n), s) => Ok((n, s)),
            _ => {
                self.pos -= 1;
                Err(self.unexpected("an integer"))
            }
        }
    }

    fn exponent(&mut self) -> Result<(Rational, Span), CliError> {
        match self.peek() {
            Tok::Int(_) => {
                let (n, s) = self.int()?;
                Ok((Rational::from_integer(n), s))
            }
            Tok::LParen => {
                self.bump();
                let neg = if *self.peek() == Tok::Minus {
                    self.bump();
                    true
                } else {
                    false
                };
                let (mut n, _) = self.int()?;
                if neg {
                    n = -n;
                }
                let mut d = BigInt::from(1);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let (dd, s) = self.int()?;
                    if dd.is_zero() || dd.is_negative() {
                        return Err(CliError::Syntax {
                            col: s.start,
                            msg: "exponent denominator must be positive".into(),
                        });
                    }
                    d = dd;
                }
                let end = self.expect(Tok::RParen, "`)`")?;
                Ok((Rational::new(n, d), end))
            }
            _ => Err(self.unexpected("a rational exponent such as `(1/2)` or `2`")),
        }
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Int(n),
                    span,
                })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                let end = self.expect(Tok::RParen, "`)`")?;
                Ok(Expr {
                    kind: inner.kind,
                    span: span.join(end),
                })
            }
            Tok::Ident(name) => {
                self.bump();
                let kind = match name.as_str() {
                    "rho" => ExprKind::Rho,
                    "o" => ExprKind::Oslash,
                    "L" => ExprKind::Pound,
                    "M" => ExprKind::Max,
                    _ => {
                        let Some(func) = Func::from_name(&name) else {
                            return Err(CliError::UnknownIdentifier {
                                name,
                                col: span.start,
                            });
                        };
                        self.expect(Tok::LParen, "`(` after a function name")?;
                        let arg = self.expr()?;
                        let end = self.expect(Tok::RParen, "`)`")?;
                        return Ok(Expr {
                            kind: ExprKind::Call(func, Box::new(arg)),
                            span: span.join(end),
                        });
                    }
                };
                Ok(Expr { kind, span })
            }
            _ => Err(self.unexpected("a number, `rho`, `o`, `L`, `M`, `(` or a function")),
        }
    }
}

/// Parses a whole line. `offset` shifts reported columns, for arguments that
/// start partway into a command line.
pub fn parse_at(input: &str, offset: usize) -> Result<Expr, CliError> {
    let toks = lex(input, offset)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.comparison()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

pub fn parse(input: &str) -> Result<Expr, CliError> {
    parse_at(input, 0)
}
