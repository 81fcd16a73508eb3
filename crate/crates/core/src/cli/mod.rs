//! Expression language, commands and the line-oriented front end.

mod eval;
mod syntax;

use std::io::{self, BufRead, Write};

use thiserror::Error;

pub use eval::{eval, evaluate, Value};
pub use syntax::{parse, parse_at, BinOp, CmpOp, Expr, ExprKind, Func, Span};

use crate::axioms::{self, GeneratorConfig};
use crate::external::Class;
use crate::halfline::zup_finite;
use crate::naturals::{archimedean_witness, is_natural};
use crate::ExternalNum;

/// Sample count for `:check` when `--count` is not given.
pub const DEFAULT_COUNT: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("syntax error at column {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("unknown identifier `{name}` at column {col}")]
    UnknownIdentifier { name: String, col: usize },
    #[error("{source} (columns {}-{})", span.start, span.end - 1)]
    Domain { source: crate::Error, span: Span },
    #[error("{msg} (columns {}-{})", span.start, span.end - 1)]
    Eval { msg: String, span: Span },
    #[error("{0}")]
    Command(#[from] crate::Error),
    #[error("usage: {0}")]
    Usage(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
    ChecksFailed,
    Quit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Response {
    pub output: String,
    pub status: Status,
}

impl Response {
    fn ok(output: impl Into<String>) -> Self {
        Self {
            output: output.into(),
            status: Status::Ok,
        }
    }
}

const HELP: &str = "\
expressions: integers, rho, o, L, M, + - * /, ^(q) with q rational,
             e(x), u(x), inv(x), abs(x), shadow(x), comparisons = < <=
commands:    :classify X | :cmp X , Y | :zup X {, X} | :nat X | :arch X , Y  (comma optional)
             :check [--seed S] [--count N] [--only ID] | :help | :quit";

/// Splits `s` at commas outside parentheses; each piece keeps its column
/// offset within the line.
fn split_args(s: &str, offset: usize) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let chars: Vec<char> = s.chars().collect();
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push((chars[start..i].iter().collect(), offset + start));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((chars[start..].iter().collect(), offset + start));
    out
}

fn numbers(args: &str, offset: usize) -> Result<Vec<ExternalNum>, CliError> {
    split_args(args, offset)
        .into_iter()
        .map(|(s, off)| eval(&parse_at(&s, off)?))
        .collect()
}

/// Without a comma, `x y` is split at the only blank where both sides parse.
fn split_blank(args: &str, offset: usize) -> Option<(ExternalNum, ExternalNum)> {
    let chars: Vec<char> = args.chars().collect();
    let mut found = None;
    for (i, c) in chars.iter().enumerate() {
        if !c.is_whitespace() {
            continue;
        }
        let (l, r): (String, String) = (chars[..i].iter().collect(), chars[i + 1..].iter().collect());
        if l.trim().is_empty() || r.trim().is_empty() {
            continue;
        }
        let side = |s: &str, off: usize| parse_at(s, off).ok().and_then(|e| eval(&e).ok());
        if let (Some(a), Some(b)) = (side(&l, offset), side(&r, offset + i + 1)) {
            if found.is_some() {
                return None;
            }
            found = Some((a, b));
        }
    }
    found
}

fn pair(args: &str, offset: usize, cmd: &str) -> Result<(ExternalNum, ExternalNum), CliError> {
    let usage = || CliError::Usage(format!("{cmd} <expr> , <expr>"));
    if split_args(args, offset).len() == 1 {
        return split_blank(args, offset).ok_or_else(usage);
    }
    let mut v = numbers(args, offset)?;
    if v.len() != 2 {
        return Err(usage());
    }
    let b = v.pop().expect("two");
    let a = v.pop().expect("two");
    Ok((a, b))
}

/// Options of `:check` and of the headless `--check` mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub seed: Option<u64>,
    pub count: u64,
    pub only: Option<String>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            seed: None,
            count: DEFAULT_COUNT,
            only: None,
        }
    }
}

fn check_options(args: &str) -> Result<CheckOptions, CliError> {
    let usage = || CliError::Usage(":check [--seed S] [--count N] [--only ID]".into());
    let mut opts = CheckOptions::default();
    let mut it = args.split_whitespace();
    while let Some(flag) = it.next() {
        let val = it.next().ok_or_else(usage)?;
        match flag {
            "--seed" => opts.seed = Some(val.parse().map_err(|_| usage())?),
            "--count" => opts.count = val.parse().map_err(|_| usage())?,
            "--only" => opts.only = Some(val.to_string()),
            _ => return Err(usage()),
        }
    }
    Ok(opts)
}

/// Runs the check suite and renders the reports; the flag tells whether
/// everything passed.
pub fn run_checks(opts: &CheckOptions) -> Result<(String, bool), CliError> {
    let cfg = match opts.seed {
        Some(s) => GeneratorConfig::with_seed(s),
        None => GeneratorConfig::default(),
    };
    let reports = axioms::run_suite(&cfg, opts.count, opts.only.as_deref())?;
    let ok = reports.iter().all(|r| r.passed());
    let text = reports
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join("\n");
    Ok((text, ok))
}

fn class_name(x: &ExternalNum) -> &'static str {
    match x.classify() {
        Class::Precise => "Precise",
        Class::PureNeutrix => "PureNeutrix",
        Class::ZerolessNonPrecise => "ZerolessNonPrecise",
    }
}

fn command(line: &str) -> Result<Response, CliError> {
    let trimmed = line.trim_start();
    let lead = line.len() - trimmed.len();
    let (name, rest) = match trimmed.find(char::is_whitespace) {
        Some(i) => (&trimmed[..i], &trimmed[i..]),
        None => (trimmed, ""),
    };
    let offset = line[..lead + name.len()].chars().count();
    let one = |cmd: &str| -> Result<ExternalNum, CliError> {
        let mut v = numbers(rest, offset)?;
        if v.len() != 1 {
            return Err(CliError::Usage(format!("{cmd} <expr>")));
        }
        Ok(v.pop().expect("one"))
    };
    Ok(match name {
        ":quit" | ":q" => Response {
            output: String::new(),
            status: Status::Quit,
        },
        ":help" => Response::ok(HELP),
        ":classify" => Response::ok(class_name(&one(":classify")?)),
        ":cmp" => {
            let (a, b) = pair(rest, offset, ":cmp")?;
            Response::ok(eval::sign_word(a.compare(&b)))
        }
        ":zup" => {
            let v = numbers(rest, offset)?;
            let h = zup_finite(&v)?;
            Response::ok(format!("{h}"))
        }
        ":nat" => {
            let x = one(":nat")?;
            Response::ok((x.is_precise() && is_natural(x.rep())).to_string())
        }
        ":arch" => {
            let (a, b) = pair(rest, offset, ":arch")?;
            Response::ok(archimedean_witness(&a, &b)?.to_string())
        }
        ":check" => {
            let (text, ok) = run_checks(&check_options(rest)?)?;
            Response {
                output: text,
                status: if ok { Status::Ok } else { Status::ChecksFailed },
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown command `{other}`; try :help"
            )))
        }
    })
}

/// Executes one line: a command starting with `:`, or an expression.
pub fn run_command(line: &str) -> Response {
    let result = if line.trim_start().starts_with(':') {
        command(line)
    } else if line.trim().is_empty() {
        Ok(Response::ok(""))
    } else {
        parse(line)
            .and_then(|e| evaluate(&e))
            .map(|v| Response::ok(v.to_string()))
    };
    result.unwrap_or_else(|e| Response {
        output: format!("error: {e}"),
        status: Status::Error,
    })
}

/// Counts of unsuccessful lines, for the exit status.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub errors: usize,
    pub failed_checks: usize,
}

/// Reads lines until end of input or `:quit`, printing each response.
pub fn run_lines<R: BufRead, W: Write>(input: R, mut out: W, prompt: bool) -> io::Result<Summary> {
    let mut summary = Summary::default();
    let mut lines = input.lines();
    loop {
        if prompt {
            write!(out, "> ")?;
            out.flush()?;
        }
        let Some(line) = lines.next() else { break };
        let line = line?;
        let r = run_command(&line);
        if !r.output.is_empty() {
            writeln!(out, "{}", r.output)?;
        }
        match r.status {
            Status::Quit => break,
            Status::Error => summary.errors += 1,
            Status::ChecksFailed => summary.failed_checks += 1,
            Status::Ok => {}
        }
    }
    Ok(summary)
}
