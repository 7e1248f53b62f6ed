//! A small expression language over τ-only objects.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' int)?
//! atom   := int | call | name | '(' expr ')'
//! call   := name '(' scale ')'           scale := int ('/' int)?
//! ```
//!
//! Names: `eta`, `theta1p`, `theta2`, `theta3`, `theta4`, `E2`, `E4`, `E6`,
//! `phi`, `psi`, `a` (a scale `c` means `τ ↦ cτ`, or `q ↦ q^c` for `phi`
//! and `psi`; bare names take `c = 1`), and `q(r)` for the monomial `q^r`.
//! Error offsets are 1-based character positions.

use std::fmt;

use thiserror::Error;

use crate::builders::{self, Eisenstein, NullKind};
use crate::numeric::{self, EisensteinKind, EvalConfig, NumericError, C64};
use crate::series::{int, Coeff, QExp, QSeries, Series, SeriesError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExprError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown function `{name}` at offset {offset}")]
    UnknownFunction { name: String, offset: usize },
    #[error("scale at offset {offset} must be a positive rational")]
    BadScale { offset: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("could not reach order {target} after {attempts} attempts (best known order {reached})")]
    OrderShortfall { target: QExp, reached: QExp, attempts: usize },
}

/// Named τ-only function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Eta,
    Theta1Prime,
    Theta2,
    Theta3,
    Theta4,
    E2,
    E4,
    E6,
    Phi,
    Psi,
    A,
}

impl Func {
    const ALL: [(&'static str, Func); 11] = [
        ("eta", Func::Eta),
        ("theta1p", Func::Theta1Prime),
        ("theta2", Func::Theta2),
        ("theta3", Func::Theta3),
        ("theta4", Func::Theta4),
        ("E2", Func::E2),
        ("E4", Func::E4),
        ("E6", Func::E6),
        ("phi", Func::Phi),
        ("psi", Func::Psi),
        ("a", Func::A),
    ];

    pub fn name(self) -> &'static str {
        Func::ALL.iter().find(|(_, f)| *f == self).map(|(n, _)| *n).expect("listed")
    }

    fn lookup(name: &str) -> Option<Func> {
        Func::ALL.iter().find(|(n, _)| *n == name).map(|(_, f)| *f)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(i64),
    Call(Func, QExp),
    /// `q^r`.
    QPow(QExp),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

// ---------------------------------------------------------------- parsing

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

impl Lexer {
    fn run(src: &str) -> Result<Lexer, ExprError> {
        let chars: Vec<char> = src.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let at = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let v = text
                    .parse::<i64>()
                    .map_err(|_| ExprError::Syntax { offset: at, message: format!("integer {text} is too large") })?;
                toks.push((Tok::Int(v), at));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), at));
            } else if "+-*/^()".contains(c) {
                toks.push((Tok::Sym(c), at));
                i += 1;
            } else {
                return Err(ExprError::Syntax { offset: at, message: format!("unexpected character `{c}`") });
            }
        }
        toks.push((Tok::End, chars.len() + 1));
        Ok(Lexer { toks })
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { offset: self.offset(), message: message.into() })
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            let found = describe(self.peek());
            self.err(format!("expected `{c}`, found {found}"))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Sym('/') => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let k = self.signed_int()?;
        Ok(Expr::Pow(Box::new(base), k))
    }

    /// `int`, `-int`, or either in parentheses.
    fn signed_int(&mut self) -> Result<i64, ExprError> {
        let paren = *self.peek() == Tok::Sym('(');
        if paren {
            self.bump();
        }
        let neg = *self.peek() == Tok::Sym('-');
        if neg {
            self.bump();
        }
        let v = match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                v
            }
            other => return self.err(format!("expected an integer exponent, found {}", describe(&other))),
        };
        if paren {
            self.expect(')')?;
        }
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let (tok, at) = self.bump();
        match tok {
            Tok::Int(v) => Ok(Expr::Int(v)),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) if name == "q" => {
                self.expect('(')?;
                let r = self.rational(true)?;
                self.expect(')')?;
                Ok(Expr::QPow(r))
            }
            Tok::Ident(name) => {
                let f = Func::lookup(&name).ok_or(ExprError::UnknownFunction { name: name.clone(), offset: at })?;
                if *self.peek() != Tok::Sym('(') {
                    return Ok(Expr::Call(f, QExp::ONE));
                }
                self.bump();
                let scale_at = self.offset();
                let c = self.rational(false)?;
                if c <= QExp::ZERO {
                    return Err(ExprError::BadScale { offset: scale_at });
                }
                self.expect(')')?;
                Ok(Expr::Call(f, c))
            }
            Tok::End => {
                self.pos = self.toks.len() - 1;
                self.err("unexpected end of input")
            }
            other => {
                self.pos -= 1;
                self.err(format!("unexpected {}", describe(&other)))
            }
        }
    }

    /// `int ('/' int)?`, optionally signed.
    fn rational(&mut self, signed: bool) -> Result<QExp, ExprError> {
        let neg = signed && *self.peek() == Tok::Sym('-');
        if neg {
            self.bump();
        }
        let at = self.offset();
        let n = match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                v
            }
            other => return self.err(format!("expected a rational, found {}", describe(&other))),
        };
        let d = if *self.peek() == Tok::Sym('/') {
            self.bump();
            match self.peek().clone() {
                Tok::Int(0) => return Err(ExprError::BadScale { offset: at }),
                Tok::Int(v) => {
                    self.bump();
                    v
                }
                other => return self.err(format!("expected a denominator, found {}", describe(&other))),
            }
        } else {
            1
        };
        Ok(QExp::new(if neg { -n } else { n }, d))
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(v) => format!("`{v}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".into(),
    }
}

pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let lx = Lexer::run(src)?;
    let mut p = Parser { toks: lx.toks, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        let found = describe(p.peek());
        return p.err(format!("unexpected {found} after expression"));
    }
    Ok(e)
}

// --------------------------------------------------------------- printing

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Call(..) | Expr::QPow(_) => 5,
        }
    }
}

fn write_scale(f: &mut fmt::Formatter<'_>, c: QExp) -> fmt::Result {
    if c.denom() == 1 {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Call(func, c) => {
                write!(f, "{}(", func.name())?;
                write_scale(f, *c)?;
                write!(f, ")")
            }
            Expr::QPow(r) => {
                write!(f, "q(")?;
                write_scale(f, *r)?;
                write!(f, ")")
            }
            Expr::Neg(e) => {
                write!(f, "-")?;
                write_child(f, e, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                let (op, p) = match self {
                    Expr::Add(..) => ("+", 1),
                    Expr::Sub(..) => ("-", 1),
                    Expr::Mul(..) => ("*", 2),
                    _ => ("/", 2),
                };
                write_child(f, a, p)?;
                write!(f, " {op} ")?;
                write_child(f, b, p + 1)
            }
            Expr::Pow(b, k) => {
                write_child(f, b, 5)?;
                if *k < 0 {
                    write!(f, "^({k})")
                } else {
                    write!(f, "^{k}")
                }
            }
        }
    }
}

// -------------------------------------------------------------- expansion

fn leaf(func: Func, c: QExp, order: QExp) -> QSeries {
    match func {
        Func::Eta => builders::eta(order, c),
        Func::Theta1Prime => builders::theta1_prime_series(order, c),
        Func::Theta2 => builders::theta_null(NullKind::Theta2, order, c),
        Func::Theta3 => builders::theta_null(NullKind::Theta3, order, c),
        Func::Theta4 => builders::theta_null(NullKind::Theta4, order, c),
        Func::E2 => builders::eisenstein(Eisenstein::L, order, c),
        Func::E4 => builders::eisenstein(Eisenstein::M, order, c),
        Func::E6 => builders::eisenstein(Eisenstein::N, order, c),
        Func::Phi => builders::phi(order, c),
        Func::Psi => builders::psi(order, c),
        Func::A => builders::glaisher_a(order, c),
    }
}

/// One pass at working order `work`; the result may be known to less.
fn expand_once(e: &Expr, work: QExp) -> Result<QSeries, ExprError> {
    Ok(match e {
        Expr::Int(v) => QSeries::constant(int(*v), work),
        Expr::Call(f, c) => leaf(*f, *c, work),
        Expr::QPow(r) => QSeries::monomial(int(1), *r, work.max(*r + QExp::ONE)),
        Expr::Neg(a) => -expand_once(a, work)?,
        Expr::Add(a, b) => expand_once(a, work)? + expand_once(b, work)?,
        Expr::Sub(a, b) => expand_once(a, work)? - expand_once(b, work)?,
        Expr::Mul(a, b) => expand_once(a, work)? * expand_once(b, work)?,
        Expr::Div(a, b) => expand_once(a, work)? * expand_once(b, work)?.invert()?,
        Expr::Pow(a, k) => expand_once(a, work)?.pow(*k)?,
    })
}

/// Run `build` at increasing working orders until the result is known below
/// `target`, then truncate to `target`.
pub fn with_order<C, F, E>(target: QExp, mut build: F) -> Result<Series<C>, ExprError>
where
    C: Coeff,
    F: FnMut(QExp) -> Result<Series<C>, E>,
    ExprError: From<E>,
{
    const ATTEMPTS: usize = 6;
    let mut work = target;
    let mut reached = QExp::ZERO;
    for _ in 0..ATTEMPTS {
        let s = build(work)?;
        if s.order() >= target {
            return Ok(s.truncate(target));
        }
        reached = s.order();
        work = work + (target - s.order()) + QExp::ONE;
    }
    Err(ExprError::OrderShortfall { target, reached, attempts: ATTEMPTS })
}

/// Exact expansion known below the absolute exponent `target`.
pub fn expand(e: &Expr, target: QExp) -> Result<QSeries, ExprError> {
    with_order(target, |work| expand_once(e, work))
}

/// Expansion covering every exponent up to `valuation + n` inclusive.
pub fn expand_relative(e: &Expr, n: i64) -> Result<QSeries, ExprError> {
    let probe = expand(e, QExp::int(1))?;
    let v = match probe.valuation() {
        Some(v) => v,
        None => expand(e, QExp::int(n + 1))?.valuation().unwrap_or(QExp::ZERO),
    };
    let bound = v + QExp::int(n);
    let s = expand(e, bound + QExp::ONE)?;
    Ok(QSeries::from_terms(
        s.terms().filter(|(x, _)| *x <= bound).map(|(x, c)| (x, c.clone())),
        bound + QExp::new(1, 1_000_000),
    ))
}

/// `"e: c, e: c, ..."` with exponents and coefficients in lowest terms, or
/// `0` for the zero series.
pub fn listing(s: &QSeries) -> String {
    if s.terms().next().is_none() {
        return "0".into();
    }
    s.terms().map(|(e, c)| format!("{e}: {c}")).collect::<Vec<_>>().join(", ")
}

// ------------------------------------------------------------- evaluation

fn numeric_leaf(f: Func, c: f64, tau: C64, cfg: &EvalConfig) -> Result<C64, NumericError> {
    let t = tau * c;
    let zero = C64::new(0.0, 0.0);
    match f {
        Func::Eta => numeric::eta(t, cfg),
        Func::Theta1Prime => numeric::theta1_prime0(t, cfg),
        Func::Theta2 => numeric::theta_at(2, zero, t, cfg),
        Func::Theta3 => numeric::theta_at(3, zero, t, cfg),
        Func::Theta4 => numeric::theta_at(4, zero, t, cfg),
        Func::E2 => numeric::eisenstein(EisensteinKind::L, t, cfg),
        Func::E4 => numeric::eisenstein(EisensteinKind::M, t, cfg),
        Func::E6 => numeric::eisenstein(EisensteinKind::N, t, cfg),
        // φ(q) = θ3(0|2τ), ψ(q) = q^{-1/8} θ2(0|τ) / 2
        Func::Phi => numeric::theta_at(3, zero, t * 2.0, cfg),
        Func::Psi => Ok(numeric::qpow(t, -1.0 / 8.0) * numeric::theta_at(2, zero, t, cfg)? / 2.0),
        Func::A => numeric::glaisher_a(t, cfg),
    }
}

/// Numeric value at `τ`.
pub fn evaluate(e: &Expr, tau: C64, cfg: &EvalConfig) -> Result<C64, ExprError> {
    Ok(match e {
        Expr::Int(v) => C64::new(*v as f64, 0.0),
        Expr::Call(f, c) => numeric_leaf(*f, c.to_f64(), tau, cfg)?,
        Expr::QPow(r) => numeric::qpow(tau, r.to_f64()),
        Expr::Neg(a) => -evaluate(a, tau, cfg)?,
        Expr::Add(a, b) => evaluate(a, tau, cfg)? + evaluate(b, tau, cfg)?,
        Expr::Sub(a, b) => evaluate(a, tau, cfg)? - evaluate(b, tau, cfg)?,
        Expr::Mul(a, b) => evaluate(a, tau, cfg)? * evaluate(b, tau, cfg)?,
        Expr::Div(a, b) => evaluate(a, tau, cfg)? / evaluate(b, tau, cfg)?,
        Expr::Pow(a, k) => evaluate(a, tau, cfg)?.powi(*k as i32),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unterminated_call_reports_end_offset() {
        match parse("eta(1/5") {
            Err(ExprError::Syntax { offset, .. }) => assert_eq!(offset, 8),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_name_and_bad_scale() {
        assert!(matches!(parse("zeta(1)"), Err(ExprError::UnknownFunction { offset: 1, .. })));
        assert!(matches!(parse("eta(0)"), Err(ExprError::BadScale { offset: 5 })));
        assert!(matches!(parse("eta(1/0)"), Err(ExprError::BadScale { .. })));
    }

    #[test]
    fn printing_is_minimal_and_reparses() {
        let e = parse("2 * eta(1)^3 - (theta2 + -theta3(1/2))^(-2) / (a - 1 - 1)").unwrap();
        let s = e.to_string();
        assert_eq!(s, "2 * eta(1)^3 - (theta2(1) + -theta3(1/2))^(-2) / (a(1) - 1 - 1)");
        assert_eq!(parse(&s).unwrap(), e);
        let right = parse("1 - (2 - 3)").unwrap();
        assert_eq!(right.to_string(), "1 - (2 - 3)");
    }

    #[test]
    fn expansions_from_the_command_examples() {
        let eta = expand_relative(&parse("eta(1)").unwrap(), 2).unwrap();
        assert_eq!(listing(&eta), "1/24: 1, 25/24: -1, 49/24: -1");
        let l = expand_relative(&parse("E2(1)").unwrap(), 3).unwrap();
        assert_eq!(listing(&l), "0: 1, 1: -24, 2: -72, 3: -96");
        let p = expand_relative(&parse("phi^2").unwrap(), 5).unwrap();
        assert_eq!(listing(&p), "0: 1, 1: 4, 2: 4, 4: 4, 5: 8");
    }

    #[test]
    fn quartic_identity_vanishes() {
        let e = parse("theta2(1)^4 + theta4(1)^4 - theta3(1)^4").unwrap();
        let s = expand(&e, QExp::int(50)).unwrap();
        assert!(s.is_empty());
        assert!(s.order() >= QExp::int(50));
    }

    #[test]
    fn quotients_are_overprovisioned() {
        let e = parse("eta(1)^(-24)").unwrap();
        let s = expand(&e, QExp::int(3)).unwrap();
        assert_eq!(s.order(), QExp::int(3));
        assert_eq!(s.coefficient(QExp::int(-1)).unwrap(), int(1));
        assert_eq!(s.coefficient(QExp::int(0)).unwrap(), int(24));
    }

    #[test]
    fn numeric_and_exact_agree() {
        let e = parse("eta(1)^3*theta3(1/2)/E4(2) + psi(3) - q(1/3)*a").unwrap();
        let tau = C64::new(0.1, 1.1);
        let cfg = EvalConfig::default();
        let exact = numeric::eval_series(&expand(&e, QExp::int(12)).unwrap(), tau);
        let direct = evaluate(&e, tau, &cfg).unwrap();
        assert!((exact - direct).norm() < 1e-12, "{exact} vs {direct}");
    }
}
