//! A small expression language for truncated power series.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := atom | "-" factor
//! atom   := RATIONAL | "t" | "L" | "(" expr ")" | FUNC "(" args ")"
//! FUNC   := exp | log1p | inv | rev | pow | compose
//! ```
//!
//! A rational literal is written `p` or `p/q` with no spaces, so `1/2` is a
//! single literal while `1 / 2` is a division.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;
use umbral_core::{Field, Fps, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rat),
    Lambda,
    T,
    Neg(Box<Expr>),
    Inv(Box<Expr>),
    Exp(Box<Expr>),
    Log1p(Box<Expr>),
    Rev(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Rat),
    Compose(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(Rat),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(r) => write!(f, "number {r}"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
        } else if b.is_ascii_digit() {
            let end = digits(i);
            let num: BigInt = src[i..end].parse().expect("ascii digits");
            let (value, next) =
                if end + 1 < bytes.len() && bytes[end] == b'/' && bytes[end + 1].is_ascii_digit() {
                    let dend = digits(end + 1);
                    let den: BigInt = src[end + 1..dend].parse().expect("ascii digits");
                    if den == BigInt::from(0) {
                        return Err(ParseError {
                            offset: end + 1,
                            expected: vec!["nonzero denominator".into()],
                            found: "0".into(),
                        });
                    }
                    (Rat::new(num, den), dend)
                } else {
                    (Rat::from_integer(num), end)
                };
            out.push((i, Tok::Num(value)));
            i = next;
        } else if b.is_ascii_alphabetic() || b == b'_' {
            let mut end = i;
            while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_') {
                end += 1;
            }
            out.push((i, Tok::Ident(src[i..end].to_string())));
            i = end;
        } else if b"+-*/(),".contains(&b) {
            out.push((i, Tok::Sym(b as char)));
            i += 1;
        } else {
            let ch = src[i..].chars().next().expect("in bounds");
            return Err(ParseError {
                offset: i,
                expected: vec!["a token".into()],
                found: format!("'{ch}'"),
            });
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

const FUNCS: [&str; 6] = ["exp", "log1p", "inv", "rev", "pow", "compose"];

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        let (offset, tok) = &self.toks[self.pos];
        Err(ParseError {
            offset: *offset,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.to_string(),
        })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&[&format!("'{c}'")])
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Sym('/') => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Sym('-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        const ATOM: [&str; 6] = ["number", "'t'", "'L'", "'('", "'-'", "function name"];
        match self.peek().clone() {
            Tok::Num(r) => {
                self.pos += 1;
                Ok(Expr::Num(r))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "t" => {
                    self.pos += 1;
                    Ok(Expr::T)
                }
                "L" => {
                    self.pos += 1;
                    Ok(Expr::Lambda)
                }
                f if FUNCS.contains(&f) => {
                    self.pos += 1;
                    self.call(f)
                }
                _ => self.fail(&ATOM),
            },
            _ => self.fail(&ATOM),
        }
    }

    fn call(&mut self, name: &str) -> Result<Expr, ParseError> {
        self.expect('(')?;
        let first = Box::new(self.expr()?);
        let e = match name {
            "exp" => Expr::Exp(first),
            "log1p" => Expr::Log1p(first),
            "inv" => Expr::Inv(first),
            "rev" => Expr::Rev(first),
            "pow" => {
                self.expect(',')?;
                Expr::Pow(first, self.signed_rational()?)
            }
            "compose" => {
                self.expect(',')?;
                Expr::Compose(first, Box::new(self.expr()?))
            }
            _ => unreachable!("caller checks FUNCS"),
        };
        self.expect(')')?;
        Ok(e)
    }

    fn signed_rational(&mut self) -> Result<Rat, ParseError> {
        let negative = *self.peek() == Tok::Sym('-');
        if negative {
            self.pos += 1;
        }
        match self.peek().clone() {
            Tok::Num(r) => {
                self.pos += 1;
                Ok(if negative { -r } else { r })
            }
            _ => self.fail(&["rational exponent"]),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(&["operator", "end of input"]);
    }
    Ok(e)
}

const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const UNARY: u8 = 3;

fn render_at(e: &Expr, min: u8) -> String {
    let (prec, s) = match e {
        Expr::Num(r) if *r < Rat::zero() => (UNARY, format!("-{}", -r)),
        Expr::Num(r) => (4, r.to_string()),
        Expr::Lambda => (4, "L".into()),
        Expr::T => (4, "t".into()),
        Expr::Neg(a) => (UNARY, format!("-{}", render_at(a, UNARY))),
        Expr::Inv(a) => (4, format!("inv({})", render(a))),
        Expr::Exp(a) => (4, format!("exp({})", render(a))),
        Expr::Log1p(a) => (4, format!("log1p({})", render(a))),
        Expr::Rev(a) => (4, format!("rev({})", render(a))),
        Expr::Pow(a, r) => (4, format!("pow({}, {r})", render(a))),
        Expr::Compose(a, b) => (4, format!("compose({}, {})", render(a), render(b))),
        Expr::Add(a, b) => (
            SUM,
            format!("{} + {}", render_at(a, SUM), render_at(b, PRODUCT)),
        ),
        Expr::Sub(a, b) => (
            SUM,
            format!("{} - {}", render_at(a, SUM), render_at(b, PRODUCT)),
        ),
        Expr::Mul(a, b) => (
            PRODUCT,
            format!("{}*{}", render_at(a, PRODUCT), render_at(b, UNARY)),
        ),
        // `1/(2)` keeps a division by a literal from lexing as one rational.
        Expr::Div(a, b) => {
            let rhs = match **b {
                Expr::Num(_) => format!("({})", render(b)),
                _ => render_at(b, UNARY),
            };
            (PRODUCT, format!("{}/{}", render_at(a, PRODUCT), rhs))
        }
    };
    if prec < min {
        format!("({s})")
    } else {
        s
    }
}

/// Renders with minimal parentheses. The output parses back to the same tree.
pub fn render(e: &Expr) -> String {
    render_at(e, SUM)
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("symbol L is unbound; use --field qlambda or --lambda p/q")]
    UnboundSymbol,
    #[error(transparent)]
    Series(#[from] umbral_core::Error),
}

fn eval_at<F: Field>(e: &Expr, order: usize, lambda: Option<&F>) -> Result<Fps<F>, EvalError> {
    let go = |a: &Expr| eval_at(a, order, lambda);
    Ok(match e {
        Expr::Num(r) => Fps::constant(F::from_rat(r), order),
        Expr::Lambda => Fps::constant(lambda.ok_or(EvalError::UnboundSymbol)?.clone(), order),
        Expr::T => Fps::monomial(F::one(), 1, order),
        Expr::Neg(a) => -go(a)?,
        Expr::Inv(a) => go(a)?.inv()?,
        Expr::Exp(a) => go(a)?.exp()?,
        Expr::Log1p(a) => (&Fps::one(order) + &go(a)?).log()?,
        Expr::Rev(a) => go(a)?.revert()?,
        Expr::Add(a, b) => &go(a)? + &go(b)?,
        Expr::Sub(a, b) => &go(a)? - &go(b)?,
        Expr::Mul(a, b) => &go(a)? * &go(b)?,
        Expr::Div(a, b) => go(a)?.div(&go(b)?)?,
        Expr::Pow(a, r) => {
            let base = go(a)?;
            if r.is_integer() {
                let e = i64::try_from(r.to_integer()).map_err(|_| {
                    umbral_core::Error::Domain(format!("exponent {r} is too large"))
                })?;
                base.pow_int(e)?
            } else {
                base.pow_field(&F::from_rat(r))?
            }
        }
        Expr::Compose(a, b) => go(a)?.compose(&go(b)?)?,
    })
}

/// Evaluates `e` to `order` exact coefficients.
///
/// Division by a series of positive order loses precision, so evaluation is
/// retried with a longer working truncation until `order` terms survive.
pub fn eval_expr<F: Field>(
    e: &Expr,
    order: usize,
    lambda: Option<&F>,
) -> Result<Fps<F>, EvalError> {
    let mut working = order.max(1);
    loop {
        let s = eval_at(e, working, lambda)?;
        if s.trunc_order() >= order {
            return Ok(s.truncate(order));
        }
        let deficit = order - s.trunc_order();
        if working > 4 * order + 64 {
            return Err(umbral_core::Error::TruncationTooShort {
                degree: order,
                order: s.trunc_order(),
            }
            .into());
        }
        working += deficit;
    }
}
