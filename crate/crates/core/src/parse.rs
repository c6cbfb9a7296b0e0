//! Expression reader shared by polynomials and differential forms.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | variable | 'd' variable | '(' expr ')'
//! ```
//!
//! `*` is the wedge product (plain multiplication on functions), so
//! differentials are combined in order of appearance. `/` only divides by a
//! nonzero constant and `^` only raises functions to positive powers.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::ParseError;
use crate::forms::DifferentialForm;
use crate::poly::{Polynomial, PolynomialRing};
use crate::scalar::Scalar;

/// A possibly inhomogeneous form, keyed by degree.
pub(crate) type Mixed<F> = BTreeMap<usize, DifferentialForm<F>>;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Diff(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str, ring: &PolynomialRing) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("digits")), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let tok = if let Some(k) = ring.index_of(&name) {
                Tok::Var(k)
            } else if let Some(k) = name.strip_prefix('d').and_then(|rest| ring.index_of(rest)) {
                Tok::Diff(k)
            } else {
                return Err(ParseError::new(col, format!("unknown variable `{name}`")));
            };
            out.push((tok, col));
        } else {
            return Err(ParseError::new(col, format!("unexpected character `{c}`")));
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<F> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    nvars: usize,
    _f: std::marker::PhantomData<F>,
}

impl<F: Scalar> Parser<F> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn constant(&self, c: F) -> Mixed<F> {
        scalar_form(Polynomial::constant(self.nvars, c))
    }

    fn expr(&mut self) -> Result<Mixed<F>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = add(acc, rhs);
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = add(acc, negate(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Mixed<F>, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = wedge(&acc, &rhs, self.nvars);
                }
                Tok::Slash => {
                    self.bump();
                    let col = self.col();
                    let rhs = self.unary()?;
                    let c = as_constant(&rhs)
                        .ok_or_else(|| ParseError::new(col, "can only divide by a constant"))?;
                    if c.is_zero() {
                        return Err(ParseError::new(col, "division by zero"));
                    }
                    acc = wedge(&acc, &self.constant(F::one() / c), self.nvars);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Mixed<F>, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(negate(self.unary()?))
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Mixed<F>, ParseError> {
        let base_col = self.col();
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let col = self.col();
        let exp = match self.bump() {
            Tok::Int(n) => u32::try_from(n).map_err(|_| ParseError::new(col, "exponent too large"))?,
            _ => return Err(ParseError::new(col, "expected a positive integer exponent")),
        };
        if exp == 0 {
            return Err(ParseError::new(col, "expected a positive integer exponent"));
        }
        if base.keys().any(|&k| k > 0) {
            return Err(ParseError::new(base_col, "only functions can be raised to a power"));
        }
        let p = base.get(&0).map(|w| w.coefficient(&[])).unwrap_or_else(|| Polynomial::zero(self.nvars));
        Ok(scalar_form(p.pow(exp)))
    }

    fn atom(&mut self) -> Result<Mixed<F>, ParseError> {
        let col = self.col();
        match self.bump() {
            Tok::Int(n) => Ok(self.constant(F::from_bigint(&n))),
            Tok::Var(i) => Ok(scalar_form(Polynomial::var(self.nvars, i).expect("declared variable"))),
            Tok::Diff(i) => {
                let mut m = Mixed::new();
                m.insert(1, DifferentialForm::differential(self.nvars, i).expect("declared variable"));
                Ok(m)
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.col();
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    _ => Err(ParseError::new(close, "expected `)`")),
                }
            }
            Tok::End => Err(ParseError::new(col, "unexpected end of input")),
            t => Err(ParseError::new(col, format!("unexpected {}", describe(&t)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "`+`",
        Tok::Minus => "`-`",
        Tok::Star => "`*`",
        Tok::Slash => "`/`",
        Tok::Caret => "`^`",
        Tok::LParen => "`(`",
        Tok::RParen => "`)`",
        Tok::Int(_) => "number",
        Tok::Var(_) | Tok::Diff(_) => "name",
        Tok::End => "end of input",
    }
}

fn scalar_form<F: Scalar>(p: Polynomial<F>) -> Mixed<F> {
    let mut m = Mixed::new();
    if !p.is_zero() {
        m.insert(0, DifferentialForm::from_polynomial(p));
    }
    m
}

fn add<F: Scalar>(mut a: Mixed<F>, b: Mixed<F>) -> Mixed<F> {
    for (k, w) in b {
        let sum = match a.remove(&k) {
            Some(v) => &v + &w,
            None => w,
        };
        if !sum.is_zero() {
            a.insert(k, sum);
        }
    }
    a
}

fn negate<F: Scalar>(a: Mixed<F>) -> Mixed<F> {
    a.into_iter().map(|(k, w)| (k, -&w)).collect()
}

fn wedge<F: Scalar>(a: &Mixed<F>, b: &Mixed<F>, nvars: usize) -> Mixed<F> {
    let mut out = Mixed::new();
    for (k, v) in a {
        for (l, w) in b {
            if k + l > nvars {
                continue;
            }
            let mut part = Mixed::new();
            part.insert(k + l, v.wedge(w).expect("same ring"));
            out = add(out, part);
        }
    }
    out.retain(|_, w| !w.is_zero());
    out
}

fn as_constant<F: Scalar>(a: &Mixed<F>) -> Option<F> {
    match a.len() {
        0 => Some(F::zero()),
        1 => {
            let p = a.get(&0)?.coefficient(&[]);
            p.is_constant().then(|| p.constant_term())
        }
        _ => None,
    }
}

/// Parses into homogeneous parts keyed by degree; zero parts are absent.
pub(crate) fn parse_expression<F: Scalar>(text: &str, ring: &PolynomialRing) -> Result<Mixed<F>, ParseError> {
    let toks = tokenize(text, ring)?;
    let mut p = Parser { toks, pos: 0, nvars: ring.nvars(), _f: std::marker::PhantomData };
    let value = p.expr()?;
    if *p.peek() != Tok::End {
        let t = p.peek().clone();
        return Err(ParseError::new(p.col(), format!("unexpected {}", describe(&t))));
    }
    Ok(value)
}

/// Reads a polynomial. Differentials are rejected even when they cancel.
pub fn parse_polynomial<F: Scalar>(text: &str, ring: &PolynomialRing) -> Result<Polynomial<F>, ParseError> {
    let toks = tokenize(text, ring)?;
    if let Some((_, col)) = toks.iter().find(|(t, _)| matches!(t, Tok::Diff(_))) {
        return Err(ParseError::new(*col, "differential in a polynomial expression"));
    }
    let value = parse_expression::<F>(text, ring)?;
    Ok(value.get(&0).map(|w| w.coefficient(&[])).unwrap_or_else(|| Polynomial::zero(ring.nvars())))
}

/// Comma separated list of polynomials, e.g. vector field components.
pub fn parse_polynomial_list<F: Scalar>(text: &str, ring: &PolynomialRing) -> Result<Vec<Polynomial<F>>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let p = parse_polynomial(piece, ring).map_err(|e| ParseError::new(e.column + offset, e.message))?;
        out.push(p);
        offset += piece.chars().count() + 1;
    }
    Ok(out)
}
