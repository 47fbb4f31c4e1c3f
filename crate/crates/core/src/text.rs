//! Deterministic text form shared by scalars, polynomials, operators and
//! Verma vectors.
//!
//! ```text
//! expr   := "0" | ["-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := int ["/" int] | "(" expr ")" | symbol ["^" int]
//! symbol := "lam" | "x"<i> | "d"<i> | "g_-"<k> | "v"
//! ```
//!
//! Parenthesized groups may only contain `lam`. Operators are normal ordered
//! after parsing, so `d1*x1` reads back as `x1*d1 + 1`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::diffop::DiffOperator;
use crate::error::Error;
use crate::poly::{Monomial, Poly};
use crate::scalar::{fmt_rational, ParamScalar, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Lam,
    X(usize),
    D(usize),
    G(i64),
    V,
}

/// One parsed term: a coefficient and its non-`lam` factors in written order.
pub type RawTerm = (ParamScalar, Vec<(Symbol, u32)>);

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str, Error> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(alloc::format!("expected digits at offset {start}")));
        }
        Ok(core::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn small(&mut self) -> Result<u32, Error> {
        self.digits()?
            .parse()
            .map_err(|_| err("exponent or index out of range"))
    }

    fn expr(&mut self) -> Result<Vec<RawTerm>, Error> {
        let mut out = Vec::new();
        let mut neg = self.eat(b'-');
        loop {
            let (c, f) = self.term()?;
            out.push((if neg { -c } else { c }, f));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                break;
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<RawTerm, Error> {
        let mut coeff = ParamScalar::one();
        let mut factors = Vec::new();
        loop {
            self.factor(&mut coeff, &mut factors)?;
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((coeff, factors))
    }

    fn factor(&mut self, coeff: &mut ParamScalar, factors: &mut Vec<(Symbol, u32)>) -> Result<(), Error> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits()?.parse().expect("digits");
                let r = if self.eat(b'/') {
                    self.skip_ws();
                    let d: BigInt = self.digits()?.parse().expect("digits");
                    if d == BigInt::from(0) {
                        return Err(err("zero denominator"));
                    }
                    Rational::new(n, d)
                } else {
                    Rational::from_integer(n)
                };
                *coeff = coeff.scale(&r);
                Ok(())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(err("unbalanced parenthesis"));
                }
                let mut s = ParamScalar::zero();
                for (c, f) in inner {
                    if !f.is_empty() {
                        return Err(err("only lam may appear inside parentheses"));
                    }
                    s += &c;
                }
                *coeff = &*coeff * &s;
                Ok(())
            }
            Some(_) => {
                let sym = self.symbol()?;
                let e = if self.eat(b'^') {
                    self.skip_ws();
                    self.small()?
                } else {
                    1
                };
                if sym == Symbol::Lam {
                    *coeff = &*coeff * &ParamScalar::lam().pow(e);
                } else {
                    factors.push((sym, e));
                }
                Ok(())
            }
            None => Err(err("unexpected end of input")),
        }
    }

    fn symbol(&mut self) -> Result<Symbol, Error> {
        let rest = &self.src[self.pos..];
        if rest.starts_with(b"lam") {
            self.pos += 3;
            return Ok(Symbol::Lam);
        }
        if rest.starts_with(b"g_-") {
            self.pos += 3;
            let k = self.small()?;
            return Ok(Symbol::G(-i64::from(k)));
        }
        match rest.first() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Symbol::X(self.small()? as usize))
            }
            Some(b'd') => {
                self.pos += 1;
                Ok(Symbol::D(self.small()? as usize))
            }
            Some(b'v') => {
                self.pos += 1;
                Ok(Symbol::V)
            }
            _ => Err(err(alloc::format!("unknown symbol at offset {}", self.pos))),
        }
    }
}

/// Parses an expression into raw terms.
pub fn parse_terms(s: &str) -> Result<Vec<RawTerm>, Error> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(err(alloc::format!("trailing input at offset {}", p.pos)));
    }
    Ok(out)
}

pub fn parse_param_scalar(s: &str) -> Result<ParamScalar, Error> {
    let mut acc = ParamScalar::zero();
    for (c, f) in parse_terms(s)? {
        if !f.is_empty() {
            return Err(err("expected a polynomial in lam"));
        }
        acc += &c;
    }
    Ok(acc)
}

fn check_index(i: usize, n: usize) -> Result<usize, Error> {
    if i == 0 || i > n {
        return Err(err(alloc::format!("variable index {i} outside 1..{n}")));
    }
    Ok(i - 1)
}

/// Parses a polynomial in `x1..xN`.
pub fn parse_poly<const N: usize>(s: &str) -> Result<Poly<N>, Error> {
    let mut out = Poly::zero();
    for (c, f) in parse_terms(s)? {
        let mut m = Monomial::<N>::one();
        for (sym, e) in f {
            match sym {
                Symbol::X(i) => m.0[check_index(i, N)?] += e,
                _ => return Err(err("polynomials may only contain x<i> and lam")),
            }
        }
        out.add_term(m, c);
    }
    Ok(out)
}

/// Parses a Weyl-algebra element in `x<i>`, `d<i>`, normal ordering as it goes.
pub fn parse_diffop<const N: usize>(s: &str) -> Result<DiffOperator<N>, Error> {
    let mut out = DiffOperator::zero();
    for (c, f) in parse_terms(s)? {
        let mut t = DiffOperator::constant(c);
        for (sym, e) in f {
            let g = match sym {
                Symbol::X(i) => DiffOperator::xi(check_index(i, N)?),
                Symbol::D(i) => DiffOperator::d(check_index(i, N)?),
                _ => return Err(err("operators may only contain x<i>, d<i> and lam")),
            };
            for _ in 0..e {
                t = t.compose(&g);
            }
        }
        out = &out + &t;
    }
    Ok(out)
}

fn power(name: &str, e: u32) -> String {
    if e == 1 {
        name.to_string()
    } else {
        alloc::format!("{name}^{e}")
    }
}

/// Joins `(coefficient, factor names)` pairs into the canonical text form.
pub fn format_terms<I>(terms: I) -> String
where
    I: IntoIterator<Item = (ParamScalar, Vec<String>)>,
{
    let mut out = String::new();
    for (c, factors) in terms {
        let body = factors.join("*");
        let (neg, coeff_text) = coefficient_text(&c);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match (coeff_text, body.is_empty()) {
            (None, true) => out.push('1'),
            (None, false) => out.push_str(&body),
            (Some(t), true) => out.push_str(&t),
            (Some(t), false) => {
                let _ = write!(out, "{t}*{body}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Sign and magnitude text of a coefficient; `None` magnitude means 1.
fn coefficient_text(c: &ParamScalar) -> (bool, Option<String>) {
    let nonzero: Vec<(usize, &Rational)> = c
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
        .collect();
    if let [(k, r)] = nonzero[..] {
        let neg = r.is_negative();
        let abs = r.abs();
        let lam = match k {
            0 => None,
            1 => Some(String::from("lam")),
            _ => Some(alloc::format!("lam^{k}")),
        };
        let text = match (lam, abs.is_one()) {
            (None, true) => None,
            (None, false) => Some(fmt_rational(&abs)),
            (Some(l), true) => Some(l),
            (Some(l), false) => Some(alloc::format!("{}*{}", fmt_rational(&abs), l)),
        };
        return (neg, text);
    }
    (false, Some(alloc::format!("({c})")))
}

fn monomial_factors<const N: usize>(m: &Monomial<N>, prefix: &str) -> Vec<String> {
    m.0.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| power(&alloc::format!("{prefix}{}", i + 1), e))
        .collect()
}

/// Canonical text of a polynomial, leading (largest) term first.
pub fn format_poly<const N: usize>(p: &Poly<N>) -> String {
    format_terms(p.terms().rev().map(|(m, c)| (c.clone(), monomial_factors(m, "x"))))
}

/// Canonical text of an operator, terms in descending key order.
pub fn format_diffop<const N: usize>(d: &DiffOperator<N>) -> String {
    format_terms(d.terms().rev().map(|((a, b), c)| {
        let mut f = monomial_factors(a, "x");
        f.extend(monomial_factors(b, "d"));
        (c.clone(), f)
    }))
}

impl<const N: usize> core::fmt::Display for Poly<N> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&format_poly(self))
    }
}

impl<const N: usize> core::fmt::Display for DiffOperator<N> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&format_diffop(self))
    }
}

/// LaTeX for a polynomial in `xi_1..xi_N`.
pub fn latex_poly<const N: usize>(p: &Poly<N>) -> String {
    let mut out = String::new();
    for (m, c) in p.terms().rev() {
        let (neg, text) = coefficient_text(c);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let text = text.map(|t| latex_scalar_text(&t));
        let body: String = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    alloc::format!("\\xi_{{{}}}", i + 1)
                } else {
                    alloc::format!("\\xi_{{{}}}^{{{e}}}", i + 1)
                }
            })
            .collect();
        match (text, body.is_empty()) {
            (None, true) => out.push('1'),
            (None, false) => out.push_str(&body),
            (Some(t), true) => out.push_str(&t),
            (Some(t), false) => {
                out.push_str(&t);
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn latex_scalar_text(t: &str) -> String {
    let t = t.replace("lam", "\\lambda").replace('*', " ");
    match t.split_once('/') {
        Some((n, d)) if !t.contains('(') && !t.contains(' ') => alloc::format!("\\frac{{{n}}}{{{d}}}"),
        _ => t,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn poly_round_trip() {
        let p: Poly<5> = parse_poly("4*x1*x4 + x3^2 - 3/2*x2*x5 + (2*lam + 5)*x1 - lam").unwrap();
        let s = format_poly(&p);
        assert_eq!(parse_poly::<5>(&s).unwrap(), p);
        assert_eq!(format_poly(&parse_poly::<5>("x3^2 + 4*x1*x4").unwrap()), "4*x1*x4 + x3^2");
    }

    #[test]
    fn operator_normal_orders() {
        let d: DiffOperator<5> = parse_diffop("d1*x1").unwrap();
        assert_eq!(format_diffop(&d), "x1*d1 + 1");
        let e: DiffOperator<5> = parse_diffop("x4*d3^2 - lam*d1").unwrap();
        assert_eq!(parse_diffop::<5>(&format_diffop(&e)).unwrap(), e);
    }

    #[test]
    fn scalars() {
        assert_eq!(
            parse_param_scalar("-(lam + 1/2)*2").unwrap(),
            ParamScalar::linear(rat(-1, 1), rat(-2, 1))
        );
        assert_eq!(parse_param_scalar("0").unwrap(), ParamScalar::zero());
        assert!(parse_param_scalar("x1").is_err());
        assert!(parse_poly::<5>("x6").is_err());
        assert!(parse_poly::<5>("1/0").is_err());
        assert!(parse_poly::<5>("x1 +").is_err());
    }

    #[test]
    fn latex() {
        let p: Poly<5> = parse_poly("4*x1*x4 + x3^2").unwrap();
        assert_eq!(latex_poly(&p), "4\\xi_{1}\\xi_{4} + \\xi_{3}^{2}");
    }
}
