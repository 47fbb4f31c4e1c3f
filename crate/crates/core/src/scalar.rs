//! Exact scalars: arbitrary-precision rationals and polynomials in the formal
//! parameter `lam` with rational coefficients.
//!
//! `ParamScalar` stores coefficients in ascending degree order. The vector is
//! empty for zero and otherwise ends in a nonzero coefficient.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rational(r: &Rational) -> alloc::string::String {
    use alloc::string::ToString;
    if r.is_integer() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p`, or `p/q`. Whitespace around the tokens is ignored.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(alloc::format!("not a rational: {s:?}"));
    let parse_int = |t: &str| -> Result<BigInt, Error> {
        let t = t.trim();
        if t.is_empty() {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(alloc::format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
    }
}

/// A polynomial in `lam` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamScalar {
    coeffs: Vec<Rational>,
}

impl ParamScalar {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    /// The parameter `lam` itself.
    pub fn lam() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `a + b*lam`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    /// Coefficients in ascending order; trailing zeros are stripped.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The value when the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scales to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Substitutes `lam -> lam + shift`.
    pub fn shift(&self, by: &Rational) -> Self {
        let mut acc = Self::zero();
        let arg = Self::linear(by.clone(), Rational::one());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &arg) + &Self::constant(c.clone());
        }
        acc
    }
}

impl From<Rational> for ParamScalar {
    fn from(r: Rational) -> Self {
        Self::constant(r)
    }
}

impl From<i64> for ParamScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: &ParamScalar) -> ParamScalar {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => out.push(a + b),
                (Some(a), None) => out.push(a.clone()),
                (None, Some(b)) => out.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        ParamScalar::from_coeffs(out)
    }
}

impl<'a> Sub<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: &ParamScalar) -> ParamScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: &ParamScalar) -> ParamScalar {
        if self.is_zero() || rhs.is_zero() {
            return ParamScalar::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ParamScalar::from_coeffs(out)
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, rhs: ParamScalar) -> ParamScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, rhs: &ParamScalar) -> ParamScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&ParamScalar> for ParamScalar {
    fn add_assign(&mut self, rhs: &ParamScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&ParamScalar> for ParamScalar {
    fn sub_assign(&mut self, rhs: &ParamScalar) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for ParamScalar {
    /// Descending powers, e.g. `2*lam^2 - lam + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let var = match k {
                0 => None,
                1 => Some(alloc::string::String::from("lam")),
                _ => Some(alloc::format!("lam^{k}")),
            };
            match var {
                None => f.write_str(&fmt_rational(&abs))?,
                Some(v) if abs.is_one() => f.write_str(&v)?,
                Some(v) => write!(f, "{}*{}", fmt_rational(&abs), v)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamScalar({self})")
    }
}

/// Clears denominators and content, giving a primitive integer polynomial
/// with positive leading coefficient (ascending order).
fn primitive_integer(p: &ParamScalar) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() {
        for c in &mut ints {
            *c /= &g;
        }
    }
    if ints.last().is_some_and(Signed::is_negative) {
        for c in &mut ints {
            *c = -&*c;
        }
    }
    ints
}

fn sign_changes(chain: &[ParamScalar], at: &Rational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in chain {
        let v = p.eval(at);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

fn sturm_chain(p: &ParamScalar) -> Vec<ParamScalar> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-r);
    }
    chain
}

/// The rational with the smallest denominator in the closed interval `[lo, hi]`
/// (Stern-Brocot descent via continued fractions).
fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if fl == *lo {
        return lo.clone();
    }
    if fl.clone() + Rational::one() <= *hi {
        return fl + Rational::one();
    }
    // both in (fl, fl+1): recurse on reciprocals of the fractional parts
    let a = (hi - &fl).recip();
    let b = (lo - &fl).recip();
    fl + simplest_between(&a, &b).recip()
}

/// All rational roots of a nonzero polynomial, ascending, without multiplicity.
///
/// Real roots of the square-free part are isolated with a Sturm chain until each
/// isolating interval is shorter than the minimal gap between fractions whose
/// denominator divides the leading coefficient; the simplest fraction in the
/// interval is then the only possible rational root there.
pub fn param_root_scan(p: &ParamScalar) -> Result<Vec<Rational>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let mut work = p.clone();
    // zero roots
    if work.coeff(0).is_zero() {
        roots.push(Rational::zero());
        while work.coeff(0).is_zero() && !work.is_zero() {
            work = ParamScalar::from_coeffs(work.coeffs[1..].to_vec());
        }
    }
    if work.degree().unwrap_or(0) == 0 {
        roots.sort();
        return Ok(roots);
    }
    let sqfree = work.div_exact(&work.gcd(&work.derivative())).expect("gcd divides");
    let ints = primitive_integer(&sqfree);
    let lead = Rational::from_integer(ints.last().cloned().expect("nonzero").abs());
    let sq = ParamScalar::from_coeffs(ints.iter().cloned().map(Rational::from_integer).collect());
    // Cauchy bound
    let bound = Rational::one()
        + ints[..ints.len() - 1]
            .iter()
            .map(|c| Rational::from_integer(c.abs()) / &lead)
            .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    let target_width = (Rational::from_integer(BigInt::from(2)) * &lead * &lead).recip();
    let chain = sturm_chain(&sq);
    let two = Rational::from_integer(BigInt::from(2));
    // Sturm counts distinct roots in (lo, hi], endpoint roots included
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&chain, &lo) - sign_changes(&chain, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 && &hi - &lo < target_width {
            let cand = simplest_between(&lo, &hi);
            if sq.eval(&cand).is_zero() {
                roots.push(cand);
            }
            continue;
        }
        let mid = (&lo + &hi) / &two;
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Divides out every rational root (with multiplicity); what remains has no
/// rational roots.
pub fn strip_rational_roots(p: &ParamScalar) -> Result<(Vec<Rational>, ParamScalar), Error> {
    let roots = param_root_scan(p)?;
    let mut rest = p.clone();
    for r in &roots {
        let lin = ParamScalar::linear(-r.clone(), Rational::one());
        while let Some(q) = rest.div_exact(&lin) {
            rest = q;
        }
    }
    Ok((roots, rest))
}
