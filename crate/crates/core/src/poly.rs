//! Sparse commutative polynomials in `N` variables over `ParamScalar`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{ParamScalar, Rational};

/// Exponent vector. Ordered graded-lexicographically with `x1 > x2 > ... > xN`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial<const N: usize>(pub [u32; N]);

impl<const N: usize> Monomial<N> {
    pub const fn one() -> Self {
        Self([0; N])
    }

    /// The variable with zero-based index `i`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self(e)
    }

    pub fn exps(&self) -> &[u32; N] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Self(e)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Self(e))
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `prod_i a_i! / (a_i - b_i)!`, the constant produced by `d^b` acting on `x^a`.
    /// Zero when `b` does not divide `a`.
    pub fn falling_factorial(&self, b: &Self) -> u128 {
        let mut acc: u128 = 1;
        for (&a, &k) in self.0.iter().zip(b.0.iter()) {
            if k > a {
                return 0;
            }
            for j in 0..k {
                acc *= u128::from(a - j);
            }
        }
        acc
    }

    /// `prod_i a_i!`.
    pub fn factorial(&self) -> u128 {
        self.falling_factorial(self)
    }

    /// Every monomial of total degree `d`, ascending.
    pub fn all_of_degree(d: u32) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = [0u32; N];
        fill(&mut cur, 0, d, &mut out);
        out.sort();
        out
    }

    /// Every monomial of total degree at most `d`, ascending.
    pub fn all_up_to_degree(d: u32) -> Vec<Self> {
        (0..=d).flat_map(Self::all_of_degree).collect()
    }
}

fn fill<const N: usize>(cur: &mut [u32; N], pos: usize, left: u32, out: &mut Vec<Monomial<N>>) {
    if N == 0 {
        if left == 0 {
            out.push(Monomial(*cur));
        }
        return;
    }
    if pos == N - 1 {
        cur[pos] = left;
        out.push(Monomial(*cur));
        return;
    }
    for e in 0..=left {
        cur[pos] = e;
        fill(cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
}

impl<const N: usize> Ord for Monomial<N> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl<const N: usize> PartialOrd for Monomial<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly<const N: usize> {
    terms: BTreeMap<Monomial<N>, ParamScalar>,
}

/// Polynomials in `xi_1..xi_5`.
pub type XiPolynomial = Poly<5>;

impl<const N: usize> Poly<N> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: ParamScalar) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn one() -> Self {
        Self::constant(ParamScalar::one())
    }

    pub fn term(m: Monomial<N>, c: ParamScalar) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial<N>) -> Self {
        Self::term(m, ParamScalar::one())
    }

    /// The variable with zero-based index `i`.
    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial<N>, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial<N>) -> ParamScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial<N>, c: ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, s: &ParamScalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c * s);
        }
        out
    }

    pub fn scale_rat(&self, s: &Rational) -> Self {
        self.scale(&ParamScalar::constant(s.clone()))
    }

    pub fn mul_monomial(&self, m: &Monomial<N>) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Total degree of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Substitutes a value for `lam`.
    pub fn eval_lam(&self, at: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, ParamScalar::constant(c.eval(at)));
        }
        out
    }

    /// Whether every coefficient is independent of `lam`.
    pub fn is_lam_free(&self) -> bool {
        self.terms.values().all(ParamScalar::is_constant)
    }
}

impl<const N: usize> FromIterator<(Monomial<N>, ParamScalar)> for Poly<N> {
    fn from_iter<I: IntoIterator<Item = (Monomial<N>, ParamScalar)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }
}

impl<'a, const N: usize> Add<&'a Poly<N>> for &'a Poly<N> {
    type Output = Poly<N>;
    fn add(self, rhs: &Poly<N>) -> Poly<N> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a, const N: usize> Sub<&'a Poly<N>> for &'a Poly<N> {
    type Output = Poly<N>;
    fn sub(self, rhs: &Poly<N>) -> Poly<N> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a, const N: usize> Mul<&'a Poly<N>> for &'a Poly<N> {
    type Output = Poly<N>;
    fn mul(self, rhs: &Poly<N>) -> Poly<N> {
        let mut out = Poly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl<const N: usize> Neg for &Poly<N> {
    type Output = Poly<N>;
    fn neg(self) -> Poly<N> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<const N: usize> $tr<Poly<N>> for Poly<N> {
            type Output = Poly<N>;
            fn $m(self, rhs: Poly<N>) -> Poly<N> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `I1 = xi_1 xi_4 + xi_2 xi_5`, the quadratic sl(2)-invariant.
pub fn invariant_i1() -> XiPolynomial {
    &Poly::monomial(Monomial([1, 0, 0, 1, 0])) + &Poly::monomial(Monomial([0, 1, 0, 0, 1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn grlex_order() {
        let x1 = Monomial::<3>::var(0);
        let x2 = Monomial::<3>::var(1);
        let x3sq = Monomial::<3>([0, 0, 2]);
        assert!(x1 > x2);
        assert!(x3sq > x1);
        assert_eq!(Monomial::<3>::all_of_degree(2).len(), 6);
        assert_eq!(Monomial::<5>::all_of_degree(6).len(), 210);
    }

    #[test]
    fn laplacian_square_has_six_terms() {
        let lap = &invariant_i1().scale_rat(&int(4)) + &Poly::monomial(Monomial([0, 0, 2, 0, 0]));
        let sq = lap.pow(2);
        let mut cs: Vec<i64> = sq
            .terms()
            .map(|(_, c)| {
                let r = c.as_constant().unwrap();
                i64::try_from(r.to_integer()).unwrap()
            })
            .collect();
        cs.sort();
        assert_eq!(cs, [1, 8, 8, 16, 16, 32]);
    }

    #[test]
    fn falling_factorials() {
        let a = Monomial::<2>([3, 1]);
        assert_eq!(a.falling_factorial(&Monomial([2, 0])), 6);
        assert_eq!(a.falling_factorial(&Monomial([0, 2])), 0);
        assert_eq!(a.factorial(), 6);
    }
}
