//! Normal-ordered elements of the Weyl algebra in `N` variable pairs.
//!
//! A term `(a, b) -> c` stands for `c * xi^a * d^b` with every `xi` to the left
//! of every `d`. Normal order is unique, so equality of maps is equality of
//! operators.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::poly::{Monomial, Poly};
use crate::scalar::{ParamScalar, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DiffOperator<const N: usize> {
    terms: BTreeMap<(Monomial<N>, Monomial<N>), ParamScalar>,
}

fn small(n: u128) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn binom(n: u32, k: u32) -> u128 {
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * u128::from(n - j) / u128::from(j + 1);
    }
    acc
}

/// All multi-indices `k` with `k_i <= bound_i`.
fn boxes<const N: usize>(bound: &[u32; N]) -> Vec<[u32; N]> {
    let mut out = Vec::new();
    let mut cur = [0u32; N];
    loop {
        out.push(cur);
        let mut i = 0;
        loop {
            if i == N {
                return out;
            }
            if cur[i] < bound[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

impl<const N: usize> DiffOperator<N> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: ParamScalar) -> Self {
        Self::term(Monomial::one(), Monomial::one(), c)
    }

    pub fn identity() -> Self {
        Self::constant(ParamScalar::one())
    }

    pub fn term(xi: Monomial<N>, d: Monomial<N>, c: ParamScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(xi, d, c);
        out
    }

    /// Multiplication by `xi_i` (zero-based).
    pub fn xi(i: usize) -> Self {
        Self::term(Monomial::var(i), Monomial::one(), ParamScalar::one())
    }

    /// The partial derivative `d_i` (zero-based).
    pub fn d(i: usize) -> Self {
        Self::term(Monomial::one(), Monomial::var(i), ParamScalar::one())
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

    /// Terms `((xi exponents, d exponents), coefficient)` in ascending key order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(Monomial<N>, Monomial<N>), &ParamScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, xi: &Monomial<N>, d: &Monomial<N>) -> ParamScalar {
        self.terms.get(&(*xi, *d)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, xi: Monomial<N>, d: Monomial<N>, c: ParamScalar) {
        if c.is_zero() {
            return;
        }
        let key = (xi, d);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn scale(&self, s: &ParamScalar) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(*a, *b, c * s);
        }
        out
    }

    /// Highest total derivative order; zero for the zero operator.
    pub fn order(&self) -> u32 {
        self.terms.keys().map(|(_, b)| b.degree()).max().unwrap_or(0)
    }

    /// Applies the operator to a polynomial.
    pub fn apply(&self, p: &Poly<N>) -> Poly<N> {
        let mut out = Poly::zero();
        for ((a, b), c) in &self.terms {
            for (m, pc) in p.terms() {
                let ff = m.falling_factorial(b);
                if ff == 0 {
                    continue;
                }
                let Some(rest) = m.checked_div(b) else {
                    continue;
                };
                out.add_term(rest.mul(a), (c * pc).scale(&small(ff)));
            }
        }
        out
    }

    /// The product `self * other`, normal ordered.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c1) in &self.terms {
            for ((cc, dd), c2) in &other.terms {
                let c12 = c1 * c2;
                // d^b xi^c = sum_k prod binom(b_i,k_i) c_i!/(c_i-k_i)! xi^{c-k} d^{b-k}
                let mut bound = [0u32; N];
                for i in 0..N {
                    bound[i] = b.0[i].min(cc.0[i]);
                }
                for k in boxes(&bound) {
                    let k = Monomial(k);
                    let mut weight: u128 = cc.falling_factorial(&k);
                    for i in 0..N {
                        weight *= binom(b.0[i], k.0[i]);
                    }
                    let xi = a.mul(&cc.checked_div(&k).expect("k <= c"));
                    let d = b.checked_div(&k).expect("k <= b").mul(dd);
                    out.add_term(xi, d, c12.scale(&small(weight)));
                }
            }
        }
        out
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &self.compose(other) - &other.compose(self)
    }

    /// The Fourier transform `xi^a d^b -> xi^b d^a`.
    ///
    /// This is the algebra anti-automorphism of the Weyl algebra exchanging
    /// multiplication by `x_i` with `d_i` and `d_i` with multiplication by
    /// `xi_i`; on normal-ordered terms it simply swaps the exponent vectors.
    pub fn fourier(&self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(*b, *a, c.clone());
        }
        out
    }

    /// `-fourier(self)`, which preserves commutators and so transports the
    /// adjoint action on `x`-coordinates to the dual action on `xi`-polynomials.
    pub fn adjoint_image(&self) -> Self {
        -&self.fourier()
    }

    pub fn eval_lam(&self, at: &Rational) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(*a, *b, ParamScalar::constant(c.eval(at)));
        }
        out
    }
}

impl<const N: usize> FromIterator<((Monomial<N>, Monomial<N>), ParamScalar)> for DiffOperator<N> {
    fn from_iter<I: IntoIterator<Item = ((Monomial<N>, Monomial<N>), ParamScalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in iter {
            out.add_term(a, b, c);
        }
        out
    }
}

/// Applies `d` to `p`.
pub fn op_apply<const N: usize>(d: &DiffOperator<N>, p: &Poly<N>) -> Poly<N> {
    d.apply(p)
}

/// Normal-ordered product `d1 * d2`.
pub fn op_compose<const N: usize>(d1: &DiffOperator<N>, d2: &DiffOperator<N>) -> DiffOperator<N> {
    d1.compose(d2)
}

impl<'a, const N: usize> Add<&'a DiffOperator<N>> for &'a DiffOperator<N> {
    type Output = DiffOperator<N>;
    fn add(self, rhs: &DiffOperator<N>) -> DiffOperator<N> {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(*a, *b, c.clone());
        }
        out
    }
}

impl<'a, const N: usize> Sub<&'a DiffOperator<N>> for &'a DiffOperator<N> {
    type Output = DiffOperator<N>;
    fn sub(self, rhs: &DiffOperator<N>) -> DiffOperator<N> {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(*a, *b, -c);
        }
        out
    }
}

impl<'a, const N: usize> Mul<&'a DiffOperator<N>> for &'a DiffOperator<N> {
    type Output = DiffOperator<N>;
    fn mul(self, rhs: &DiffOperator<N>) -> DiffOperator<N> {
        self.compose(rhs)
    }
}

impl<const N: usize> Neg for &DiffOperator<N> {
    type Output = DiffOperator<N>;
    fn neg(self) -> DiffOperator<N> {
        DiffOperator {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}
