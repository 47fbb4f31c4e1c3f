//! The scalar generalized Verma module of `so(7)` induced from the conformal
//! parabolic `p(1,0,0)` and the character of weight `lam * eps_1`.
//!
//! The opposite nilradical is commutative, so `U(n_-) v` has the monomial basis
//! `g_-1^a g_-8^b g_-6^c g_-4^d g_-9^e v`. Elements of `so(7)` act by moving
//! past the `n_-` factors one bracket at a time; whatever reaches `v` from `p`
//! is evaluated by the character.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::embedding::{parabolic, AlgebraTag, ParabolicSelection};
use crate::error::Error;
use crate::lie::{AlgebraElement, BasisKind, SoOdd, WeightBasis, WeightVec};
use crate::linalg::{kernel, Matrix};
use crate::poly::{Monomial, Poly};
use crate::scalar::{ParamScalar, Rational};
use crate::text::{format_terms, parse_terms, Symbol};

/// Root labels of the `n_-` factors, in monomial position order.
pub const N_MINUS_ORDER: [i64; 5] = [-1, -8, -6, -4, -9];

/// Exponents over `N_MINUS_ORDER`.
pub type VermaMonomial = Monomial<5>;

/// A finite combination of PBW monomials applied to `v`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct VermaVector {
    poly: Poly<5>,
}

impl VermaVector {
    pub fn zero() -> Self {
        Self { poly: Poly::zero() }
    }

    /// The highest weight vector `v`.
    pub fn highest() -> Self {
        Self { poly: Poly::one() }
    }

    pub fn from_poly(poly: Poly<5>) -> Self {
        Self { poly }
    }

    pub fn as_poly(&self) -> &Poly<5> {
        &self.poly
    }

    pub fn monomial(m: VermaMonomial, c: ParamScalar) -> Self {
        Self {
            poly: Poly::term(m, c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&VermaMonomial, &ParamScalar)> {
        self.poly.terms()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            poly: &self.poly + &other.poly,
        }
    }

    pub fn scale(&self, s: &ParamScalar) -> Self {
        Self {
            poly: self.poly.scale(s),
        }
    }

    pub fn eval_lam(&self, at: &Rational) -> Self {
        Self {
            poly: self.poly.eval_lam(at),
        }
    }

    /// Parses e.g. `4*g_-1*g_-9*v + g_-6^2*v`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let mut poly = Poly::zero();
        for (c, factors) in parse_terms(s)? {
            let mut m = Monomial::one();
            let mut seen_v = c.is_zero();
            for (sym, e) in factors {
                match sym {
                    Symbol::G(l) => {
                        if seen_v {
                            return Err(Error::Parse("v must be the last factor".into()));
                        }
                        let pos = N_MINUS_ORDER
                            .iter()
                            .position(|&x| x == l)
                            .ok_or_else(|| Error::Parse(alloc::format!("g_{l} is not in n_-")))?;
                        m.0[pos] += e;
                    }
                    Symbol::V if e == 1 && !seen_v => seen_v = true,
                    _ => return Err(Error::Parse("expected g_-<k> factors followed by v".into())),
                }
            }
            if !seen_v {
                return Err(Error::Parse("every term must end in v".into()));
            }
            poly.add_term(m, c);
        }
        Ok(Self { poly })
    }
}

impl fmt::Display for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format_terms(self.poly.terms().rev().map(|(m, c)| {
            let mut fs: Vec<String> = m
                .0
                .iter()
                .zip(N_MINUS_ORDER)
                .filter(|(e, _)| **e > 0)
                .map(|(&e, l)| {
                    if e == 1 {
                        alloc::format!("g_{l}")
                    } else {
                        alloc::format!("g_{l}^{e}")
                    }
                })
                .collect();
            fs.push(String::from("v"));
            (c.clone(), fs)
        }));
        f.write_str(&s)
    }
}

/// Memo of `(basis index, monomial) -> action`, owned by the caller.
#[derive(Clone, Debug, Default)]
pub struct ActionCache {
    memo: BTreeMap<(usize, VermaMonomial), Poly<5>>,
}

impl ActionCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct VermaModule {
    so7: SoOdd,
    parabolic: ParabolicSelection,
    /// basis index -> position in the monomial, for `n_-` elements
    position: Vec<Option<usize>>,
    order: [usize; 5],
    /// character value on each basis element (zero off the Cartan)
    character: Vec<ParamScalar>,
}

impl VermaModule {
    /// The module induced from `p(1,0,0)` and weight `lam * eps_1`.
    pub fn new(so7: &SoOdd) -> Result<Self, Error> {
        let t = so7.table();
        let p = parabolic(t, AlgebraTag::So7, &[1, 0, 0])?;
        let mut order = [0usize; 5];
        for (k, l) in N_MINUS_ORDER.iter().enumerate() {
            order[k] = t.index_of_root(*l).ok_or_else(|| Error::UnknownBasis(alloc::format!("g_{l}")))?;
        }
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != p.opposite {
            return Err(Error::Verification("n_- does not match the parabolic".into()));
        }
        if !p.opposite_is_commutative(t) {
            return Err(Error::Verification("n_- is not commutative".into()));
        }
        let mut position = vec![None; t.dim()];
        for (k, &i) in order.iter().enumerate() {
            position[i] = Some(k);
        }
        let mut character = vec![ParamScalar::zero(); t.dim()];
        for i in 0..t.dim() {
            if let BasisKind::Cartan(_) = t.kind(i) {
                let eps = so7.eps_values(&t.basis_element(i));
                character[i] = ParamScalar::lam().scale(&eps[0]);
            }
        }
        // the character must vanish on the Cartan of the Levi's semisimple part
        for (s, &m) in p.mask.iter().enumerate() {
            if m == 0 && !character[t.cartan(s + 1)].is_zero() {
                return Err(Error::Verification("weight is not of scalar type".into()));
            }
        }
        Ok(Self {
            so7: so7.clone(),
            parabolic: p,
            position,
            order,
            character,
        })
    }

    pub fn so7(&self) -> &SoOdd {
        &self.so7
    }

    pub fn parabolic(&self) -> &ParabolicSelection {
        &self.parabolic
    }

    /// Basis indices of the `n_-` factors in monomial order.
    pub fn order(&self) -> &[usize; 5] {
        &self.order
    }

    fn act_basis(&self, cache: &mut ActionCache, b: usize, m: &VermaMonomial) -> Poly<5> {
        if let Some(k) = self.position[b] {
            return Poly::monomial(m.mul(&Monomial::var(k)));
        }
        if m.is_one() {
            return Poly::constant(self.character[b].clone());
        }
        if let Some(hit) = cache.memo.get(&(b, *m)) {
            return hit.clone();
        }
        let k = m.0.iter().position(|&e| e > 0).expect("nonconstant monomial");
        let rest = m.checked_div(&Monomial::var(k)).expect("divisible");
        let y = self.order[k];
        // b * y * rest = y * (b * rest) + [b, y] * rest
        let mut out = self.act_basis(cache, b, &rest).mul_monomial(&Monomial::var(k));
        for (c, coef) in self.so7.table().bracket_basis(b, y) {
            let part = self.act_basis(cache, *c, &rest);
            out = &out + &part.scale_rat(coef);
        }
        cache.memo.insert((b, *m), out.clone());
        out
    }

    pub fn act_with(&self, cache: &mut ActionCache, x: &AlgebraElement, v: &VermaVector) -> VermaVector {
        let mut out = Poly::zero();
        for (b, xc) in x.support() {
            for (m, vc) in v.poly.terms() {
                let part = self.act_basis(cache, b, m);
                out = &out + &part.scale(&vc.scale(xc));
            }
        }
        VermaVector { poly: out }
    }

    /// `x . v` in the module.
    pub fn act(&self, x: &AlgebraElement, v: &VermaVector) -> VermaVector {
        self.act_with(&mut ActionCache::new(), x, v)
    }

    /// Weight read from the action of `h_1, h_2, h_3`; rejects zero and
    /// non-homogeneous vectors.
    pub fn weight_of(&self, v: &VermaVector) -> Result<WeightVec<ParamScalar>, Error> {
        let (m0, c0) = v
            .poly
            .terms()
            .next()
            .ok_or_else(|| Error::Invalid("the zero vector has no weight".into()))?;
        let t = self.so7.table();
        let n = self.so7.n();
        let mut eigen = Vec::new();
        let mut eps_rows: Matrix = Vec::new();
        for i in 1..=n {
            let h = t.basis_element(t.cartan(i));
            let hv = self.act(&h, v);
            let c = hv.poly.coeff(m0).div_exact(c0).ok_or_else(|| {
                Error::Invalid("vector is not a weight vector".into())
            })?;
            if hv != v.scale(&c) {
                return Err(Error::Invalid("vector is not weight-homogeneous".into()));
            }
            eigen.push(c);
            eps_rows.push(self.so7.eps_values(&h));
        }
        // eigen_i = sum_j w_j eps_j(h_i): invert the n x n system
        let mut aug: Matrix = eps_rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| crate::scalar::int(i64::from(i == j))));
                r
            })
            .collect();
        let piv = crate::linalg::rref(&mut aug, n);
        if piv.len() != n {
            return Err(Error::Verification("Cartan elements are dependent".into()));
        }
        let w = (0..n)
            .map(|j| {
                (0..n).fold(ParamScalar::zero(), |acc, i| &acc + &eigen[i].scale(&aug[j][n + i]))
            })
            .collect();
        Ok(WeightVec::new(WeightBasis::Eps, w))
    }

    /// Symbolic matrix of the stacked actions of `annihilators` on degree `d`.
    pub fn action_system(&self, d: u32, annihilators: &[AlgebraElement]) -> OracleSystem {
        let columns = Monomial::<5>::all_of_degree(d);
        let mut cache = ActionCache::new();
        let mut rows: BTreeMap<(usize, VermaMonomial), Vec<ParamScalar>> = BTreeMap::new();
        for (ci, m) in columns.iter().enumerate() {
            let v = VermaVector::monomial(*m, ParamScalar::one());
            for (ai, a) in annihilators.iter().enumerate() {
                let img = self.act_with(&mut cache, a, &v);
                for (om, c) in img.terms() {
                    rows.entry((ai, *om))
                        .or_insert_with(|| vec![ParamScalar::zero(); columns.len()])[ci] = c.clone();
                }
            }
        }
        OracleSystem {
            columns,
            rows: rows.into_values().collect(),
        }
    }

    /// Exact basis of the vectors of degree `d` killed by every annihilator at `lam = lambda0`.
    pub fn oracle_singular_search(
        &self,
        d: u32,
        lambda0: &Rational,
        annihilators: &[AlgebraElement],
    ) -> Vec<VermaVector> {
        self.action_system(d, annihilators).kernel_at(lambda0)
    }
}

/// Stacked action matrix on one degree, symbolic in `lam`.
#[derive(Clone, Debug)]
pub struct OracleSystem {
    pub columns: Vec<VermaMonomial>,
    pub rows: Vec<Vec<ParamScalar>>,
}

impl OracleSystem {
    pub fn kernel_at(&self, lambda0: &Rational) -> Vec<VermaVector> {
        let m: Matrix = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| c.eval(lambda0)).collect())
            .collect();
        kernel(&m, self.columns.len())
            .into_iter()
            .map(|k| {
                let mut p = Poly::zero();
                for (c, m) in k.into_iter().zip(&self.columns) {
                    if !c.is_zero() {
                        p.add_term(*m, ParamScalar::constant(c));
                    }
                }
                VermaVector { poly: p }
            })
            .collect()
    }
}
