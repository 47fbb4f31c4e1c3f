//! Weights in the bases used for `so(7)` (`eps`, `eta`, `omega`) and `G2`
//! (`alpha`, `psi`), with exact conversions, the invariant form and reflections.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::linalg::{rref, Matrix};
use crate::scalar::{int, parse_rational, rat, ParamScalar, Rational};
use crate::text::format_terms;

/// Scalars a weight may carry: plain rationals or polynomials in `lam`.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn to_param(&self) -> ParamScalar;
    /// `None` when the value depends on `lam` but `Self` cannot.
    fn from_param(p: &ParamScalar) -> Option<Self>;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_param(&self) -> ParamScalar {
        ParamScalar::constant(self.clone())
    }
    fn from_param(p: &ParamScalar) -> Option<Self> {
        p.as_constant()
    }
}

impl Coefficient for ParamScalar {
    fn zero() -> Self {
        ParamScalar::zero()
    }
    fn from_rational(r: &Rational) -> Self {
        ParamScalar::constant(r.clone())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale(&self, r: &Rational) -> Self {
        ParamScalar::scale(self, r)
    }
    fn is_zero(&self) -> bool {
        ParamScalar::is_zero(self)
    }
    fn to_param(&self) -> ParamScalar {
        self.clone()
    }
    fn from_param(p: &ParamScalar) -> Option<Self> {
        Some(p.clone())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum WeightBasis {
    /// Orthonormal `eps_i` of `so(2n+1)`.
    Eps,
    /// Simple roots `eta_i = eps_i - eps_{i+1}`, `eta_n = eps_n`.
    Eta,
    /// Fundamental weights `omega_i = eps_1 + ... + eps_i`, `omega_n = 1/2 (eps_1 + ... + eps_n)`.
    Omega,
    /// Simple roots of `G2`.
    Alpha,
    /// Fundamental weights `psi_1 = 2 alpha_1 + alpha_2`, `psi_2 = 3 alpha_1 + 2 alpha_2`.
    Psi,
}

impl WeightBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            WeightBasis::Eps => "eps",
            WeightBasis::Eta => "eta",
            WeightBasis::Omega => "omega",
            WeightBasis::Alpha => "alpha",
            WeightBasis::Psi => "psi",
        }
    }

    fn is_g2(self) -> bool {
        matches!(self, WeightBasis::Alpha | WeightBasis::Psi)
    }

    fn canonical(self) -> WeightBasis {
        if self.is_g2() {
            WeightBasis::Alpha
        } else {
            WeightBasis::Eps
        }
    }

    /// Rows: canonical coordinates of each basis vector.
    fn to_canonical_matrix(self, n: usize) -> Matrix {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match self {
                        WeightBasis::Eps | WeightBasis::Alpha => int(i64::from(i == j)),
                        WeightBasis::Eta => {
                            if j == i {
                                int(1)
                            } else if j == i + 1 {
                                int(-1)
                            } else {
                                int(0)
                            }
                        }
                        WeightBasis::Omega => {
                            if j > i {
                                int(0)
                            } else if i + 1 == n {
                                rat(1, 2)
                            } else {
                                int(1)
                            }
                        }
                        WeightBasis::Psi => [[int(2), int(1)], [int(3), int(2)]][i][j].clone(),
                    })
                    .collect()
            })
            .collect()
    }
}

fn invert(m: &Matrix) -> Matrix {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| int(i64::from(i == j))));
            r
        })
        .collect();
    let piv = rref(&mut aug, n);
    assert_eq!(piv.len(), n, "basis change is invertible");
    aug.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// A weight as coordinates in a declared basis.
#[derive(Clone, PartialEq, Debug)]
pub struct WeightVec<S: Coefficient = Rational> {
    basis: WeightBasis,
    coords: Vec<S>,
}

impl<S: Coefficient> WeightVec<S> {
    pub fn new(basis: WeightBasis, coords: Vec<S>) -> Self {
        Self { basis, coords }
    }

    pub fn zero(basis: WeightBasis, n: usize) -> Self {
        Self::new(basis, vec![S::zero(); n])
    }

    /// The `i`-th (1-based) basis vector.
    pub fn unit(basis: WeightBasis, n: usize, i: usize) -> Self {
        let mut w = Self::zero(basis, n);
        w.coords[i - 1] = S::from_rational(&Rational::one());
        w
    }

    pub fn basis(&self) -> WeightBasis {
        self.basis
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(S::is_zero)
    }

    fn apply(&self, m: &Matrix) -> Vec<S> {
        let n = self.coords.len();
        (0..n)
            .map(|j| {
                self.coords
                    .iter()
                    .zip(m.iter())
                    .fold(S::zero(), |acc, (c, row)| acc.add(&c.scale(&row[j])))
            })
            .collect()
    }

    /// Exact change of basis within the same algebra.
    pub fn to(&self, target: WeightBasis) -> Result<Self, Error> {
        if self.basis.is_g2() != target.is_g2() {
            return Err(Error::Invalid(alloc::format!(
                "cannot convert {} coordinates to {}",
                self.basis.symbol(),
                target.symbol()
            )));
        }
        let n = self.rank();
        let canon = self.apply(&self.basis.to_canonical_matrix(n));
        let back = invert(&target.to_canonical_matrix(n));
        let tmp = WeightVec::new(self.basis.canonical(), canon);
        Ok(WeightVec::new(target, tmp.apply(&back)))
    }

    fn canonical(&self) -> Self {
        self.to(self.basis.canonical()).expect("same family")
    }

    fn same_family(&self, other: &Self) -> Result<(), Error> {
        if self.basis.is_g2() != other.basis.is_g2() || self.rank() != other.rank() {
            return Err(Error::Invalid("weights live in different algebras".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.same_family(other)?;
        let b = other.to(self.basis)?;
        Ok(Self::new(
            self.basis,
            self.coords.iter().zip(&b.coords).map(|(x, y)| x.add(y)).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.basis, self.coords.iter().map(|c| c.scale(r)).collect())
    }

    pub fn mul_scalar(&self, s: &S) -> Self {
        Self::new(self.basis, self.coords.iter().map(|c| c.mul(s)).collect())
    }

    /// The invariant form: standard on `eps`, Gram `[[2,-3],[-3,6]]` on `alpha`.
    pub fn inner(&self, other: &Self) -> Result<S, Error> {
        self.same_family(other)?;
        let a = self.canonical();
        let b = other.canonical();
        let mut acc = S::zero();
        if self.basis.is_g2() {
            let g = [[int(2), int(-3)], [int(-3), int(6)]];
            for i in 0..2 {
                for j in 0..2 {
                    acc = acc.add(&a.coords[i].mul(&b.coords[j]).scale(&g[i][j]));
                }
            }
        } else {
            for (x, y) in a.coords.iter().zip(&b.coords) {
                acc = acc.add(&x.mul(y));
            }
        }
        Ok(acc)
    }

    pub fn to_param(&self) -> WeightVec<ParamScalar> {
        WeightVec::new(self.basis, self.coords.iter().map(S::to_param).collect())
    }
}

impl WeightVec<ParamScalar> {
    pub fn eval_lam(&self, at: &Rational) -> WeightVec<Rational> {
        WeightVec::new(self.basis, self.coords.iter().map(|c| c.eval(at)).collect())
    }
}

impl WeightVec<Rational> {
    /// Parses `2*eps1 - eps3`, `psi1`, `1/2*alpha2 + alpha1`, or `0*eps1`.
    /// The rank is 3 for `so(7)` bases and 2 for `G2` bases.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(alloc::format!("not a weight: {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (k, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && k > 0 {
                terms.push((neg, core::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '-' {
                neg = true;
            } else if ch != '+' {
                cur.push(ch);
            }
        }
        terms.push((neg, cur));
        let mut basis: Option<WeightBasis> = None;
        let mut acc: Vec<(usize, Rational)> = Vec::new();
        for (neg, t) in terms {
            let (coef, sym) = match t.rsplit_once('*') {
                Some((c, sym)) => (parse_rational(c)?, String::from(sym)),
                None => (Rational::one(), t.clone()),
            };
            let split = sym.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
            let (name, idx) = sym.split_at(split);
            let b = [
                WeightBasis::Eps,
                WeightBasis::Eta,
                WeightBasis::Omega,
                WeightBasis::Alpha,
                WeightBasis::Psi,
            ]
            .into_iter()
            .find(|b| b.symbol() == name)
            .ok_or_else(bad)?;
            if basis.is_some_and(|x| x != b) {
                return Err(Error::Parse("mixed weight bases".into()));
            }
            basis = Some(b);
            let i: usize = idx.parse().map_err(|_| bad())?;
            acc.push((i, if neg { -coef } else { coef }));
        }
        let basis = basis.ok_or_else(bad)?;
        let n = if basis.is_g2() { 2 } else { 3 };
        let mut w = Self::zero(basis, n);
        for (i, c) in acc {
            if i == 0 || i > n {
                return Err(bad());
            }
            w.coords[i - 1] += c;
        }
        Ok(w)
    }
}

impl<S: Coefficient> fmt::Display for WeightVec<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.basis.symbol();
        let s = format_terms(
            self.coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c.to_param(), vec![alloc::format!("{sym}{}", i + 1)])),
        );
        f.write_str(&s)
    }
}

/// `s_root(w) = w - 2 <w, root> / <root, root> * root`.
pub fn reflect<S: Coefficient>(w: &WeightVec<S>, root: &WeightVec<Rational>) -> Result<WeightVec<S>, Error> {
    if root.is_zero() {
        return Err(Error::Invalid("reflection in the zero vector".into()));
    }
    let r = root.to_param();
    let rr = root.inner(root)?;
    let wr = w.to_param().inner(&r)?;
    let factor = int(2) / rr;
    let shift_param = r.mul_scalar(&wr.scale(&factor));
    let shift: Vec<S> = shift_param
        .to(w.basis())?
        .coords
        .iter()
        .map(|c| S::from_param(c).ok_or_else(|| Error::Invalid("weight coefficients are not rational".into())))
        .collect::<Result<_, _>>()?;
    Ok(WeightVec::new(
        w.basis(),
        w.coords.iter().zip(&shift).map(|(a, b)| a.add(&b.scale(&int(-1)))).collect(),
    ))
}

/// Lexicographically smallest nonnegative integer vector `c` with
/// `sum c_k roots[k] = w`, or `None` if there is none.
pub fn positive_combination(w: &WeightVec<Rational>, roots: &[WeightVec<Rational>]) -> Option<Vec<u64>> {
    let simple = if w.basis().is_g2() {
        WeightBasis::Alpha
    } else {
        WeightBasis::Eta
    };
    let to_int = |v: &WeightVec<Rational>| -> Option<Vec<i64>> {
        v.to(simple)
            .ok()?
            .coords
            .iter()
            .map(|c| c.is_integer().then(|| i64::try_from(c.to_integer()).ok()).flatten())
            .collect()
    };
    let target = to_int(w)?;
    let rs: Vec<Vec<i64>> = roots.iter().map(to_int).collect::<Option<_>>()?;
    if rs.iter().any(|r| r.iter().any(|&x| x < 0) || r.iter().all(|&x| x == 0)) {
        return None;
    }
    let mut memo = BTreeMap::new();
    let mut out = vec![0u64; rs.len()];
    if !feasible(0, &target, &rs, &mut memo) {
        return None;
    }
    let mut rest = target;
    for k in 0..rs.len() {
        let mut c = 0u64;
        loop {
            if feasible(k + 1, &rest, &rs, &mut memo) {
                break;
            }
            rest = rest.iter().zip(&rs[k]).map(|(a, b)| a - b).collect();
            c += 1;
        }
        out[k] = c;
    }
    Some(out)
}

fn feasible(k: usize, rest: &[i64], rs: &[Vec<i64>], memo: &mut BTreeMap<(usize, Vec<i64>), bool>) -> bool {
    if rest.iter().any(|&x| x < 0) {
        return false;
    }
    if rest.iter().all(|&x| x == 0) {
        return true;
    }
    if k == rs.len() {
        return false;
    }
    let key = (k, rest.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut cur = rest.to_vec();
    let mut ok = false;
    loop {
        if feasible(k + 1, &cur, rs, memo) {
            ok = true;
            break;
        }
        cur = cur.iter().zip(&rs[k]).map(|(a, b)| a - b).collect();
        if cur.iter().any(|&x| x < 0) {
            break;
        }
    }
    memo.insert(key, ok);
    ok
}
