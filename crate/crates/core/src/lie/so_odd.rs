//! `so(2n+1)` as matrices preserving a symmetric form.
//!
//! Rows and columns are indexed `1..n, 0, -1..-n`. The form pairs `e_i` with
//! `e_-i` and has `B(e_0, e_0) = 2`; rescaling `e_0` this way keeps the
//! short-root generators rational while giving the same structure constants
//! as the usual `sqrt(2)`-normalized ones.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::table::{AlgebraElement, BasisKind, StructureTable};
use crate::error::Error;
use crate::scalar::{int, rat, Rational};

/// A square matrix of size `2n+1` in the index convention above.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixElement {
    n: usize,
    entries: Vec<Rational>,
}

impl MatrixElement {
    pub fn zero(n: usize) -> Self {
        let m = 2 * n + 1;
        Self {
            n,
            entries: vec![Rational::zero(); m * m],
        }
    }

    /// Position of the signed index `i` in `1..n, 0, -1..-n`.
    pub fn idx(n: usize, i: i64) -> usize {
        let n = n as i64;
        let p = match i {
            i if i > 0 => i - 1,
            0 => n,
            i => n - i,
        };
        p as usize
    }

    fn size(&self) -> usize {
        2 * self.n + 1
    }

    /// `e_i (x) e_j^*`.
    pub fn unit(n: usize, i: i64, j: i64) -> Self {
        let mut m = Self::zero(n);
        m.set(i, j, Rational::one());
        m
    }

    pub fn get(&self, i: i64, j: i64) -> &Rational {
        &self.entries[Self::idx(self.n, i) * self.size() + Self::idx(self.n, j)]
    }

    pub fn set(&mut self, i: i64, j: i64, v: Rational) {
        let s = self.size();
        self.entries[Self::idx(self.n, i) * s + Self::idx(self.n, j)] = v;
    }

    /// Entries in row-major order of the internal positions.
    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn from_entries(n: usize, entries: Vec<Rational>) -> Self {
        Self { n, entries }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let s = self.size();
        let mut out = vec![Rational::zero(); s * s];
        for r in 0..s {
            for k in 0..s {
                let a = &self.entries[r * s + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..s {
                    let b = &other.entries[k * s + c];
                    if !b.is_zero() {
                        out[r * s + c] += a * b;
                    }
                }
            }
        }
        Self {
            n: self.n,
            entries: out,
        }
    }

    pub fn transpose(&self) -> Self {
        let s = self.size();
        let mut out = vec![Rational::zero(); s * s];
        for r in 0..s {
            for c in 0..s {
                out[c * s + r] = self.entries[r * s + c].clone();
            }
        }
        Self {
            n: self.n,
            entries: out,
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).add(&other.mul(self).scale(&int(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// The defining form: `B(e_i, e_-i) = 1`, `B(e_0, e_0) = 2`.
    pub fn form(n: usize) -> Self {
        let mut b = Self::zero(n);
        for i in 1..=n as i64 {
            b.set(i, -i, Rational::one());
            b.set(-i, i, Rational::one());
        }
        b.set(0, 0, int(2));
        b
    }

    /// `A^t B + B A = 0`.
    pub fn preserves_form(&self) -> bool {
        let b = Self::form(self.n);
        self.transpose().mul(&b).add(&b.mul(self)).is_zero()
    }
}

/// `so(2n+1)` with its matrix basis and structure table.
#[derive(Clone, Debug)]
pub struct SoOdd {
    n: usize,
    table: StructureTable,
    matrices: Vec<MatrixElement>,
    eps_roots: Vec<Vec<i64>>,
}

#[derive(Clone, Copy)]
enum RootShape {
    Diff(i64, i64),
    Sum(i64, i64),
    Short(i64),
}

impl RootShape {
    fn eps(self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        match self {
            RootShape::Diff(i, j) => {
                v[i as usize - 1] += 1;
                v[j as usize - 1] -= 1;
            }
            RootShape::Sum(i, j) => {
                v[i as usize - 1] += 1;
                v[j as usize - 1] += 1;
            }
            RootShape::Short(i) => v[i as usize - 1] += 1,
        }
        v
    }

    fn positive(self, n: usize) -> MatrixElement {
        let e = |i, j| MatrixElement::unit(n, i, j);
        match self {
            RootShape::Diff(i, j) => e(i, j).add(&e(-j, -i).scale(&int(-1))),
            RootShape::Sum(i, j) => e(i, -j).add(&e(j, -i).scale(&int(-1))),
            RootShape::Short(i) => e(i, 0).scale(&int(2)).add(&e(0, -i).scale(&int(-1))),
        }
    }

    fn negative(self, n: usize) -> MatrixElement {
        match self {
            RootShape::Short(i) => MatrixElement::unit(n, 0, i)
                .add(&MatrixElement::unit(n, -i, 0).scale(&int(-2))),
            _ => self.positive(n).transpose(),
        }
    }
}

/// Simple-root coordinates of an `eps`-vector (`eps_i = eta_i + ... + eta_n`).
pub(crate) fn eps_to_eta(v: &[i64]) -> Vec<i64> {
    v.iter()
        .scan(0, |acc, x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// Graded lexicographic label order: height ascending, then coordinates descending.
pub(crate) fn label_order(a: &[i64], b: &[i64]) -> core::cmp::Ordering {
    let ha: i64 = a.iter().sum();
    let hb: i64 = b.iter().sum();
    ha.cmp(&hb).then_with(|| b.cmp(a))
}

/// Builds `so(2n+1)` for `n >= 2`.
///
/// Basis order: `g_1..g_m`, `h_1..h_n`, `g_-1..g_-m` with `m = n^2` positive
/// roots labelled in graded lexicographic order of simple-root coordinates.
/// `h_i = [g_i, g_-i]` for the long simple roots and `h_n = 1/2 [g_n, g_-n]`.
pub fn build_so_odd(n: usize) -> Result<SoOdd, Error> {
    if n < 2 {
        return Err(Error::Invalid(alloc::format!("so(2n+1) needs n >= 2, got {n}")));
    }
    let ni = n as i64;
    let mut shapes = Vec::new();
    for i in 1..=ni {
        for j in i + 1..=ni {
            shapes.push(RootShape::Diff(i, j));
            shapes.push(RootShape::Sum(i, j));
        }
        shapes.push(RootShape::Short(i));
    }
    shapes.sort_by(|a, b| label_order(&eps_to_eta(&a.eps(n)), &eps_to_eta(&b.eps(n))));
    let m = shapes.len();

    let pos: Vec<MatrixElement> = shapes.iter().map(|s| s.positive(n)).collect();
    let neg: Vec<MatrixElement> = shapes.iter().map(|s| s.negative(n)).collect();
    let cartan: Vec<MatrixElement> = (0..n)
        .map(|i| {
            let h = pos[i].commutator(&neg[i]);
            if i + 1 == n {
                h.scale(&rat(1, 2))
            } else {
                h
            }
        })
        .collect();

    let mut labels: Vec<String> = Vec::new();
    let mut kinds = Vec::new();
    let mut roots = Vec::new();
    let mut eps_roots = Vec::new();
    let mut matrices = Vec::new();
    for (k, s) in shapes.iter().enumerate() {
        labels.push(alloc::format!("g_{}", k + 1));
        kinds.push(BasisKind::Root(k as i64 + 1));
        roots.push(eps_to_eta(&s.eps(n)));
        eps_roots.push(s.eps(n));
        matrices.push(pos[k].clone());
    }
    for (i, h) in cartan.iter().enumerate() {
        labels.push(alloc::format!("h_{}", i + 1));
        kinds.push(BasisKind::Cartan(i + 1));
        roots.push(vec![0; n]);
        eps_roots.push(vec![0; n]);
        matrices.push(h.clone());
    }
    for (k, s) in shapes.iter().enumerate() {
        labels.push(alloc::format!("g_-{}", k + 1));
        kinds.push(BasisKind::Root(-(k as i64) - 1));
        roots.push(eps_to_eta(&s.eps(n)).iter().map(|x| -x).collect());
        eps_roots.push(s.eps(n).iter().map(|x| -x).collect());
        matrices.push(neg[k].clone());
    }
    debug_assert_eq!(matrices.len(), 2 * m + n);

    // (eta_i, eta_j) from the standard form on eps
    let eta_eps: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            if i + 1 < n {
                v[i + 1] = -1;
            }
            v
        })
        .collect();
    let gram: Vec<Vec<Rational>> = eta_eps
        .iter()
        .map(|a| {
            eta_eps
                .iter()
                .map(|b| int(a.iter().zip(b).map(|(x, y)| x * y).sum()))
                .collect()
        })
        .collect();

    let vectors: Vec<Vec<Rational>> = matrices.iter().map(|mm| mm.entries().to_vec()).collect();
    let table = StructureTable::from_realization(
        &alloc::format!("so({})", 2 * n + 1),
        labels,
        kinds,
        roots,
        gram,
        &vectors,
        |a, b| {
            let ma = MatrixElement::from_entries(n, a.to_vec());
            let mb = MatrixElement::from_entries(n, b.to_vec());
            ma.commutator(&mb).entries().to_vec()
        },
    )?;
    Ok(SoOdd {
        n,
        table,
        matrices,
        eps_roots,
    })
}

impl SoOdd {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn matrix(&self, i: usize) -> &MatrixElement {
        &self.matrices[i]
    }

    /// `eps`-coordinates of the root of basis element `i`.
    pub fn eps_root(&self, i: usize) -> &[i64] {
        &self.eps_roots[i]
    }

    pub fn realize(&self, e: &AlgebraElement) -> MatrixElement {
        let mut out = MatrixElement::zero(self.n);
        for (i, c) in e.support() {
            out = out.add(&self.matrices[i].scale(c));
        }
        out
    }

    /// `(eps_1(h), ..., eps_n(h))` read off the diagonal of the realization.
    pub fn eps_values(&self, h: &AlgebraElement) -> Vec<Rational> {
        let m = self.realize(h);
        (1..=self.n as i64).map(|j| m.get(j, j).clone()).collect()
    }

    /// Every basis matrix preserves the defining form.
    pub fn check_form(&self) -> Result<(), Error> {
        for (i, m) in self.matrices.iter().enumerate() {
            if !m.preserves_form() {
                return Err(Error::Verification(alloc::format!(
                    "{} does not preserve the form",
                    self.table.label(i)
                )));
            }
        }
        Ok(())
    }
}
