use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::Subspace;
use crate::scalar::{fmt_rational, ParamScalar, Rational};
use crate::text::format_terms;

/// An element of a Lie algebra, as dense coordinates in a fixed basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraElement {
    coeffs: Vec<Rational>,
}

impl AlgebraElement {
    pub fn zero(dim: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coeffs[i] = Rational::from_integer(1.into());
        e
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero coordinates as `(basis index, coefficient)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

impl<'a> Add<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisKind {
    /// Root vector with signed label.
    Root(i64),
    /// Cartan element with 1-based index.
    Cartan(usize),
}

/// Sparse bracket constants of a basis, with root data per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    name: String,
    labels: Vec<String>,
    kinds: Vec<BasisKind>,
    roots: Vec<Vec<i64>>,
    gram: Vec<Vec<Rational>>,
    brackets: Vec<Vec<Vec<(usize, Rational)>>>,
}

impl StructureTable {
    /// Builds the table from a faithful realization: `vectors[i]` realizes basis
    /// element `i` and `commutator` computes the bracket of two realizations.
    pub fn from_realization<F>(
        name: &str,
        labels: Vec<String>,
        kinds: Vec<BasisKind>,
        roots: Vec<Vec<i64>>,
        gram: Vec<Vec<Rational>>,
        vectors: &[Vec<Rational>],
        commutator: F,
    ) -> Result<Self, Error>
    where
        F: Fn(&[Rational], &[Rational]) -> Vec<Rational>,
    {
        let dim = vectors.len();
        let ambient = vectors.first().map_or(0, Vec::len);
        let span = Subspace::new(ambient, vectors.to_vec());
        if span.dim() != dim {
            return Err(Error::Dimension(alloc::format!(
                "{name}: basis realizations span {} of {dim} dimensions",
                span.dim()
            )));
        }
        let mut brackets = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let c = commutator(&vectors[i], &vectors[j]);
                let coords = span.coordinates(&c).ok_or_else(|| {
                    Error::Verification(alloc::format!(
                        "{name}: [{}, {}] leaves the span",
                        labels[i], labels[j]
                    ))
                })?;
                let sparse: Vec<(usize, Rational)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect();
                brackets[j][i] = sparse.iter().map(|(k, x)| (*k, -x.clone())).collect();
                brackets[i][j] = sparse;
            }
        }
        Ok(Self {
            name: name.into(),
            labels,
            kinds,
            roots,
            gram,
            brackets,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn kind(&self, i: usize) -> BasisKind {
        self.kinds[i]
    }

    /// Simple-root coordinates of basis element `i` (zero for Cartan elements).
    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    /// Gram matrix of the invariant form on the simple roots.
    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn positive_root_count(&self) -> usize {
        self.kinds
            .iter()
            .filter(|k| matches!(k, BasisKind::Root(l) if *l > 0))
            .count()
    }

    /// Basis index of the root vector with signed label `label`.
    pub fn index_of_root(&self, label: i64) -> Option<usize> {
        self.kinds.iter().position(|k| *k == BasisKind::Root(label))
    }

    /// Basis index of the Cartan element `h_i` (1-based).
    pub fn cartan(&self, i: usize) -> usize {
        self.kinds
            .iter()
            .position(|k| *k == BasisKind::Cartan(i))
            .expect("Cartan index in range")
    }

    pub fn root_element(&self, label: i64) -> Result<AlgebraElement, Error> {
        let i = self
            .index_of_root(label)
            .ok_or_else(|| Error::UnknownBasis(alloc::format!("root label {label}")))?;
        Ok(AlgebraElement::basis(self.dim(), i))
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(self.dim(), i)
    }

    /// Looks a basis element up by its printed label.
    pub fn element_by_label(&self, label: &str) -> Result<AlgebraElement, Error> {
        let i = self
            .labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownBasis(label.into()))?;
        Ok(self.basis_element(i))
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.brackets[i][j]
    }

    pub fn bracket(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, x) in a.support() {
            for (j, y) in b.support() {
                let xy = x * y;
                for (k, c) in &self.brackets[i][j] {
                    out[*k] += &xy * c;
                }
            }
        }
        AlgebraElement::from_coeffs(out)
    }

    /// Antisymmetry and the Jacobi identity on every basis triple.
    pub fn check_jacobi(&self) -> Result<(), Error> {
        let n = self.dim();
        for i in 0..n {
            if !self.brackets[i][i].is_empty() {
                return Err(Error::Verification(alloc::format!("[{0}, {0}] != 0", self.labels[i])));
            }
        }
        let e: Vec<AlgebraElement> = (0..n).map(|i| self.basis_element(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let ij = self.bracket(&e[i], &e[j]);
                for k in 0..n {
                    let jk = self.bracket(&e[j], &e[k]);
                    let ki = self.bracket(&e[k], &e[i]);
                    let sum = &(&self.bracket(&ij, &e[k]) + &self.bracket(&jk, &e[i])) + &self.bracket(&ki, &e[j]);
                    if !sum.is_zero() {
                        return Err(Error::Verification(alloc::format!(
                            "Jacobi fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Each root vector is an `ad(h_i)` eigenvector with eigenvalue `<root, simple_i>`,
    /// and the Cartan elements commute.
    pub fn check_root_grading(&self) -> Result<(), Error> {
        for hi in 1..=self.rank() {
            let h = self.cartan(hi);
            for b in 0..self.dim() {
                let expected: Rational = self.roots[b]
                    .iter()
                    .zip(self.gram.iter())
                    .map(|(c, row)| Rational::from_integer((*c).into()) * &row[hi - 1])
                    .fold(Rational::zero(), |a, x| a + x);
                let got = self.bracket(&self.basis_element(h), &self.basis_element(b));
                if got != self.basis_element(b).scale(&expected) {
                    return Err(Error::Verification(alloc::format!(
                        "{} is not an ad({}) eigenvector with eigenvalue {}",
                        self.labels[b],
                        self.labels[h],
                        fmt_rational(&expected)
                    )));
                }
            }
        }
        Ok(())
    }

    /// FNV-1a digest of the canonical bracket listing.
    pub fn checksum(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |s: &str| {
            for b in s.bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        };
        for (i, j, c) in self.bracket_entries() {
            feed(&alloc::format!("{i},{j},"));
            for (k, x) in c {
                feed(&alloc::format!("{k}:{};", fmt_rational(x)));
            }
        }
        h
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`.
    pub fn bracket_entries(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Rational)])> {
        (0..self.dim()).flat_map(move |i| {
            (i + 1..self.dim()).filter_map(move |j| {
                let c = &self.brackets[i][j];
                (!c.is_empty()).then_some((i, j, c.as_slice()))
            })
        })
    }

    /// Text form of an element, e.g. `g_1 + g_3`.
    pub fn format_element(&self, e: &AlgebraElement) -> String {
        format_terms(
            e.support()
                .map(|(i, c)| (ParamScalar::constant(c.clone()), vec![self.labels[i].clone()])),
        )
    }
}
