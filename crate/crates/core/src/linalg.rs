//! Exact linear algebra over `Q` and parametric elimination over `Q[lam]`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::scalar::{strip_rational_roots, ParamScalar, Rational};

pub type Matrix = Vec<Vec<Rational>>;

/// Reduces `m` in place to reduced row echelon form and returns pivot columns.
/// Zero rows are dropped.
pub fn rref(m: &mut Matrix, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        if !inv.is_one() {
            for x in m[row].iter_mut().skip(col) {
                *x *= &inv;
            }
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, y) in other.iter_mut().zip(pivot_row.iter()).skip(col) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    pivots
}

pub fn rank(m: &Matrix, ncols: usize) -> usize {
    let mut w = m.clone();
    rref(&mut w, ncols).len()
}

/// A basis of the right kernel. Each vector has a single free variable set to 1.
pub fn kernel(m: &Matrix, ncols: usize) -> Vec<Vec<Rational>> {
    let mut w = m.clone();
    let pivots = rref(&mut w, ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -w[r][free].clone();
        }
        out.push(v);
    }
    out
}

/// A subspace of `Q^dim` spanned by given vectors, with coordinate lookup.
#[derive(Clone, Debug)]
pub struct Subspace {
    dim: usize,
    generators: Vec<Vec<Rational>>,
    // rows: [echelon | transform], transform expresses each row in the generators
    reduced: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(dim: usize, generators: Vec<Vec<Rational>>) -> Self {
        let k = generators.len();
        let mut aug: Matrix = generators
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut row = g.clone();
                row.extend((0..k).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        let pivots = rref(&mut aug, dim);
        Self {
            dim,
            generators,
            reduced: aug,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn generators(&self) -> &[Vec<Rational>] {
        &self.generators
    }

    /// Indices of a maximal independent subset of the generators, in order.
    pub fn independent_generators(&self) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        let mut acc = Subspace::new(self.dim, Vec::new());
        for (i, g) in self.generators.iter().enumerate() {
            if !acc.contains(g) {
                chosen.push(i);
                let mut gens = acc.generators.clone();
                gens.push(g.clone());
                acc = Subspace::new(self.dim, gens);
            }
        }
        chosen
    }

    /// Coefficients `c` with `sum c_i generators_i = v`, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let k = self.generators.len();
        let mut residual = v.to_vec();
        let mut coeffs = vec![Rational::zero(); k];
        for (row, &pc) in self.reduced.iter().zip(self.pivots.iter()) {
            let f = residual[pc].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in residual.iter_mut().zip(row.iter()) {
                *x -= &f * y;
            }
            for (c, t) in coeffs.iter_mut().zip(row[self.dim..].iter()) {
                *c += &f * t;
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coeffs)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    /// A spanning set of the intersection.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let (a, b) = (&self.generators, &other.generators);
        let ncols = a.len() + b.len();
        let m: Matrix = (0..self.dim)
            .map(|r| {
                a.iter()
                    .map(|g| g[r].clone())
                    .chain(b.iter().map(|g| -g[r].clone()))
                    .collect()
            })
            .collect();
        let gens = kernel(&m, ncols)
            .into_iter()
            .map(|kv| {
                let mut v = vec![Rational::zero(); self.dim];
                for (c, g) in kv.iter().zip(a.iter()) {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(g.iter()) {
                        *x += c * y;
                    }
                }
                v
            })
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        Subspace::new(self.dim, gens)
    }
}

/// Solutions of a parametric homogeneous system `M(lam) A = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSolution {
    /// Rational values where the kernel is nontrivial, ascending, with a kernel basis.
    pub solutions: Vec<(Rational, Vec<Vec<Rational>>)>,
    /// Factor of the tested maximal minor without rational roots; its roots
    /// (if any) are not examined.
    pub unresolved: Option<ParamScalar>,
}

/// Every rational `lam0` at which the columns of `m` become dependent.
///
/// Fraction-free (Bareiss) elimination with row pivoting finds a nonzero
/// maximal minor; the kernel can only be nontrivial at its roots, and each
/// rational root is then checked with an exact kernel computation.
pub fn param_solve(m: &[Vec<ParamScalar>], ncols: usize) -> Result<ParamSolution, Error> {
    if m.iter().any(|r| r.len() != ncols) {
        return Err(Error::Dimension(alloc::format!("rows must have {ncols} entries")));
    }
    if ncols == 0 {
        return Ok(ParamSolution {
            solutions: Vec::new(),
            unresolved: None,
        });
    }
    let mut w: Vec<Vec<ParamScalar>> = m.to_vec();
    let mut prev = ParamScalar::one();
    for k in 0..ncols {
        let Some(p) = (k..w.len()).find(|&r| !w[r][k].is_zero()) else {
            return Err(Error::IdenticallySingular);
        };
        w.swap(k, p);
        for i in k + 1..w.len() {
            for j in k + 1..ncols {
                let num = &(&w[k][k] * &w[i][j]) - &(&w[i][k] * &w[k][j]);
                w[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            w[i][k] = ParamScalar::zero();
        }
        prev = w[k][k].clone();
    }
    let minor = prev;
    let (roots, rest) = strip_rational_roots(&minor)?;
    let mut solutions = Vec::new();
    for r in roots {
        let at: Matrix = m
            .iter()
            .map(|row| row.iter().map(|c| c.eval(&r)).collect())
            .collect();
        let ker = kernel(&at, ncols);
        if !ker.is_empty() {
            solutions.push((r, ker));
        }
    }
    let unresolved = (!rest.is_constant()).then(|| rest.monic());
    Ok(ParamSolution {
        solutions,
        unresolved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn ps(a: i64, b: i64) -> ParamScalar {
        ParamScalar::linear(int(a), int(b))
    }

    #[test]
    fn one_by_one() {
        let m = vec![vec![ParamScalar::linear(rat(3, 2), int(1))]];
        let s = param_solve(&m, 1).unwrap();
        assert_eq!(s.solutions, vec![(rat(-3, 2), vec![vec![int(1)]])]);
    }

    #[test]
    fn identity_has_no_solutions() {
        let m = vec![
            vec![ParamScalar::one(), ParamScalar::zero()],
            vec![ParamScalar::zero(), ParamScalar::one()],
        ];
        assert!(param_solve(&m, 2).unwrap().solutions.is_empty());
    }

    #[test]
    fn identically_singular() {
        let m = vec![vec![ps(1, 1), ps(1, 1)], vec![ps(2, 2), ps(2, 2)]];
        assert_eq!(param_solve(&m, 2), Err(Error::IdenticallySingular));
    }

    #[test]
    fn irrational_factor_reported() {
        // det = lam^2 - 2
        let m = vec![
            vec![ParamScalar::lam(), ParamScalar::from_int(2)],
            vec![ParamScalar::one(), ParamScalar::lam()],
        ];
        let s = param_solve(&m, 2).unwrap();
        assert!(s.solutions.is_empty());
        assert_eq!(s.unresolved.unwrap().coeffs(), &[int(-2), int(0), int(1)]);
    }

    #[test]
    fn subspace_intersection() {
        let e = |v: [i64; 3]| v.iter().map(|&x| int(x)).collect::<Vec<_>>();
        let a = Subspace::new(3, vec![e([1, 0, 0]), e([0, 1, 0])]);
        let b = Subspace::new(3, vec![e([0, 1, 0]), e([0, 0, 1])]);
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&e([0, 5, 0])));
        assert_eq!(a.coordinates(&e([2, 3, 0])).unwrap(), vec![int(2), int(3)]);
        assert!(a.coordinates(&e([0, 0, 1])).is_none());
    }
}
