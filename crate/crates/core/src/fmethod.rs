//! Fourier picture: the module action transported to polynomials in
//! `xi_1..xi_5`, and the differential operators that realize it.
//!
//! Coordinates: `xi_1 <-> g_-1`, `xi_2 <-> g_-8`, `xi_3 <-> g_-6`,
//! `xi_4 <-> g_-9`, `xi_5 <-> g_-4`. A polynomial `sum c_a xi^a` stands for the
//! module vector `sum c_a g^a v`.

use alloc::vec::Vec;

use crate::diffop::DiffOperator;
use crate::embedding::{embed_g2, EmbeddedSubalgebra};
use crate::error::Error;
use crate::lie::{build_so_odd, AlgebraElement, SoOdd};
use crate::poly::{Monomial, Poly, XiPolynomial};
use crate::scalar::{int, Rational};
use crate::verma::{ActionCache, VermaModule, VermaVector, N_MINUS_ORDER};

/// `xi_i` corresponds to the root vector with this label.
pub const XI_LABELS: [i64; 5] = [-1, -8, -6, -9, -4];

/// `gr(xi_i)`; `gr(d_i) = -gr(xi_i)`.
pub const GR_WEIGHTS: [i64; 5] = [-1, -3, -2, -3, -1];

/// The fixed bijection between `xi`-variables and monomial positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoordinateMap {
    /// `to_verma[i]` is the monomial position of `xi_{i+1}`.
    to_verma: [usize; 5],
}

impl Default for CoordinateMap {
    fn default() -> Self {
        let mut to_verma = [0; 5];
        for (i, l) in XI_LABELS.iter().enumerate() {
            to_verma[i] = N_MINUS_ORDER.iter().position(|x| x == l).expect("label in n_-");
        }
        Self { to_verma }
    }
}

impl CoordinateMap {
    pub fn label_of_xi(&self, i: usize) -> i64 {
        XI_LABELS[i]
    }

    fn monomial_to_verma(&self, m: &Monomial<5>) -> Monomial<5> {
        let mut out = [0; 5];
        for (i, &e) in m.0.iter().enumerate() {
            out[self.to_verma[i]] = e;
        }
        Monomial(out)
    }

    fn monomial_from_verma(&self, m: &Monomial<5>) -> Monomial<5> {
        let mut out = [0; 5];
        for (i, &p) in self.to_verma.iter().enumerate() {
            out[i] = m.0[p];
        }
        Monomial(out)
    }

    /// Inverse Fourier image: `xi^a -> g^a v`.
    pub fn to_verma(&self, p: &XiPolynomial) -> VermaVector {
        VermaVector::from_poly(p.terms().map(|(m, c)| (self.monomial_to_verma(m), c.clone())).collect())
    }

    pub fn from_verma(&self, v: &VermaVector) -> XiPolynomial {
        v.terms().map(|(m, c)| (self.monomial_from_verma(m), c.clone())).collect()
    }
}

/// All algebraic structure needed by the solver, built once.
#[derive(Clone, Debug)]
pub struct Engine {
    so7: SoOdd,
    g2: EmbeddedSubalgebra,
    verma: VermaModule,
    coords: CoordinateMap,
}

impl Engine {
    pub fn new() -> Result<Self, Error> {
        let so7 = build_so_odd(3)?;
        let g2 = embed_g2(&so7)?;
        let verma = VermaModule::new(&so7)?;
        Ok(Self {
            so7,
            g2,
            verma,
            coords: CoordinateMap::default(),
        })
    }

    pub fn so7(&self) -> &SoOdd {
        &self.so7
    }

    pub fn g2(&self) -> &EmbeddedSubalgebra {
        &self.g2
    }

    pub fn verma(&self) -> &VermaModule {
        &self.verma
    }

    pub fn coords(&self) -> &CoordinateMap {
        &self.coords
    }

    /// `g_label` in `so(7)`.
    pub fn so7_root(&self, label: i64) -> AlgebraElement {
        self.so7.table().root_element(label).expect("so(7) root label")
    }

    /// `h_i` in `so(7)`.
    pub fn so7_cartan(&self, i: usize) -> AlgebraElement {
        let t = self.so7.table();
        t.basis_element(t.cartan(i))
    }

    /// `i(g'_label)`.
    pub fn g2_root(&self, label: i64) -> AlgebraElement {
        self.g2.root_image(label).expect("G2 root label")
    }

    /// `i(h'_i)`.
    pub fn g2_cartan(&self, i: usize) -> AlgebraElement {
        self.g2.cartan_image(i)
    }

    /// `i(2 h'_1 + h'_2)`, the grading element of `p'(1,0)`.
    pub fn grading_element(&self) -> AlgebraElement {
        &self.g2_cartan(1).scale(&int(2)) + &self.g2_cartan(2)
    }

    /// `{i(g'_2), i(g'_-2), i(g'_1)}`: the Levi `sl(2)` of `p'(1,0)` and the
    /// nilradical generator.
    pub fn p_prime_annihilators(&self) -> Vec<AlgebraElement> {
        alloc::vec![self.g2_root(2), self.g2_root(-2), self.g2_root(1)]
    }

    /// The Levi `sl(2)` together with the whole nilradical of `p'(1,0)`.
    pub fn p_prime_full_annihilators(&self) -> Vec<AlgebraElement> {
        alloc::vec![
            self.g2_root(2),
            self.g2_root(-2),
            self.g2_root(1),
            self.g2_root(3),
            self.g2_root(4),
            self.g2_root(5),
            self.g2_root(6),
        ]
    }

    /// Simple root vectors of `so(7)`.
    pub fn so7_annihilators(&self) -> Vec<AlgebraElement> {
        alloc::vec![self.so7_root(1), self.so7_root(2), self.so7_root(3)]
    }

    pub fn fourier_act_with(&self, cache: &mut ActionCache, x: &AlgebraElement, p: &XiPolynomial) -> XiPolynomial {
        let v = self.coords.to_verma(p);
        self.coords.from_verma(&self.verma.act_with(cache, x, &v))
    }

    /// The action of `x` on polynomials, computed through the module.
    pub fn fourier_act(&self, x: &AlgebraElement, p: &XiPolynomial) -> XiPolynomial {
        self.fourier_act_with(&mut ActionCache::new(), x, p)
    }

    /// The differential operator of order at most `max_order` that realizes
    /// `fourier_act(x, .)`.
    ///
    /// Coefficients come from the values on monomials of degree up to
    /// `max_order`; the result is then compared with the true action on every
    /// monomial of degree up to `max_order + 5`.
    pub fn extract_diffop(&self, x: &AlgebraElement, max_order: u32) -> Result<DiffOperator<5>, Error> {
        let mut cache = ActionCache::new();
        let mut coeffs: Vec<(Monomial<5>, XiPolynomial)> = Vec::new();
        for b in Monomial::<5>::all_up_to_degree(max_order) {
            let mut rest = self.fourier_act_with(&mut cache, x, &Poly::monomial(b));
            for (bp, c) in &coeffs {
                let ff = b.falling_factorial(bp);
                if ff == 0 {
                    continue;
                }
                let q = b.checked_div(bp).expect("divides");
                rest = &rest - &c.mul_monomial(&q).scale_rat(&Rational::from_integer(ff.into()));
            }
            let fact = Rational::from_integer(b.factorial().into());
            coeffs.push((b, rest.scale_rat(&fact.recip())));
        }
        let mut op = DiffOperator::zero();
        for (b, c) in &coeffs {
            for (m, k) in c.terms() {
                op.add_term(*m, *b, k.clone());
            }
        }
        for m in Monomial::<5>::all_up_to_degree(max_order + 5) {
            let p = Poly::monomial(m);
            if op.apply(&p) != self.fourier_act_with(&mut cache, x, &p) {
                return Err(Error::OrderTooLow(alloc::format!(
                    "order {max_order} does not reproduce the action on the monomial {p}"
                )));
            }
        }
        Ok(op)
    }

    /// `P(lam)`, the operator of `i(g'_1)`.
    pub fn p_operator(&self) -> Result<DiffOperator<5>, Error> {
        self.extract_diffop(&self.g2_root(1), 2)
    }

    /// Operators of `e = i(g'_2)`, `f = i(g'_-2)`, `h = h_2`, in that order.
    pub fn sl2_triple_ops(&self) -> Result<(DiffOperator<5>, DiffOperator<5>, DiffOperator<5>), Error> {
        Ok((
            self.extract_diffop(&self.g2_root(2), 1)?,
            self.extract_diffop(&self.g2_root(-2), 1)?,
            self.extract_diffop(&self.so7_cartan(2), 1)?,
        ))
    }
}

/// Common `gr`-degree of all terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrDegree {
    Homogeneous(i64),
    Mixed,
    /// The zero polynomial has every degree.
    Zero,
}

fn gr_of(m: &Monomial<5>) -> i64 {
    m.0.iter().zip(GR_WEIGHTS).map(|(&e, w)| i64::from(e) * w).sum()
}

pub fn gr_degree(p: &XiPolynomial) -> GrDegree {
    let mut degs = p.terms().map(|(m, _)| gr_of(m));
    match degs.next() {
        None => GrDegree::Zero,
        Some(d) if degs.all(|e| e == d) => GrDegree::Homogeneous(d),
        Some(_) => GrDegree::Mixed,
    }
}

/// `gr`-degree of an operator, with `gr(d_i) = -gr(xi_i)`.
pub fn op_gr_degree(d: &DiffOperator<5>) -> GrDegree {
    let mut degs = d.terms().map(|((a, b), _)| gr_of(a) - gr_of(b));
    match degs.next() {
        None => GrDegree::Zero,
        Some(x) if degs.all(|e| e == x) => GrDegree::Homogeneous(x),
        Some(_) => GrDegree::Mixed,
    }
}
