//! `sl(2)`-invariants, their Hilbert series, and the parametric search for
//! singular vectors among invariant polynomials.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::diffop::DiffOperator;
use crate::error::Error;
use crate::fmethod::Engine;
use crate::lie::{positive_combination, reflect, WeightBasis, WeightVec};
use crate::linalg::{kernel, param_solve, Matrix, ParamSolution, Subspace};
use crate::poly::{invariant_i1, Monomial, Poly, XiPolynomial};
use crate::scalar::{int, rat, ParamScalar, Rational};
use crate::verma::VermaVector;

/// Eigenvalue of `h` on `xi_i`.
pub const H_WEIGHTS: [i64; 5] = [1, 1, 0, -1, -1];

/// Invariants of one degree, certified two ways.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantBasis {
    pub degree: u32,
    /// `I1^k xi_3^(d-2k)` for `k = 0..=d/2`.
    pub basis: Vec<XiPolynomial>,
}

impl InvariantBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `I1^k xi_3^e`.
pub fn invariant_monomial(k: u32, e: u32) -> XiPolynomial {
    invariant_i1().pow(k).mul_monomial(&Monomial([0, 0, e, 0, 0]))
}

/// The products `I1^k xi_3^(d-2k)`, `k` ascending.
pub fn invariant_monomial_basis(d: u32) -> Vec<XiPolynomial> {
    (0..=d / 2).map(|k| invariant_monomial(k, d - 2 * k)).collect()
}

fn coefficient_vector(p: &XiPolynomial, columns: &BTreeMap<Monomial<5>, usize>) -> Result<Vec<Rational>, Error> {
    let mut v = vec![Rational::zero(); columns.len()];
    for (m, c) in p.terms() {
        let j = *columns
            .get(m)
            .ok_or_else(|| Error::Dimension(format!("monomial of degree {} outside the space", m.degree())))?;
        v[j] = c
            .as_constant()
            .ok_or_else(|| Error::Invalid("polynomial depends on lam".into()))?;
    }
    Ok(v)
}

/// Common kernel of `ops` on homogeneous polynomials of degree `d`.
pub fn joint_kernel(ops: &[DiffOperator<5>], d: u32) -> Result<Vec<XiPolynomial>, Error> {
    let columns = Monomial::<5>::all_of_degree(d);
    let mut rows: BTreeMap<(usize, Monomial<5>), Vec<Rational>> = BTreeMap::new();
    for (j, m) in columns.iter().enumerate() {
        for (k, op) in ops.iter().enumerate() {
            for (om, c) in op.apply(&Poly::monomial(*m)).terms() {
                let c = c
                    .as_constant()
                    .ok_or_else(|| Error::Invalid("operator depends on lam".into()))?;
                rows.entry((k, *om)).or_insert_with(|| vec![Rational::zero(); columns.len()])[j] = c;
            }
        }
    }
    let m: Matrix = rows.into_values().collect();
    Ok(kernel(&m, columns.len())
        .into_iter()
        .map(|v| {
            v.into_iter()
                .zip(&columns)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, m)| (*m, ParamScalar::constant(c)))
                .collect()
        })
        .collect())
}

/// Invariants of degree `d`: the kernel of `e_op` and `f_op`, checked against
/// the span of `I1^k xi_3^(d-2k)`.
pub fn invariants_of_degree(engine: &Engine, d: u32) -> Result<InvariantBasis, Error> {
    let (e, f, _) = engine.sl2_triple_ops()?;
    let ker = joint_kernel(&[e, f], d)?;
    let basis = invariant_monomial_basis(d);
    let columns: BTreeMap<Monomial<5>, usize> = Monomial::<5>::all_of_degree(d)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let dim = columns.len();
    let to_space = |ps: &[XiPolynomial]| -> Result<Subspace, Error> {
        let gens = ps
            .iter()
            .map(|p| coefficient_vector(p, &columns))
            .collect::<Result<_, _>>()?;
        Ok(Subspace::new(dim, gens))
    };
    let a = to_space(&ker)?;
    let b = to_space(&basis)?;
    if b.dim() != basis.len() || !a.same_as(&b) {
        return Err(Error::Verification(format!(
            "degree {d}: kernel has dimension {}, invariant products span {}",
            a.dim(),
            b.dim()
        )));
    }
    Ok(InvariantBasis { degree: d, basis })
}

/// Number of degree-`l` monomials with `h`-eigenvalue `t`.
fn weight_count(l: u32, t: i64) -> i64 {
    Monomial::<5>::all_of_degree(l)
        .iter()
        .filter(|m| m.0.iter().zip(H_WEIGHTS).map(|(&e, w)| i64::from(e) * w).sum::<i64>() == t)
        .count() as i64
}

/// Multiplicity of the irreducible `sl(2)`-module of highest weight `t` in the
/// degree-`l` polynomials, from the weight-space character.
pub fn hilbert_multiplicity(l: u32, t: u32) -> i64 {
    weight_count(l, i64::from(t)) - weight_count(l, i64::from(t) + 2)
}

/// Closed form of `b(l, t)` for `l >= t >= 0`; `None` outside that range.
pub fn hilbert_closed_form(l: u32, t: u32) -> Option<i64> {
    if t > l {
        return None;
    }
    let (l, t) = (int(i64::from(l)), int(i64::from(t)));
    let half = rat(1, 2);
    let base = -(&t * &t) * &half + &t * &l * &half + &l * &half;
    let even = ((&l + &t).to_integer() % 2u8) == 0u8.into();
    let b = if even { base + int(1) + &t * &half } else { base + half };
    if !b.is_integer() {
        return None;
    }
    i64::try_from(b.to_integer()).ok()
}

/// Coefficients of `(1 - x^-2) / ((1 - z x)^2 (1 - z/x)^2 (1 - z))` up to `z^max`,
/// keyed by `(power of z, power of x)`.
pub fn hilbert_series(max: u32) -> BTreeMap<(u32, i64), i64> {
    // prod of the three geometric factors, then times (1 - x^-2)
    let mut series: BTreeMap<(u32, i64), i64> = BTreeMap::new();
    for a in 0..=max {
        for b in 0..=max - a {
            for c in 0..=max - a - b {
                let coef = i64::from(a + 1) * i64::from(b + 1);
                let key = (a + b + c, i64::from(a) - i64::from(b));
                *series.entry(key).or_insert(0) += coef;
            }
        }
    }
    let mut out: BTreeMap<(u32, i64), i64> = BTreeMap::new();
    for (&(l, x), &c) in &series {
        *out.entry((l, x)).or_insert(0) += c;
        *out.entry((l, x - 2)).or_insert(0) -= c;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// One `(l, t)` cell of the comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertEntry {
    pub l: u32,
    pub t: u32,
    /// Weight-count multiplicity.
    pub b: i64,
    /// Coefficient of `z^l x^t`.
    pub series: i64,
    /// Minus the coefficient of `z^l x^(-t-2)`.
    pub series_partner: i64,
    pub closed_form: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertReport {
    pub max_degree: u32,
    pub entries: Vec<HilbertEntry>,
    /// `(l, t, reason)` for every disagreement.
    pub mismatches: Vec<(u32, u32, String)>,
}

impl HilbertReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn get(&self, l: u32, t: u32) -> Option<&HilbertEntry> {
        self.entries.iter().find(|e| e.l == l && e.t == t)
    }
}

/// Compares the series, the weight counts and the closed form for all
/// `0 <= t <= l + 1`, `l <= max`. The cell `t = l + 1` checks that nothing
/// appears above the diagonal.
pub fn hilbert_series_check(max: u32) -> HilbertReport {
    let series = hilbert_series(max);
    let mut entries = Vec::new();
    let mut mismatches = Vec::new();
    for l in 0..=max {
        for t in 0..=l + 1 {
            let ti = i64::from(t);
            let e = HilbertEntry {
                l,
                t,
                b: hilbert_multiplicity(l, t),
                series: series.get(&(l, ti)).copied().unwrap_or(0),
                series_partner: -series.get(&(l, -ti - 2)).copied().unwrap_or(0),
                closed_form: hilbert_closed_form(l, t),
            };
            let expected = e.closed_form.unwrap_or(0);
            if e.b != e.series || e.b != e.series_partner || e.b != expected {
                mismatches.push((
                    l,
                    t,
                    format!(
                        "weights {}, series {}, partner {}, closed form {}",
                        e.b, e.series, e.series_partner, expected
                    ),
                ));
            }
            entries.push(e);
        }
    }
    // nothing besides the paired terms
    for (&(l, x), &c) in &series {
        let paired = (x >= 0 && i64::from(l) + 1 >= x) || (x <= -2 && -x - 2 <= i64::from(l) + 1);
        if !paired {
            mismatches.push((l, 0, format!("unpaired term {c} at x^{x}")));
        }
    }
    HilbertReport {
        max_degree: max,
        entries,
        mismatches,
    }
}

/// Which family of invariant products an ansatz uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// `I1^k xi_3^(2(N-k))`, degree `2N`.
    Even,
    /// `I1^k xi_3^(2(N-k)+1)`, degree `2N+1`.
    Odd,
}

/// The ansatz products for half-degree `n`, `k = 0..=n`.
pub fn ansatz_basis(parity: Parity, n: u32) -> Vec<XiPolynomial> {
    let extra = u32::from(parity == Parity::Odd);
    (0..=n).map(|k| invariant_monomial(k, 2 * (n - k) + extra)).collect()
}

/// `sum_k coeffs[k] * basis[k]`.
pub fn ansatz_polynomial(parity: Parity, n: u32, coeffs: &[Rational]) -> XiPolynomial {
    let mut out = Poly::zero();
    for (p, c) in ansatz_basis(parity, n).iter().zip(coeffs) {
        out = &out + &p.scale_rat(c);
    }
    out
}

/// The linear system `P(lam) (sum_k A_k basis_k) = 0` in the unknowns `A_k`.
#[derive(Clone, Debug)]
pub struct InvariantSystem {
    pub parity: Parity,
    pub n: u32,
    /// Output monomial of each row.
    pub row_monomials: Vec<Monomial<5>>,
    pub rows: Vec<Vec<ParamScalar>>,
}

impl InvariantSystem {
    pub fn ncols(&self) -> usize {
        self.n as usize + 1
    }

    pub fn solve(&self) -> Result<ParamSolution, Error> {
        param_solve(&self.rows, self.ncols())
    }
}

/// Builds the system by applying `P(lam)` to each ansatz product and
/// collecting coefficients of every output monomial.
pub fn invariant_system(engine: &Engine, parity: Parity, n: u32) -> Result<InvariantSystem, Error> {
    let p = engine.p_operator()?;
    let images: Vec<XiPolynomial> = ansatz_basis(parity, n).iter().map(|b| p.apply(b)).collect();
    let mut rows: BTreeMap<Monomial<5>, Vec<ParamScalar>> = BTreeMap::new();
    for (k, img) in images.iter().enumerate() {
        for (m, c) in img.terms() {
            rows.entry(*m).or_insert_with(|| vec![ParamScalar::zero(); images.len()])[k] = c.clone();
        }
    }
    Ok(InvariantSystem {
        parity,
        n,
        row_monomials: rows.keys().copied().collect(),
        rows: rows.into_values().collect(),
    })
}

/// Verification outcomes recorded in a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateChecks {
    /// Killed by the Levi `sl(2)` and the whole nilradical of `p'(1,0)`.
    pub p_prime_singular: bool,
    /// Killed by `g_1, g_2, g_3`.
    pub so7_singular: bool,
    /// `eps_1`-coordinate of the weight; the other coordinates vanish.
    pub weight_eps1: Rational,
    pub nonstandard_so7: bool,
    pub nonstandard_g2: bool,
}

/// A singular vector of homogeneity `2N` with its verification record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularCertificate {
    pub n: u32,
    pub lambda: Rational,
    /// `A_0..A_N` with `A_0 = 1`.
    pub coefficients: Vec<Rational>,
    pub xi_polynomial: XiPolynomial,
    pub verma_vector: VermaVector,
    pub checks: CertificateChecks,
}

impl SingularCertificate {
    /// All recorded checks passed.
    pub fn all_checks_pass(&self) -> bool {
        let c = &self.checks;
        c.p_prime_singular
            && c.so7_singular
            && c.weight_eps1 == -&self.lambda - int(5)
            && c.nonstandard_so7
            && c.nonstandard_g2
    }
}

fn annihilated(engine: &Engine, xs: &[crate::lie::AlgebraElement], v: &VermaVector, lambda: &Rational) -> bool {
    let mut cache = crate::verma::ActionCache::new();
    xs.iter()
        .all(|x| engine.verma().act_with(&mut cache, x, v).eval_lam(lambda).is_zero())
}

/// `true` iff `g_1, g_2, g_3` kill the certificate's vector at its `lam`.
pub fn verify_so7_singular(engine: &Engine, cert: &SingularCertificate) -> bool {
    annihilated(engine, &engine.so7_annihilators(), &cert.verma_vector, &cert.lambda)
}

/// `true` iff the vector is killed by the Levi `sl(2)` and nilradical of `p'(1,0)`.
pub fn verify_p_prime_singular(engine: &Engine, v: &VermaVector, lambda: &Rational) -> bool {
    annihilated(engine, &engine.p_prime_full_annihilators(), v, lambda)
}

/// The even-homogeneity solution for half-degree `n >= 1`, if any.
///
/// A certificate is produced iff exactly one rational `lam` admits a
/// nontrivial solution and its solution space is one-dimensional.
pub fn solve_even(engine: &Engine, n: u32) -> Result<Option<SingularCertificate>, Error> {
    if n == 0 {
        return Err(Error::Invalid("half-degree must be at least 1".into()));
    }
    let system = invariant_system(engine, Parity::Even, n)?;
    let sol = match system.solve() {
        Ok(s) => s,
        Err(Error::IdenticallySingular) => return Ok(None),
        Err(e) => return Err(e),
    };
    let [(lambda, ker)] = sol.solutions.as_slice() else {
        return Ok(None);
    };
    let [a] = ker.as_slice() else {
        return Ok(None);
    };
    let pivot = a
        .iter()
        .find(|c| !c.is_zero())
        .ok_or_else(|| Error::Verification("zero kernel vector".into()))?;
    let coefficients: Vec<Rational> = a.iter().map(|c| c / pivot).collect();
    let xi_polynomial = ansatz_polynomial(Parity::Even, n, &coefficients);
    let verma_vector = engine.coords().to_verma(&xi_polynomial);
    let weight = engine.verma().weight_of(&verma_vector)?.eval_lam(lambda);
    if weight.coords()[1..].iter().any(|c| !c.is_zero()) {
        return Err(Error::Verification(format!("weight {weight} is not a multiple of eps1")));
    }
    let verdict = nonstandard_verdict(lambda)?;
    let mut cert = SingularCertificate {
        n,
        lambda: lambda.clone(),
        coefficients,
        xi_polynomial,
        verma_vector,
        checks: CertificateChecks {
            p_prime_singular: false,
            so7_singular: false,
            weight_eps1: weight.coords()[0].clone(),
            nonstandard_so7: verdict.so7_verdict == Verdict::NonStandard,
            nonstandard_g2: verdict.g2_verdict == Verdict::NonStandard,
        },
    };
    cert.checks.p_prime_singular = verify_p_prime_singular(engine, &cert.verma_vector, lambda);
    cert.checks.so7_singular = verify_so7_singular(engine, &cert);
    Ok(Some(cert))
}

/// Outcome of the odd-homogeneity search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddReport {
    pub n: u32,
    /// The system has a nonzero solution for every `lam`.
    pub identically_singular: bool,
    /// Rational `lam` with nonzero solutions, and their dimensions.
    pub solutions: Vec<(Rational, usize)>,
    /// Irreducible factor of the tested minor without rational roots.
    pub unresolved: Option<ParamScalar>,
    /// A second minor coprime to `unresolved`, when one was needed.
    pub coprime_minor: bool,
}

impl OddReport {
    /// No nonzero solution exists for any `lam`, rational or not.
    pub fn is_empty(&self) -> bool {
        !self.identically_singular && self.solutions.is_empty() && (self.unresolved.is_none() || self.coprime_minor)
    }
}

/// Searches for singular vectors of homogeneity `2n+1` among invariants.
pub fn solve_odd(engine: &Engine, n: u32) -> Result<OddReport, Error> {
    let system = invariant_system(engine, Parity::Odd, n)?;
    let mut report = OddReport {
        n,
        identically_singular: false,
        solutions: Vec::new(),
        unresolved: None,
        coprime_minor: false,
    };
    match system.solve() {
        Ok(sol) => {
            report.solutions = sol.solutions.iter().map(|(l, k)| (l.clone(), k.len())).collect();
            if let Some(u) = sol.unresolved {
                // irrational roots are excluded if some other maximal minor avoids them
                let reversed: Vec<Vec<ParamScalar>> = system.rows.iter().rev().cloned().collect();
                if let Ok(other) = param_solve(&reversed, system.ncols()) {
                    report.coprime_minor = other.unresolved.as_ref().map_or(true, |v| u.gcd(v).is_constant());
                }
                report.unresolved = Some(u);
            }
        }
        Err(Error::IdenticallySingular) => report.identically_singular = true,
        Err(e) => return Err(e),
    }
    Ok(report)
}

/// Classification of one homomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The difference is a nonnegative integer combination of positive roots.
    NonStandard,
    /// In range, but no positive-root witness.
    NoWitness,
    /// `lam + 5/2` is not a positive integer.
    OutOfRegime,
}

/// Non-standardness data at one `lam`.
#[derive(Clone, Debug, PartialEq)]
pub struct NonstandardVerdict {
    pub lambda: Rational,
    pub in_regime: bool,
    /// In the `eps` basis.
    pub so7_difference: WeightVec,
    /// Multiplicities of the positive `so(7)` roots in label order.
    pub so7_witness: Option<Vec<u64>>,
    /// `s_alpha1` version, in the `alpha` basis.
    pub g2_difference: WeightVec,
    pub g2_witness: Option<Vec<u64>>,
    /// `s_alpha2` version, in the `alpha` basis.
    pub g2_difference_alt: WeightVec,
    pub g2_witness_alt: Option<Vec<u64>>,
    pub so7_verdict: Verdict,
    pub g2_verdict: Verdict,
}

fn lam_eps1() -> WeightVec<ParamScalar> {
    WeightVec::new(WeightBasis::Eps, vec![ParamScalar::lam(), ParamScalar::zero(), ParamScalar::zero()])
}

fn dual_eps1() -> WeightVec<ParamScalar> {
    let c = ParamScalar::linear(int(-5), int(-1));
    WeightVec::new(WeightBasis::Eps, vec![c, ParamScalar::zero(), ParamScalar::zero()])
}

/// `s_eps3(lam eps1 + rho_l) - ((-lam - 5) eps1 + rho_l)`, `rho_l = 3/2 eps2 + 1/2 eps3`.
pub fn so7_difference() -> Result<WeightVec<ParamScalar>, Error> {
    let rho = WeightVec::parse("3/2*eps2 + 1/2*eps3")?.to_param();
    let root = WeightVec::parse("eps3")?;
    let top = reflect(&lam_eps1().add(&rho)?, &root)?;
    top.sub(&dual_eps1().add(&rho)?)
}

/// `s_alpha_i(lam psi1 + rho_l') - ((-lam - 5) psi1 + rho_l')`, `rho_l' = 1/2 alpha2`,
/// in the `alpha` basis; `simple` is 1 or 2.
pub fn g2_difference(simple: usize) -> Result<WeightVec<ParamScalar>, Error> {
    let root = match simple {
        1 => WeightVec::parse("alpha1")?,
        2 => WeightVec::parse("alpha2")?,
        _ => return Err(Error::Invalid(format!("G2 has no simple root {simple}"))),
    };
    let rho = WeightVec::parse("1/2*alpha2")?.to_param();
    let psi1 = WeightVec::parse("psi1")?.to(WeightBasis::Alpha)?.to_param();
    let top = reflect(&psi1.mul_scalar(&ParamScalar::lam()).add(&rho)?, &root)?;
    let dual = psi1.mul_scalar(&ParamScalar::linear(int(-5), int(-1)));
    top.sub(&dual.add(&rho)?)
}

fn positive_roots(basis: WeightBasis, roots: &[Vec<i64>]) -> Vec<WeightVec> {
    roots
        .iter()
        .map(|r| WeightVec::new(basis, r.iter().map(|&x| int(x)).collect()))
        .collect()
}

/// Evaluates the differences at `lambda0` and searches for positive-root witnesses.
pub fn nonstandard_verdict(lambda0: &Rational) -> Result<NonstandardVerdict, Error> {
    let shifted = lambda0 + rat(5, 2);
    let in_regime = shifted.is_integer() && shifted > Rational::zero();
    let so7_roots = positive_roots(WeightBasis::Eta, crate::lie::so_odd_root_data(3).positive_roots());
    let g2_roots = positive_roots(WeightBasis::Alpha, crate::lie::build_g2_root_data().positive_roots());
    let so7_diff = so7_difference()?.eval_lam(lambda0);
    let g2_diff = g2_difference(1)?.eval_lam(lambda0);
    let g2_diff_alt = g2_difference(2)?.eval_lam(lambda0);
    let so7_witness = positive_combination(&so7_diff, &so7_roots);
    let g2_witness = positive_combination(&g2_diff, &g2_roots);
    let g2_witness_alt = positive_combination(&g2_diff_alt, &g2_roots);
    let verdict = |w: bool| match (in_regime, w) {
        (false, _) => Verdict::OutOfRegime,
        (true, true) => Verdict::NonStandard,
        (true, false) => Verdict::NoWitness,
    };
    Ok(NonstandardVerdict {
        lambda: lambda0.clone(),
        in_regime,
        so7_verdict: verdict(so7_witness.is_some()),
        g2_verdict: verdict(g2_witness.is_some() || g2_witness_alt.is_some()),
        so7_difference: so7_diff,
        so7_witness,
        g2_difference: g2_diff,
        g2_witness,
        g2_difference_alt: g2_diff_alt,
        g2_witness_alt,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        assert_eq!(hilbert_closed_form(2, 2), Some(3));
        assert_eq!(hilbert_closed_form(3, 1), Some(4));
        assert_eq!(hilbert_closed_form(4, 0), Some(3));
        assert_eq!(hilbert_closed_form(5, 0), Some(3));
        assert_eq!(hilbert_closed_form(1, 2), None);
    }

    #[test]
    fn weight_counts() {
        assert_eq!(hilbert_multiplicity(2, 0), 2);
        assert_eq!(hilbert_multiplicity(2, 2), 3);
        assert_eq!(hilbert_multiplicity(3, 1), 4);
        assert_eq!(hilbert_multiplicity(2, 3), 0);
    }

    #[test]
    fn series_matches_small() {
        assert!(hilbert_series_check(6).is_ok());
    }

    #[test]
    fn ansatz_degrees() {
        let b = ansatz_basis(Parity::Odd, 2);
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|p| p.degree() == Some(5) && p.is_homogeneous()));
        assert_eq!(invariant_monomial_basis(5).len(), 3);
    }

    #[test]
    fn symbolic_differences() {
        let so7 = so7_difference().unwrap();
        assert_eq!(so7.basis(), WeightBasis::Eps);
        assert_eq!(so7.coords()[0], ParamScalar::linear(int(5), int(2)));
        assert!(so7.coords()[1].is_zero());
        assert_eq!(so7.coords()[2], ParamScalar::from_int(-1));
        let g = g2_difference(1).unwrap();
        assert_eq!(g.coords(), &[ParamScalar::linear(rat(23, 2), int(3)), ParamScalar::linear(int(5), int(2))]);
        let g = g2_difference(2).unwrap();
        assert_eq!(g.coords(), &[ParamScalar::linear(int(10), int(4)), ParamScalar::linear(int(4), int(2))]);
        assert!(g2_difference(3).is_err());
    }

    #[test]
    fn regime() {
        assert!(nonstandard_verdict(&rat(-3, 2)).unwrap().in_regime);
        let v = nonstandard_verdict(&int(-3)).unwrap();
        assert_eq!(v.so7_verdict, Verdict::OutOfRegime);
        assert!(!nonstandard_verdict(&rat(-5, 2)).unwrap().in_regime);
    }
}
