//! Serializable reports. Every rational crosses this boundary as a `"p/q"` string.

use fmethod_core::embedding::{InclusionLattice, ParabolicSelection};
use fmethod_core::lie::StructureTable;
use fmethod_core::scalar::{fmt_rational, parse_rational};
use fmethod_core::solver::{
    CertificateChecks, HilbertReport, NonstandardVerdict, OddReport, SingularCertificate, Verdict,
};
use fmethod_core::text::parse_poly;
use fmethod_core::{Error, Rational, VermaVector};
use serde::{Deserialize, Serialize};

fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketTerm {
    pub basis: String,
    pub coeff: String,
}

/// `[left, right] = sum coeff * basis`, for `left` before `right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub result: Vec<BracketTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureChecks {
    pub jacobi: bool,
    pub root_grading: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub algebra: String,
    pub dim: usize,
    pub rank: usize,
    pub positive_roots: usize,
    pub labels: Vec<String>,
    /// Positive roots in simple-root coordinates, by label.
    pub roots: Vec<Vec<i64>>,
    pub gram: Vec<Vec<String>>,
    pub brackets: Vec<BracketEntry>,
    /// FNV-1a digest of the bracket table, hexadecimal.
    pub checksum: String,
    pub checks: StructureChecks,
}

impl StructureReport {
    pub fn from_table(t: &StructureTable) -> Self {
        let roots = (1..=t.positive_root_count() as i64)
            .map(|l| t.root(t.index_of_root(l).expect("positive label")).to_vec())
            .collect();
        let brackets = t
            .bracket_entries()
            .map(|(i, j, c)| BracketEntry {
                left: t.label(i).to_string(),
                right: t.label(j).to_string(),
                result: c
                    .iter()
                    .map(|(k, x)| BracketTerm {
                        basis: t.label(*k).to_string(),
                        coeff: fmt_rational(x),
                    })
                    .collect(),
            })
            .collect();
        Self {
            algebra: t.name().to_string(),
            dim: t.dim(),
            rank: t.rank(),
            positive_roots: t.positive_root_count(),
            labels: t.labels().to_vec(),
            roots,
            gram: t.gram().iter().map(|r| rats(r)).collect(),
            brackets,
            checksum: format!("{:016x}", t.checksum()),
            checks: StructureChecks {
                jacobi: t.check_jacobi().is_ok(),
                root_grading: t.check_root_grading().is_ok(),
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.jacobi && self.checks.root_grading
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeNode {
    pub name: String,
    pub algebra: String,
    pub mask: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeArrow {
    pub from: String,
    pub to: String,
}

/// For an arrow from `G2` into `so(7)`: the parabolic cut out by the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub from: String,
    pub to: String,
    pub intersection: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub nodes: Vec<LatticeNode>,
    pub arrows: Vec<LatticeArrow>,
    pub cross_checks: Vec<CrossCheck>,
    pub matches_diagram: bool,
}

fn algebra_name(p: &ParabolicSelection) -> &'static str {
    match p.algebra {
        fmethod_core::embedding::AlgebraTag::So7 => "so7",
        fmethod_core::embedding::AlgebraTag::G2 => "g2",
    }
}

impl LatticeReport {
    pub fn new(l: &InclusionLattice, cross_checks: Vec<CrossCheck>, matches_diagram: bool) -> Self {
        Self {
            nodes: l
                .nodes
                .iter()
                .map(|p| LatticeNode {
                    name: p.name(),
                    algebra: algebra_name(p).into(),
                    mask: p.mask.clone(),
                })
                .collect(),
            arrows: l
                .arrow_names()
                .into_iter()
                .map(|(from, to)| LatticeArrow { from, to })
                .collect(),
            cross_checks,
            matches_diagram,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub closure_dim: usize,
    pub homomorphism: bool,
    pub lattice_arrows: usize,
    pub lattice_matches: bool,
    pub cross_arrows_hold: bool,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.closure_dim == 14 && self.homomorphism && self.lattice_matches && self.cross_arrows_hold
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicReport {
    pub name: String,
    pub algebra: String,
    pub mask: Vec<u8>,
    pub levi: Vec<String>,
    pub nilradical: Vec<String>,
    pub opposite: Vec<String>,
    pub subalgebra: bool,
    pub opposite_commutative: bool,
    /// `i^-1(i(G2) cap p)` for `so(7)` parabolics.
    pub intersection: Option<String>,
}

impl ParabolicReport {
    pub fn new(p: &ParabolicSelection, t: &StructureTable, intersection: Option<String>) -> Self {
        let names = |v: &[usize]| v.iter().map(|&i| t.label(i).to_string()).collect();
        Self {
            name: p.name(),
            algebra: algebra_name(p).into(),
            mask: p.mask.clone(),
            levi: names(&p.levi),
            nilradical: names(&p.nilradical),
            opposite: names(&p.opposite),
            subalgebra: p.is_subalgebra(t),
            opposite_commutative: p.opposite_is_commutative(t),
            intersection,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub input: String,
    pub output: String,
    /// The output in the fundamental-weight basis of the target.
    pub output_fundamental: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertEntryJson {
    pub l: u32,
    pub t: u32,
    pub b: i64,
    pub series: i64,
    pub series_partner: i64,
    pub closed_form: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertMismatch {
    pub l: u32,
    pub t: u32,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertJson {
    pub max_degree: u32,
    pub status: String,
    pub entries: Vec<HilbertEntryJson>,
    pub mismatches: Vec<HilbertMismatch>,
}

impl HilbertJson {
    /// Keeps entries with `t == only_t` when given.
    pub fn new(r: &HilbertReport, only_t: Option<u32>) -> Self {
        Self {
            max_degree: r.max_degree,
            status: if r.is_ok() { "MATCH" } else { "MISMATCH" }.into(),
            entries: r
                .entries
                .iter()
                .filter(|e| only_t.map_or(e.t <= e.l, |t| e.t == t))
                .map(|e| HilbertEntryJson {
                    l: e.l,
                    t: e.t,
                    b: e.b,
                    series: e.series,
                    series_partner: e.series_partner,
                    closed_form: e.closed_form,
                })
                .collect(),
            mismatches: r
                .mismatches
                .iter()
                .map(|(l, t, reason)| HilbertMismatch {
                    l: *l,
                    t: *t,
                    reason: reason.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksJson {
    pub p_prime_singular: bool,
    pub so7_singular: bool,
    pub weight_eps1: String,
    pub nonstandard_so7: bool,
    pub nonstandard_g2: bool,
}

/// Wire form of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    #[serde(rename = "N")]
    pub n: u32,
    pub lambda: String,
    pub coefficients: Vec<String>,
    pub xi_polynomial: String,
    pub verma_vector: String,
    pub checks: ChecksJson,
}

impl From<&SingularCertificate> for CertificateJson {
    fn from(c: &SingularCertificate) -> Self {
        Self {
            n: c.n,
            lambda: fmt_rational(&c.lambda),
            coefficients: rats(&c.coefficients),
            xi_polynomial: c.xi_polynomial.to_string(),
            verma_vector: c.verma_vector.to_string(),
            checks: ChecksJson {
                p_prime_singular: c.checks.p_prime_singular,
                so7_singular: c.checks.so7_singular,
                weight_eps1: fmt_rational(&c.checks.weight_eps1),
                nonstandard_so7: c.checks.nonstandard_so7,
                nonstandard_g2: c.checks.nonstandard_g2,
            },
        }
    }
}

impl CertificateJson {
    /// Parses every field back into exact values.
    pub fn to_certificate(&self) -> Result<SingularCertificate, Error> {
        Ok(SingularCertificate {
            n: self.n,
            lambda: parse_rational(&self.lambda)?,
            coefficients: self
                .coefficients
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<_, _>>()?,
            xi_polynomial: parse_poly(&self.xi_polynomial)?,
            verma_vector: VermaVector::parse(&self.verma_vector)?,
            checks: CertificateChecks {
                p_prime_singular: self.checks.p_prime_singular,
                so7_singular: self.checks.so7_singular,
                weight_eps1: parse_rational(&self.checks.weight_eps1)?,
                nonstandard_so7: self.checks.nonstandard_so7,
                nonstandard_g2: self.checks.nonstandard_g2,
            },
        })
    }
}

/// Result of an odd-homogeneity search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddJson {
    pub homogeneity: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub found: bool,
    pub identically_singular: bool,
    pub solutions: Vec<String>,
    pub unresolved: Option<String>,
}

impl From<&OddReport> for OddJson {
    fn from(r: &OddReport) -> Self {
        Self {
            homogeneity: 2 * r.n + 1,
            n: r.n,
            found: !r.is_empty(),
            identically_singular: r.identically_singular,
            solutions: r.solutions.iter().map(|(l, _)| fmt_rational(l)).collect(),
            unresolved: r.unresolved.as_ref().map(|u| u.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub degree: u32,
    pub lambdas: Vec<String>,
    pub certificate: Option<CertificateJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanJson {
    pub max_degree: u32,
    pub rows: Vec<ScanRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    pub degree: u32,
    pub lambda: String,
    pub annihilators: String,
    pub dimension: usize,
    pub vectors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub lambda: String,
    pub in_regime: bool,
    pub so7_difference: String,
    pub so7_witness: Option<Vec<u64>>,
    pub g2_difference: String,
    pub g2_witness: Option<Vec<u64>>,
    pub g2_difference_alt: String,
    pub g2_witness_alt: Option<Vec<u64>>,
    pub so7_verdict: String,
    pub g2_verdict: String,
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::NonStandard => "non-standard",
        Verdict::NoWitness => "no witness",
        Verdict::OutOfRegime => "out of regime",
    }
}

impl From<&NonstandardVerdict> for VerdictJson {
    fn from(v: &NonstandardVerdict) -> Self {
        Self {
            lambda: fmt_rational(&v.lambda),
            in_regime: v.in_regime,
            so7_difference: v.so7_difference.to_string(),
            so7_witness: v.so7_witness.clone(),
            g2_difference: v.g2_difference.to_string(),
            g2_witness: v.g2_witness.clone(),
            g2_difference_alt: v.g2_difference_alt.to_string(),
            g2_witness_alt: v.g2_witness_alt.clone(),
            so7_verdict: verdict_name(v.so7_verdict).into(),
            g2_verdict: verdict_name(v.g2_verdict).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub passed: bool,
    pub checks: Vec<VerifyCheck>,
}
