//! Argument model and command dispatch.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fmethod_core::embedding::{
    inclusion_lattice, inject_weight, intersect_parabolic, parabolic, project_weight, AlgebraTag,
};
use fmethod_core::lie::{build_so_odd, AlgebraElement, WeightBasis, WeightVec};
use fmethod_core::scalar::{fmt_rational, int, parse_rational, rat};
use fmethod_core::solver::{
    hilbert_series_check, invariants_of_degree, nonstandard_verdict, solve_even, solve_odd,
    SingularCertificate,
};
use fmethod_core::text::latex_poly;
use fmethod_core::{Engine, Error, Rational};
use serde::Serialize;

use crate::report::{
    CertificateJson, CrossCheck, EmbeddingReport, HilbertJson, LatticeReport, OddJson, OracleJson,
    ParabolicReport, ScanJson, ScanRow, StructureReport, VerdictJson, VerifyCheck, VerifyJson,
    WeightReport,
};

/// Covering arrows of the parabolic inclusion diagram, smaller to larger.
pub const DIAGRAM_ARROWS: [(&str, &str); 20] = [
    ("p(1,0,0)", "p(0,0,0)"),
    ("p(0,1,0)", "p(0,0,0)"),
    ("p(0,0,1)", "p(0,0,0)"),
    ("p'(0,0)", "p(0,0,0)"),
    ("p(1,1,0)", "p(1,0,0)"),
    ("p(1,1,0)", "p(0,1,0)"),
    ("p(1,0,1)", "p(1,0,0)"),
    ("p(1,0,1)", "p(0,0,1)"),
    ("p(0,1,1)", "p(0,1,0)"),
    ("p(0,1,1)", "p(0,0,1)"),
    ("p'(0,1)", "p'(0,0)"),
    ("p'(0,1)", "p(0,1,0)"),
    ("p(1,1,1)", "p(1,1,0)"),
    ("p(1,1,1)", "p(1,0,1)"),
    ("p(1,1,1)", "p(0,1,1)"),
    ("p'(1,0)", "p(1,0,1)"),
    ("p'(1,0)", "p'(0,0)"),
    ("p'(1,1)", "p'(1,0)"),
    ("p'(1,1)", "p(1,1,1)"),
    ("p'(1,1)", "p'(0,1)"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
    Dot,
}

/// Exact computations for singular vectors of the so(7) conformal generalized
/// Verma module restricted to G2.
#[derive(Debug, Parser)]
#[command(name = "fmethod", version)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structure table of so(2n+1), or of G2 inside so(7).
    Algebra {
        /// Rank n of so(2n+1).
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Show the image of G2 instead.
        #[arg(long)]
        g2: bool,
    },
    /// The G2 embedding, its parabolic lattice, and weight maps.
    Embedding {
        #[command(subcommand)]
        action: EmbeddingAction,
    },
    /// One parabolic subalgebra given by its crossed-out mask.
    Parabolic {
        /// Comma-separated 0/1 flags, e.g. 1,0,0.
        #[arg(long)]
        mask: String,
        /// Use the simple roots of G2 (two flags).
        #[arg(long)]
        g2: bool,
    },
    /// Multiplicities b(l,t) and the generating-function check.
    Hilbert {
        /// Largest polynomial degree l.
        #[arg(long)]
        max_degree: u32,
        /// Show only this highest weight.
        #[arg(long)]
        t: Option<u32>,
    },
    /// Singular vectors among invariant polynomials.
    Singular(SingularArgs),
    /// Brute-force singular vectors of one degree at a fixed lambda.
    Oracle {
        /// Polynomial degree of the candidate vectors.
        #[arg(long)]
        degree: u32,
        /// Exact rational, e.g. -3/2.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = AnnihilatorSet::PPrime)]
        annihilators: AnnihilatorSet,
    },
    /// Non-standardness of the homomorphism at lambda.
    Verdict {
        /// Exact rational, e.g. 1/2.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Runs every internal consistency check.
    Verify {
        /// Largest half-degree of the certificates to rebuild.
        #[arg(long, default_value_t = 3)]
        max_n: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum EmbeddingAction {
    /// Closure, homomorphism and lattice checks.
    Verify,
    /// Inclusion lattice of all so(7) and G2 parabolics.
    Lattice,
    /// so(7) weight to G2 weight.
    Project {
        /// Rational combination of eps1..eps3, e.g. 2*eps1 - 1/2*eps3.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// G2 weight to so(7) weight.
    Inject {
        /// Rational combination of alpha1, alpha2 or of psi1, psi2.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
}

#[derive(Debug, Args)]
pub struct SingularArgs {
    /// Polynomial degree of the singular vector.
    #[arg(long, conflicts_with = "scan", required_unless_present = "scan")]
    pub homogeneity: Option<u32>,
    /// Solve every degree from 1 to --max-degree.
    #[arg(long, requires = "max_degree")]
    pub scan: bool,
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Also print the operator of i(g'_1).
    #[arg(long)]
    pub show_operator: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AnnihilatorSet {
    /// Levi sl(2) and i(g'_1).
    PPrime,
    /// Levi sl(2) and the full nilradical of p'(1,0).
    PPrimeFull,
    /// g_1, g_2, g_3.
    So7,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 3,
            CliError::Core(_) => 2,
        }
    }
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    /// 0 success, 1 no result in this regime, 2 verification failure.
    pub code: u8,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self { output, code: 0 }
    }

    fn with(output: String, passed: bool, fail_code: u8) -> Self {
        Self {
            output,
            code: if passed { 0 } else { fail_code },
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn unsupported(format: Format, what: &str) -> CliError {
    CliError::Usage(format!("format {format:?} is not available for {what}").to_lowercase())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn parse_mask(s: &str) -> Result<Vec<u8>, CliError> {
    s.split(',')
        .map(|t| match t.trim() {
            "0" => Ok(0),
            "1" => Ok(1),
            other => Err(CliError::Usage(format!("mask entries must be 0 or 1, got {other:?}"))),
        })
        .collect()
}

fn parse_lambda(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Usage(format!("lambda: {e}")))
}

fn parse_weight(s: &str) -> Result<WeightVec, CliError> {
    WeightVec::parse(s).map_err(|e| CliError::Usage(format!("weight: {e}")))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Algebra { n, g2 } => cmd_algebra(f, *n, *g2),
        Command::Embedding { action } => cmd_embedding(f, action),
        Command::Parabolic { mask, g2 } => cmd_parabolic(f, &parse_mask(mask)?, *g2),
        Command::Hilbert { max_degree, t } => cmd_hilbert(f, *max_degree, *t),
        Command::Singular(args) => cmd_singular(f, args),
        Command::Oracle {
            degree,
            lambda,
            annihilators,
        } => cmd_oracle(f, *degree, &parse_lambda(lambda)?, *annihilators),
        Command::Verdict { lambda } => cmd_verdict(f, &parse_lambda(lambda)?),
        Command::Verify { max_n } => cmd_verify(f, *max_n),
    }
}

pub fn cmd_algebra(f: Format, n: usize, g2: bool) -> Result<Outcome, CliError> {
    if g2 && n != 3 {
        return Err(CliError::Usage("G2 is only available inside so(7)".into()));
    }
    let so = build_so_odd(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let report = if g2 {
        let e = Engine::new()?;
        StructureReport::from_table(e.g2().table())
    } else {
        StructureReport::from_table(so.table())
    };
    let passed = report.passed() && (g2 || so.check_form().is_ok());
    let out = match f {
        Format::Json => json(&report),
        Format::Text => {
            let mut s = format!(
                "{}: dim {}, rank {}, positive roots {}, Jacobi {}\n",
                report.algebra,
                report.dim,
                report.rank,
                report.positive_roots,
                if report.checks.jacobi { "OK" } else { "FAILED" }
            );
            for (k, r) in report.roots.iter().enumerate() {
                let coords: Vec<String> = r.iter().map(i64::to_string).collect();
                writeln!(s, "  root {}: ({})", k + 1, coords.join(", ")).unwrap();
            }
            writeln!(s, "brackets: {} nonzero, checksum {}", report.brackets.len(), report.checksum).unwrap();
            s
        }
        other => return Err(unsupported(other, "algebra")),
    };
    Ok(Outcome::with(out, passed, 2))
}

/// Lattice report plus the intersection check on every cross arrow.
pub fn lattice_report(e: &Engine) -> Result<LatticeReport, Error> {
    let l = inclusion_lattice(e.so7(), e.g2())?;
    let mut cross = Vec::new();
    for &(a, b) in &l.arrows {
        let (p, q) = (&l.nodes[a], &l.nodes[b]);
        if p.algebra == AlgebraTag::G2 && q.algebra == AlgebraTag::So7 {
            let i = intersect_parabolic(e.so7(), e.g2(), q)?;
            cross.push(CrossCheck {
                from: p.name(),
                to: q.name(),
                intersection: i.name(),
                holds: i.mask == p.mask,
            });
        }
    }
    let mut got = l.arrow_names();
    let mut want: Vec<(String, String)> = DIAGRAM_ARROWS.iter().map(|(a, b)| ((*a).into(), (*b).into())).collect();
    got.sort();
    want.sort();
    Ok(LatticeReport::new(&l, cross, got == want))
}

fn dot_lattice(r: &LatticeReport) -> String {
    let mut s = String::from("digraph parabolics {\n  rankdir=BT;\n");
    for n in &r.nodes {
        let shape = if n.algebra == "g2" { "box" } else { "ellipse" };
        writeln!(s, "  \"{}\" [shape={shape}];", n.name).unwrap();
    }
    for a in &r.arrows {
        writeln!(s, "  \"{}\" -> \"{}\";", a.from, a.to).unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn cmd_embedding(f: Format, action: &EmbeddingAction) -> Result<Outcome, CliError> {
    match action {
        EmbeddingAction::Verify => {
            let e = Engine::new()?;
            let lattice = lattice_report(&e)?;
            let report = EmbeddingReport {
                closure_dim: e.g2().closure_dim(),
                homomorphism: e.g2().check_homomorphism(e.so7()).is_ok(),
                lattice_arrows: lattice.arrows.len(),
                lattice_matches: lattice.matches_diagram,
                cross_arrows_hold: lattice.cross_checks.iter().all(|c| c.holds),
            };
            let out = match f {
                Format::Json => json(&report),
                Format::Text => format!(
                    "image dim {}, homomorphism {}, lattice {} arrows {}, cross arrows {}\n",
                    report.closure_dim,
                    if report.homomorphism { "OK" } else { "FAILED" },
                    report.lattice_arrows,
                    if report.lattice_matches { "match the diagram" } else { "DIFFER from the diagram" },
                    if report.cross_arrows_hold { "OK" } else { "FAILED" },
                ),
                other => return Err(unsupported(other, "embedding verify")),
            };
            Ok(Outcome::with(out, report.passed(), 2))
        }
        EmbeddingAction::Lattice => {
            let e = Engine::new()?;
            let r = lattice_report(&e)?;
            let passed = r.matches_diagram && r.cross_checks.iter().all(|c| c.holds);
            let out = match f {
                Format::Json => json(&r),
                Format::Dot => dot_lattice(&r),
                Format::Text => {
                    let mut s = String::new();
                    for a in &r.arrows {
                        writeln!(s, "{} -> {}", a.from, a.to).unwrap();
                    }
                    for c in &r.cross_checks {
                        writeln!(s, "{} = i^-1(i(G2) cap {}): {}", c.intersection, c.to, yes(c.holds)).unwrap();
                    }
                    writeln!(s, "{} arrows", r.arrows.len()).unwrap();
                    s
                }
                other => return Err(unsupported(other, "embedding lattice")),
            };
            Ok(Outcome::with(out, passed, 2))
        }
        EmbeddingAction::Project { weight } => {
            let w = parse_weight(weight)?;
            let out = project_weight(&w).map_err(|e| CliError::Usage(e.to_string()))?;
            weight_outcome(f, &w, &out, WeightBasis::Psi)
        }
        EmbeddingAction::Inject { weight } => {
            let w = parse_weight(weight)?;
            let out = inject_weight(&w).map_err(|e| CliError::Usage(e.to_string()))?;
            weight_outcome(f, &w, &out, WeightBasis::Omega)
        }
    }
}

fn weight_outcome(f: Format, input: &WeightVec, out: &WeightVec, fundamental: WeightBasis) -> Result<Outcome, CliError> {
    let r = WeightReport {
        input: input.to_string(),
        output: out.to_string(),
        output_fundamental: out.to(fundamental)?.to_string(),
    };
    Ok(Outcome::ok(match f {
        Format::Json => json(&r),
        Format::Text => format!("{}\n= {}\n", r.output_fundamental, r.output),
        other => return Err(unsupported(other, "weights")),
    }))
}

pub fn cmd_parabolic(f: Format, mask: &[u8], g2: bool) -> Result<Outcome, CliError> {
    let e = Engine::new()?;
    let (table, tag) = if g2 {
        (e.g2().table(), AlgebraTag::G2)
    } else {
        (e.so7().table(), AlgebraTag::So7)
    };
    let p = parabolic(table, tag, mask).map_err(|e| CliError::Usage(e.to_string()))?;
    let inter = if g2 {
        None
    } else {
        Some(intersect_parabolic(e.so7(), e.g2(), &p)?.name())
    };
    let r = ParabolicReport::new(&p, table, inter);
    let out = match f {
        Format::Json => json(&r),
        Format::Text => {
            let mut s = format!("{}: dim {}\n", r.name, r.levi.len() + r.nilradical.len());
            writeln!(s, "  levi: {}", r.levi.join(" ")).unwrap();
            writeln!(s, "  nilradical: {}", r.nilradical.join(" ")).unwrap();
            writeln!(s, "  opposite nilradical: {}", r.opposite.join(" ")).unwrap();
            writeln!(s, "  opposite nilradical commutative: {}", yes(r.opposite_commutative)).unwrap();
            if let Some(i) = &r.intersection {
                writeln!(s, "  i^-1(i(G2) cap p) = {i}").unwrap();
            }
            s
        }
        other => return Err(unsupported(other, "parabolic")),
    };
    Ok(Outcome::with(out, r.subalgebra, 2))
}

pub fn cmd_hilbert(f: Format, max: u32, only_t: Option<u32>) -> Result<Outcome, CliError> {
    let r = hilbert_series_check(max);
    let j = HilbertJson::new(&r, only_t);
    let out = match f {
        Format::Json => json(&j),
        Format::Text => {
            let mut s = String::new();
            for e in &j.entries {
                writeln!(s, "b({},{}) = {}", e.l, e.t, e.b).unwrap();
            }
            for m in &j.mismatches {
                writeln!(s, "mismatch at ({},{}): {}", m.l, m.t, m.reason).unwrap();
            }
            writeln!(s, "series vs closed form: {}", j.status).unwrap();
            s
        }
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{rrr}\n$l$ & $t$ & $b(l,t)$ \\\\\n\\hline\n");
            for e in &j.entries {
                writeln!(s, "{} & {} & {} \\\\", e.l, e.t, e.b).unwrap();
            }
            s.push_str("\\end{tabular}\n");
            s
        }
        other => return Err(unsupported(other, "hilbert")),
    };
    Ok(Outcome::with(out, r.is_ok(), 2))
}

fn certificate_text(c: &SingularCertificate) -> String {
    let coeffs: Vec<String> = c.coefficients.iter().map(fmt_rational).collect();
    let mut s = format!("homogeneity {} (N = {}): lambda = {}\n", 2 * c.n, c.n, fmt_rational(&c.lambda));
    writeln!(s, "  coefficients: {}", coeffs.join(", ")).unwrap();
    writeln!(s, "  xi polynomial: {}", c.xi_polynomial).unwrap();
    writeln!(s, "  verma vector: {}", c.verma_vector).unwrap();
    let k = &c.checks;
    writeln!(s, "  p'(1,0)-singular: {}", yes(k.p_prime_singular)).unwrap();
    writeln!(s, "  so(7)-singular: {}", yes(k.so7_singular)).unwrap();
    writeln!(s, "  weight: ({})*eps1", fmt_rational(&k.weight_eps1)).unwrap();
    writeln!(s, "  non-standard so(7): {}, G2: {}", yes(k.nonstandard_so7), yes(k.nonstandard_g2)).unwrap();
    s
}

fn certificate_latex(c: &SingularCertificate) -> String {
    format!(
        "% homogeneity {}, lambda = {}\n\\[\n{}\n\\]\n",
        2 * c.n,
        fmt_rational(&c.lambda),
        latex_poly(&c.xi_polynomial)
    )
}

/// One scan row: lambdas with a certificate in even degree, none in odd.
pub fn scan_row(e: &Engine, degree: u32) -> Result<ScanRow, Error> {
    if degree % 2 == 0 {
        let cert = solve_even(e, degree / 2)?;
        Ok(ScanRow {
            degree,
            lambdas: cert.iter().map(|c| fmt_rational(&c.lambda)).collect(),
            certificate: cert.as_ref().map(CertificateJson::from),
        })
    } else {
        let r = solve_odd(e, degree / 2)?;
        Ok(ScanRow {
            degree,
            lambdas: r.solutions.iter().map(|(l, _)| fmt_rational(l)).collect(),
            certificate: None,
        })
    }
}

pub fn cmd_singular(f: Format, args: &SingularArgs) -> Result<Outcome, CliError> {
    let e = Engine::new()?;
    let op_line = || -> Result<String, CliError> {
        Ok(if args.show_operator {
            format!("P(lam) = {}\n", e.p_operator()?)
        } else {
            String::new()
        })
    };
    if args.scan {
        let max = args.max_degree.expect("clap enforces max-degree");
        // rows are independent; results are joined in degree order
        let rows: Vec<Result<ScanRow, Error>> = std::thread::scope(|s| {
            let handles: Vec<_> = (1..=max).map(|d| s.spawn({
                let e = &e;
                move || scan_row(e, d)
            })).collect();
            handles.into_iter().map(|h| h.join().expect("scan worker")).collect()
        });
        let scan = ScanJson {
            max_degree: max,
            rows: rows.into_iter().collect::<Result<_, _>>()?,
        };
        let passed = scan
            .rows
            .iter()
            .all(|r| r.certificate.as_ref().is_none_or(certificate_json_passes));
        let out = match f {
            Format::Json => json(&scan),
            Format::Text => {
                let mut s = op_line()?;
                for r in &scan.rows {
                    let l = if r.lambdas.is_empty() { "none".into() } else { r.lambdas.join(", ") };
                    writeln!(s, "degree {}: lambda {}", r.degree, l).unwrap();
                }
                s
            }
            other => return Err(unsupported(other, "singular --scan")),
        };
        return Ok(Outcome::with(out, passed, 2));
    }
    let d = args.homogeneity.expect("clap enforces homogeneity");
    if d == 0 {
        return Err(CliError::Usage("homogeneity must be positive".into()));
    }
    if d % 2 == 1 {
        let r = solve_odd(&e, d / 2)?;
        let j = OddJson::from(&r);
        let out = match f {
            Format::Json => json(&j),
            Format::Text | Format::Latex => {
                let mut s = op_line()?;
                if j.found {
                    writeln!(s, "homogeneity {d}: unexpected solutions {:?}", j.solutions).unwrap();
                } else {
                    writeln!(s, "no singular vector of homogeneity {d} for any lambda").unwrap();
                }
                s
            }
            other => return Err(unsupported(other, "singular")),
        };
        // a nonempty odd answer contradicts the invariant analysis
        return Ok(Outcome {
            output: out,
            code: if j.found { 2 } else { 1 },
        });
    }
    let Some(c) = solve_even(&e, d / 2)? else {
        let out = match f {
            Format::Json => "null\n".into(),
            _ => format!("no singular vector of homogeneity {d}\n"),
        };
        return Ok(Outcome { output: out, code: 1 });
    };
    let out = match f {
        Format::Json => json(&CertificateJson::from(&c)),
        Format::Text => op_line()? + &certificate_text(&c),
        Format::Latex => certificate_latex(&c),
        other => return Err(unsupported(other, "singular")),
    };
    Ok(Outcome::with(out, c.all_checks_pass(), 2))
}

fn certificate_json_passes(c: &CertificateJson) -> bool {
    c.to_certificate().is_ok_and(|c| c.all_checks_pass())
}

fn annihilator_elements(e: &Engine, set: AnnihilatorSet) -> Vec<AlgebraElement> {
    match set {
        AnnihilatorSet::PPrime => e.p_prime_annihilators(),
        AnnihilatorSet::PPrimeFull => e.p_prime_full_annihilators(),
        AnnihilatorSet::So7 => e.so7_annihilators(),
    }
}

pub fn cmd_oracle(f: Format, degree: u32, lambda: &Rational, set: AnnihilatorSet) -> Result<Outcome, CliError> {
    let e = Engine::new()?;
    let found = e
        .verma()
        .oracle_singular_search(degree, lambda, &annihilator_elements(&e, set));
    let j = OracleJson {
        degree,
        lambda: fmt_rational(lambda),
        annihilators: set.to_possible_value().expect("named").get_name().into(),
        dimension: found.len(),
        vectors: found.iter().map(|v| v.to_string()).collect(),
    };
    let out = match f {
        Format::Json => json(&j),
        Format::Text => {
            let mut s = format!("degree {degree}, lambda {}: dimension {}\n", j.lambda, j.dimension);
            for v in &j.vectors {
                writeln!(s, "  {v}").unwrap();
            }
            s
        }
        other => return Err(unsupported(other, "oracle")),
    };
    Ok(Outcome::with(out, !found.is_empty(), 1))
}

pub fn cmd_verdict(f: Format, lambda: &Rational) -> Result<Outcome, CliError> {
    let v = nonstandard_verdict(lambda)?;
    let j = VerdictJson::from(&v);
    let out = match f {
        Format::Json => json(&j),
        Format::Text => format!(
            "lambda {}: so(7) difference {} ({}), G2 difference {} or {} ({})\n",
            j.lambda, j.so7_difference, j.so7_verdict, j.g2_difference, j.g2_difference_alt, j.g2_verdict
        ),
        other => return Err(unsupported(other, "verdict")),
    };
    Ok(Outcome::with(out, v.in_regime, 1))
}

/// The full self-check used by `verify`.
pub fn verify_report(max_n: u32) -> Result<VerifyJson, Error> {
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(VerifyCheck {
            name: name.into(),
            passed,
            detail,
        })
    };
    let e = Engine::new()?;
    let t = e.so7().table();
    push(
        "so7 structure",
        t.dim() == 21 && t.check_jacobi().is_ok() && t.check_root_grading().is_ok(),
        format!("dim {}, checksum {:016x}", t.dim(), t.checksum()),
    );
    push(
        "g2 closure",
        e.g2().closure_dim() == 14 && e.g2().check_homomorphism(e.so7()).is_ok(),
        format!("dim {}", e.g2().closure_dim()),
    );
    let l = lattice_report(&e)?;
    push(
        "parabolic lattice",
        l.matches_diagram && l.cross_checks.iter().all(|c| c.holds),
        format!("{} arrows", l.arrows.len()),
    );
    let p = e.p_operator()?;
    push("operator of i(g'_1)", p.len() == 9 && p.order() == 2, p.to_string());
    for d in 0..=4 {
        let r = invariants_of_degree(&e, d);
        push(
            "sl(2) invariants",
            r.as_ref().is_ok_and(|b| b.dim() == 1 + d as usize / 2),
            format!("degree {d}"),
        );
    }
    let h = hilbert_series_check(8);
    push("hilbert series", h.is_ok(), format!("{} mismatches", h.mismatches.len()));
    for n in 1..=max_n {
        let c = solve_even(&e, n)?;
        let ok = c
            .as_ref()
            .is_some_and(|c| c.lambda == int(i64::from(n)) - rat(5, 2) && c.all_checks_pass());
        push("even certificate", ok, format!("N = {n}"));
    }
    for n in 0..max_n {
        push("odd emptiness", solve_odd(&e, n)?.is_empty(), format!("N = {n}"));
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyJson { passed, checks })
}

pub fn cmd_verify(f: Format, max_n: u32) -> Result<Outcome, CliError> {
    let r = verify_report(max_n)?;
    let out = match f {
        Format::Json => json(&r),
        Format::Text => {
            let mut s = String::new();
            for c in &r.checks {
                writeln!(s, "[{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail).unwrap();
            }
            s
        }
        other => return Err(unsupported(other, "verify")),
    };
    Ok(Outcome::with(out, r.passed, 2))
}
