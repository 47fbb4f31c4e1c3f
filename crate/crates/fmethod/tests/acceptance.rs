//! Acceptance criteria. Each criterion prints one line:
//! `criterion N: PASS|FAIL  <title>  runtime Xs (budget Ys)  tolerance exact`
//! followed by the failing sub-checks, if any.
//!
//! The process exits nonzero iff a criterion fails for a reason not listed in
//! `KNOWN_UNATTAINABLE`. Listed sub-checks are still evaluated and still
//! reported as FAIL; if one of them ever passes, the run fails so the list
//! gets updated.

use std::time::{Duration, Instant};

use fmethod::cli::{lattice_report, DIAGRAM_ARROWS};
use fmethod::report::{CertificateJson, HilbertJson, StructureReport};
use fmethod_core::diffop::DiffOperator;
use fmethod_core::embedding::{intersect_parabolic, parabolic, project_weight, AlgebraTag};
use fmethod_core::lie::{WeightBasis, WeightVec};
use fmethod_core::poly::invariant_i1;
use fmethod_core::scalar::{fmt_rational, int, parse_rational, rat};
use fmethod_core::solver::{
    g2_difference, hilbert_series_check, nonstandard_verdict, so7_difference, solve_even, solve_odd,
    verify_so7_singular, Verdict,
};
use fmethod_core::text::{parse_diffop, parse_poly};
use fmethod_core::{AlgebraElement, Engine, Monomial, ParamScalar, Rational, VermaVector, XiPolynomial};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SEED: u64 = 0x00f0_7e5e_ed00_0007;

/// `(criterion, sub-check)` pairs that cannot hold; see the notes next to each.
const KNOWN_UNATTAINABLE: [(u32, &str); 1] = [
    // The printed G2 difference (4lam+16)alpha1 + (2lam+6)alpha2 is not
    // s_alpha(lam psi1 + rho) - ((-lam-5) psi1 + rho) for either simple
    // reflection: s_alpha1 gives (3lam+23/2)alpha1 + (2lam+5)alpha2 and
    // s_alpha2 gives (4lam+10)alpha1 + (2lam+4)alpha2.
    (7, "G2 difference equals (4lam+16)alpha1 + (2lam+6)alpha2"),
];

struct Checks {
    failed: Vec<String>,
}

impl Checks {
    fn new() -> Self {
        Self { failed: Vec::new() }
    }

    fn check(&mut self, name: &str, ok: bool) {
        if !ok {
            self.failed.push(name.to_string());
        }
    }
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn(&Engine, &mut Checks),
}

fn main() {
    let engine = Engine::new().expect("engine builds");
    let criteria = [
        Criterion { id: 1, title: "structure suite", budget: Duration::from_secs(5), run: c1_structure },
        Criterion { id: 2, title: "lattice suite", budget: Duration::from_secs(5), run: c2_lattice },
        Criterion { id: 3, title: "operator regression", budget: Duration::from_secs(10), run: c3_operator },
        Criterion { id: 4, title: "Hilbert suite", budget: Duration::from_secs(30), run: c4_hilbert },
        Criterion { id: 5, title: "singular vector solutions", budget: Duration::from_secs(60), run: c5_singular },
        Criterion { id: 6, title: "oracle equivalence", budget: Duration::from_secs(120), run: c6_oracle },
        Criterion { id: 7, title: "weights and homomorphisms", budget: Duration::from_secs(5), run: c7_weights },
        Criterion { id: 8, title: "property suite", budget: Duration::from_secs(60), run: c8_properties },
    ];
    let mut unexpected = Vec::new();
    println!();
    for c in &criteria {
        let mut checks = Checks::new();
        let start = Instant::now();
        (c.run)(&engine, &mut checks);
        let elapsed = start.elapsed();
        checks.check("runtime within budget", elapsed <= c.budget);
        let status = if checks.failed.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {status}  {}  runtime {:.2}s (budget {}s)  tolerance exact",
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        for f in &checks.failed {
            let known = KNOWN_UNATTAINABLE.contains(&(c.id, f.as_str()));
            println!("    failed: {f}{}", if known { "  [known unattainable]" } else { "" });
            if !known {
                unexpected.push(format!("criterion {}: {f}", c.id));
            }
        }
        for (id, name) in KNOWN_UNATTAINABLE {
            if id == c.id && !checks.failed.iter().any(|f| f == name) {
                unexpected.push(format!("criterion {id}: '{name}' now passes; update KNOWN_UNATTAINABLE"));
            }
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all failures are known and documented\n");
    } else {
        println!("acceptance: unexpected failures: {unexpected:?}\n");
        std::process::exit(1);
    }
}

fn c1_structure(e: &Engine, k: &mut Checks) {
    let t = e.so7().table();
    k.check("so(7) dimension 21", t.dim() == 21);
    k.check("9 positive roots", t.positive_root_count() == 9);
    k.check("Jacobi identity on all triples", t.check_jacobi().is_ok());
    k.check("matrices preserve the form", e.so7().check_form().is_ok());
    k.check("G2 closure dimension 14", e.g2().closure_dim() == 14);
    k.check("i is a bracket homomorphism", e.g2().check_homomorphism(e.so7()).is_ok());
    k.check("G2 Jacobi identity", e.g2().table().check_jacobi().is_ok());
}

fn c2_lattice(e: &Engine, k: &mut Checks) {
    let r = lattice_report(e).expect("lattice");
    let mut got: Vec<(String, String)> = r.arrows.iter().map(|a| (a.from.clone(), a.to.clone())).collect();
    let mut want: Vec<(String, String)> = DIAGRAM_ARROWS.iter().map(|(a, b)| ((*a).into(), (*b).into())).collect();
    got.sort();
    want.sort();
    k.check("arrows equal the diagram", got == want);
    k.check("20 arrows", got.len() == 20);
    let cross: Vec<_> = r.cross_checks.iter().map(|c| (c.from.as_str(), c.to.as_str())).collect();
    k.check(
        "cross arrows",
        cross == [("p'(0,0)", "p(0,0,0)"), ("p'(0,1)", "p(0,1,0)"), ("p'(1,0)", "p(1,0,1)"), ("p'(1,1)", "p(1,1,1)")],
    );
    k.check("intersection reproduces every cross arrow", r.cross_checks.iter().all(|c| c.holds));
    let p = parabolic(e.so7().table(), AlgebraTag::So7, &[1, 0, 0]).unwrap();
    let q = intersect_parabolic(e.so7(), e.g2(), &p).unwrap();
    k.check("conformal parabolic cuts out p'(1,0)", q.mask == [1, 0]);
}

fn reference_p() -> DiffOperator<5> {
    parse_diffop("-x1*d1^2 - x3*d2 + lam*d1 + x4*d3^2 + 2*x5*d3 - x5*d1*d5 + x4*d2*d5 - x2*d1*d2 - x3*d1*d3")
        .unwrap()
}

fn poly(s: &str) -> XiPolynomial {
    parse_poly(s).unwrap()
}

fn action_formula(b1: u32, b2: u32) -> XiPolynomial {
    let (i1, x3sq) = (invariant_i1(), poly("x3^2"));
    let mut out = XiPolynomial::zero();
    if b2 > 0 {
        let lead = &poly("x4").scale_rat(&int(2 * i64::from(b2) - 1)) + &poly("2*x3*x5");
        out = &out + &(&lead * &(&i1.pow(b1) * &x3sq.pow(b2 - 1))).scale_rat(&int(2 * i64::from(b2)));
    }
    if b1 > 0 {
        let c = ParamScalar::linear(int(2 - i64::from(b1) - 2 * i64::from(b2)), int(1));
        let lead = &poly("x4").scale(&c) - &poly("x3*x5");
        out = &out + &(&lead * &(&i1.pow(b1 - 1) * &x3sq.pow(b2))).scale_rat(&int(i64::from(b1)));
    }
    out
}

fn c3_operator(e: &Engine, k: &mut Checks) {
    let p = e.p_operator().expect("operator extraction");
    k.check("P(lam) has 9 terms", p.len() == 9);
    k.check("P(lam) equals the transcription", p == reference_p());
    let mut all = true;
    for b1 in 0..=5 {
        for b2 in 0..=5 {
            let u = &invariant_i1().pow(b1) * &poly("x3^2").pow(b2);
            all &= p.apply(&u) == action_formula(b1, b2);
        }
    }
    k.check("action on I1^b1 (xi3^2)^b2, b1,b2 <= 5", all);
    k.check("P(lam) xi3 = 2 xi5", p.apply(&poly("x3")) == poly("2*x5"));
}

fn c4_hilbert(_: &Engine, k: &mut Checks) {
    let r = hilbert_series_check(8);
    k.check("series, weight counts and closed forms agree", r.is_ok());
    k.check(
        "b(l,0) = 1 + floor(l/2)",
        (0..=8).all(|l| r.get(l, 0).is_some_and(|e| e.b == 1 + i64::from(l / 2))),
    );
    k.check("b(2,2) = 3 and b(3,1) = 4", r.get(2, 2).unwrap().b == 3 && r.get(3, 1).unwrap().b == 4);
}

fn binom(n: u32, s: u32) -> Rational {
    (0..s).fold(int(1), |acc, i| acc * int(i64::from(n - i)) / int(i64::from(i + 1)))
}

fn c5_singular(e: &Engine, k: &mut Checks) {
    for n in 1..=6u32 {
        let Ok(Some(c)) = solve_even(e, n) else {
            k.check(&format!("N={n}: certificate exists"), false);
            continue;
        };
        k.check(&format!("N={n}: lambda = N - 5/2"), c.lambda == int(i64::from(n)) - rat(5, 2));
        let a: Vec<Rational> = (0..=n).map(|s| int(4).pow(s as i32) * binom(n, s)).collect();
        k.check(&format!("N={n}: A_s = 4^s binom(N,s)"), c.coefficients == a);
        let lap = &invariant_i1().scale_rat(&int(4)) + &poly("x3^2");
        k.check(&format!("N={n}: (4 I1 + xi3^2)^N"), c.xi_polynomial == lap.pow(n));
    }
    for n in 0..=4 {
        k.check(&format!("odd N={n}: empty"), solve_odd(e, n).is_ok_and(|r| r.is_empty()));
    }
}

fn random_rational(rng: &mut StdRng) -> Rational {
    loop {
        let l = rat(rng.gen_range(-40..=40), rng.gen_range(1..=7));
        let shifted = &l + rat(5, 2);
        if !(shifted.is_integer() && shifted > int(0)) {
            return l;
        }
    }
}

fn c6_oracle(e: &Engine, k: &mut Checks) {
    let ann = e.p_prime_annihilators();
    for n in 1..=3u32 {
        let c = solve_even(e, n).unwrap().unwrap();
        let found = e.verma().oracle_singular_search(2 * n, &c.lambda, &ann);
        k.check(&format!("N={n}: oracle space is 1-dimensional"), found.len() == 1);
        if let Some(v) = found.first() {
            let back = e.coords().from_verma(v);
            let (m, x) = back.terms().next().unwrap();
            let ratio = x.as_constant().unwrap() / c.xi_polynomial.coeff(m).as_constant().unwrap();
            k.check(&format!("N={n}: oracle matches certificate"), back == c.xi_polynomial.scale_rat(&ratio));
        }
        k.check(&format!("N={n}: so(7)-singular"), verify_so7_singular(e, &c));
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    let lambdas: Vec<Rational> = (0..10).map(|_| random_rational(&mut rng)).collect();
    for d in 1..=6 {
        let sys = e.verma().action_system(d, &ann);
        for l in &lambdas {
            k.check(
                &format!("degree {d}, lambda {}: nothing found", fmt_rational(l)),
                sys.kernel_at(l).is_empty(),
            );
        }
    }
}

fn c7_weights(e: &Engine, k: &mut Checks) {
    for n in 1..=4u32 {
        let c = solve_even(e, n).unwrap().unwrap();
        let w = e.verma().weight_of(&c.verma_vector).unwrap().eval_lam(&c.lambda);
        let expected = WeightVec::new(WeightBasis::Eps, vec![-&c.lambda - int(5), int(0), int(0)]);
        k.check(&format!("N={n}: weight (-lam-5) eps1"), w == expected);
        let psi = WeightVec::new(WeightBasis::Psi, vec![-&c.lambda - int(5), int(0)]);
        k.check(
            &format!("N={n}: pr of the weight is (-lam-5) psi1"),
            project_weight(&w).unwrap() == psi.to(WeightBasis::Alpha).unwrap(),
        );
    }
    let so7 = so7_difference().unwrap();
    let want = [ParamScalar::linear(int(5), int(2)), ParamScalar::zero(), ParamScalar::from_int(-1)];
    k.check("so(7) difference equals (2lam+5)eps1 - eps3", so7.coords() == want);
    let printed = [ParamScalar::linear(int(16), int(4)), ParamScalar::linear(int(6), int(2))];
    let g2_alpha1 = g2_difference(1).unwrap();
    let g2_alpha2 = g2_difference(2).unwrap();
    k.check(
        "G2 difference equals (4lam+16)alpha1 + (2lam+6)alpha2",
        g2_alpha1.coords() == printed || g2_alpha2.coords() == printed,
    );
    for l in [rat(-3, 2), rat(-1, 2), rat(1, 2), rat(3, 2), rat(5, 2)] {
        let v = nonstandard_verdict(&l).unwrap();
        let tag = fmt_rational(&l);
        k.check(&format!("lambda {tag}: so(7) witness"), v.so7_witness.is_some());
        k.check(&format!("lambda {tag}: G2 witness"), v.g2_witness.is_some());
        k.check(
            &format!("lambda {tag}: non-standard"),
            v.so7_verdict == Verdict::NonStandard && v.g2_verdict == Verdict::NonStandard,
        );
    }
}

fn random_element(rng: &mut StdRng, dim: usize) -> AlgebraElement {
    let mut c = vec![int(0); dim];
    for _ in 0..3 {
        c[rng.gen_range(0..dim)] += int(rng.gen_range(-3..=3));
    }
    AlgebraElement::from_coeffs(c)
}

fn random_vector(rng: &mut StdRng) -> VermaVector {
    let mut v = VermaVector::zero();
    for _ in 0..3 {
        let mut m = [0u32; 5];
        for _ in 0..rng.gen_range(0..=3) {
            m[rng.gen_range(0..5)] += 1;
        }
        v = v.add(&VermaVector::monomial(Monomial(m), ParamScalar::from_int(rng.gen_range(-4..=4))));
    }
    v
}

fn c8_properties(e: &Engine, k: &mut Checks) {
    let mut rng = StdRng::seed_from_u64(SEED ^ 8);
    let t = e.so7().table();
    let m = e.verma();
    let mut rep = true;
    for _ in 0..200 {
        let (x, y, v) = (random_element(&mut rng, t.dim()), random_element(&mut rng, t.dim()), random_vector(&mut rng));
        let lhs = m.act(&t.bracket(&x, &y), &v);
        let rhs = m.act(&x, &m.act(&y, &v)).add(&m.act(&y, &m.act(&x, &v)).scale(&ParamScalar::from_int(-1)));
        rep &= lhs == rhs;
    }
    k.check("representation property on 200 triples", rep);

    let gens: Vec<DiffOperator<5>> = (0..5).flat_map(|i| [DiffOperator::xi(i), DiffOperator::d(i)]).collect();
    let mut anti = true;
    let mut lie = true;
    for a in &gens {
        for b in &gens {
            anti &= a.compose(b).fourier() == b.fourier().compose(&a.fourier());
            lie &= a.commutator(b).adjoint_image() == a.adjoint_image().commutator(&b.adjoint_image());
        }
    }
    k.check("Fourier map reverses products of generators", anti);
    k.check("Fourier adjoint image preserves brackets of generators", lie);

    let words = ["d1*x1*d1*x1", "d3^2*x3^2 - lam*x2*d2", "d1*d2*x1*x2*x4", "x5*d5*x5*d5 + 1/2"];
    let mut idem = true;
    for w in words {
        let once = parse_diffop::<5>(w).unwrap();
        idem &= parse_diffop::<5>(&once.to_string()).unwrap() == once;
    }
    k.check("normal ordering is idempotent", idem);

    let c = solve_even(e, 3).unwrap().unwrap();
    let j = CertificateJson::from(&c);
    let text = serde_json::to_string(&j).unwrap();
    let back: CertificateJson = serde_json::from_str(&text).unwrap();
    k.check("certificate JSON round-trip", back == j && back.to_certificate().unwrap() == c);
    let s = StructureReport::from_table(t);
    let back: StructureReport = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
    k.check("structure table JSON round-trip", back == s);
    let h = HilbertJson::new(&hilbert_series_check(4), None);
    let back: HilbertJson = serde_json::from_str(&serde_json::to_string(&h).unwrap()).unwrap();
    k.check("Hilbert report JSON round-trip", back == h);
    let mut text_ok = true;
    for _ in 0..50 {
        let v = random_vector(&mut rng);
        text_ok &= VermaVector::parse(&v.to_string()).is_ok_and(|w| w == v);
        let l = random_rational(&mut rng);
        text_ok &= parse_rational(&fmt_rational(&l)).is_ok_and(|x| x == l);
    }
    k.check("text round-trips", text_ok);
}
