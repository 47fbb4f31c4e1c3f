use fmethod_core::fmethod::{gr_degree, op_gr_degree, GrDegree};
use fmethod_core::poly::invariant_i1;
use fmethod_core::scalar::int;
use fmethod_core::text::{parse_diffop, parse_poly};
use fmethod_core::{DiffOperator, Engine, Monomial, ParamScalar, XiPolynomial};

fn op(s: &str) -> DiffOperator<5> {
    parse_diffop(s).unwrap()
}

fn poly(s: &str) -> XiPolynomial {
    parse_poly(s).unwrap()
}

/// Hand transcription of the operator of `i(g'_1)`.
fn reference_p() -> DiffOperator<5> {
    op("-x1*d1^2 - x3*d2 + lam*d1 + x4*d3^2 + 2*x5*d3 - x5*d1*d5 + x4*d2*d5 - x2*d1*d2 - x3*d1*d3")
}

#[test]
fn p_operator_matches_transcription() {
    let e = Engine::new().unwrap();
    let p = e.p_operator().unwrap();
    assert_eq!(p.len(), 9);
    assert_eq!(p, reference_p());
    assert_eq!(p.order(), 2);
}

#[test]
fn p_on_xi3_is_two_xi5() {
    let e = Engine::new().unwrap();
    let p = e.p_operator().unwrap();
    assert_eq!(p.apply(&poly("x3")), poly("2*x5"));
}

#[test]
fn order_one_is_too_low_for_p() {
    let e = Engine::new().unwrap();
    assert!(e.extract_diffop(&e.g2_root(1), 1).is_err());
}

#[test]
fn sl2_triple_operators() {
    let e = Engine::new().unwrap();
    let (eo, fo, ho) = e.sl2_triple_ops().unwrap();
    assert_eq!(eo, op("-x2*d4 + x1*d5"));
    assert_eq!(fo, op("x5*d1 - x4*d2"));
    assert_eq!(ho, op("x1*d1 + x2*d2 - x4*d4 - x5*d5"));
    assert_eq!(eo.commutator(&fo), ho);
    assert_eq!(ho.commutator(&eo), eo.scale(&ParamScalar::from_int(2)));
    assert_eq!(ho.commutator(&fo), fo.scale(&ParamScalar::from_int(-2)));
}

#[test]
fn grading_element_operator() {
    let e = Engine::new().unwrap();
    let g = e.extract_diffop(&e.grading_element(), 1).unwrap();
    let lam2 = ParamScalar::linear(int(0), int(2));
    let expected = &DiffOperator::constant(lam2) - &op("x1*d1 + 3*x2*d2 + 2*x3*d3 + 3*x4*d4 + x5*d5");
    assert_eq!(g, expected);
}

#[test]
fn invariants_are_gr_homogeneous() {
    assert_eq!(gr_degree(&invariant_i1()), GrDegree::Homogeneous(-4));
    assert_eq!(gr_degree(&poly("x3^2")), GrDegree::Homogeneous(-4));
    assert_eq!(gr_degree(&poly("x1 + x3")), GrDegree::Mixed);
    assert_eq!(gr_degree(&XiPolynomial::zero()), GrDegree::Zero);
    assert_eq!(op_gr_degree(&reference_p()), GrDegree::Homogeneous(1));
}

/// `P(lam) I1^b1 (xi_3^2)^b2` in closed form.
fn action_formula(b1: u32, b2: u32) -> XiPolynomial {
    let i1 = invariant_i1();
    let x3sq = poly("x3^2");
    let mut out = XiPolynomial::zero();
    if b2 > 0 {
        let lead = &poly("x4").scale_rat(&int(2 * i64::from(b2) - 1)) + &poly("2*x3*x5");
        let rest = &i1.pow(b1) * &x3sq.pow(b2 - 1);
        out = &out + &(&lead * &rest).scale_rat(&int(2 * i64::from(b2)));
    }
    if b1 > 0 {
        let c = ParamScalar::linear(int(2 - i64::from(b1) - 2 * i64::from(b2)), int(1));
        let lead = &poly("x4").scale(&c) - &poly("x3*x5");
        let rest = &i1.pow(b1 - 1) * &x3sq.pow(b2);
        out = &out + &(&lead * &rest).scale_rat(&int(i64::from(b1)));
    }
    out
}

#[test]
fn action_on_invariant_products() {
    let e = Engine::new().unwrap();
    let p = e.p_operator().unwrap();
    let i1 = invariant_i1();
    let x3sq = poly("x3^2");
    for b1 in 0..=5 {
        for b2 in 0..=5 {
            let u = &i1.pow(b1) * &x3sq.pow(b2);
            assert_eq!(p.apply(&u), action_formula(b1, b2), "b1={b1} b2={b2}");
        }
    }
}

#[test]
fn fourier_action_is_a_representation_on_samples() {
    let e = Engine::new().unwrap();
    let t = e.so7().table();
    let samples = ["x1*x4", "x3^2 + x2", "x5^3 - 2*x1*x2*x3"];
    for (a, b) in [(1i64, -1i64), (2, -3), (5, -9), (-2, 3)] {
        let x = e.so7_root(a);
        let y = e.so7_root(b);
        let xy = t.bracket(&x, &y);
        for s in samples {
            let p = poly(s);
            let lhs = e.fourier_act(&xy, &p);
            let rhs = &e.fourier_act(&x, &e.fourier_act(&y, &p)) - &e.fourier_act(&y, &e.fourier_act(&x, &p));
            assert_eq!(lhs, rhs, "[g{a}, g{b}] on {s}");
        }
    }
}

#[test]
fn n_minus_acts_by_multiplication() {
    let e = Engine::new().unwrap();
    let coords = e.coords();
    for i in 0..5 {
        let x = e.so7_root(coords.label_of_xi(i));
        let got = e.fourier_act(&x, &poly("x1*x3 + 2"));
        let var = XiPolynomial::monomial(Monomial::var(i));
        assert_eq!(got, &var * &poly("x1*x3 + 2"));
    }
}
