use fmethod_core::embedding::{inclusion_lattice, inject_weight, intersect_parabolic, parabolic, project_weight, AlgebraTag};
use fmethod_core::lie::{build_so_odd, AlgebraElement, WeightBasis, WeightVec};
use fmethod_core::scalar::{int, rat};
use fmethod_core::Engine;

fn w(s: &str) -> WeightVec {
    WeightVec::parse(s).unwrap()
}

#[test]
fn so7_dimensions_and_jacobi() {
    let so7 = build_so_odd(3).unwrap();
    let t = so7.table();
    assert_eq!(t.dim(), 21);
    assert_eq!(t.positive_root_count(), 9);
    so7.check_form().unwrap();
    t.check_jacobi().unwrap();
    t.check_root_grading().unwrap();
    let so5 = build_so_odd(2).unwrap();
    assert_eq!(so5.table().dim(), 10);
    so5.table().check_jacobi().unwrap();
    assert!(build_so_odd(1).is_err());
}

#[test]
fn so7_root_labels() {
    let so7 = build_so_odd(3).unwrap();
    let expected: [[i64; 3]; 9] = [
        [1, -1, 0],
        [0, 1, -1],
        [0, 0, 1],
        [1, 0, -1],
        [0, 1, 0],
        [1, 0, 0],
        [0, 1, 1],
        [1, 0, 1],
        [1, 1, 0],
    ];
    for (k, e) in expected.iter().enumerate() {
        let i = so7.table().index_of_root(k as i64 + 1).unwrap();
        assert_eq!(so7.eps_root(i), e, "label {}", k + 1);
    }
}

#[test]
fn cartan_normalization() {
    let so7 = build_so_odd(3).unwrap();
    let t = so7.table();
    let g = |l| t.root_element(l).unwrap();
    let h = |i| t.basis_element(t.cartan(i));
    assert_eq!(t.bracket(&g(1), &g(-1)), h(1));
    assert_eq!(t.bracket(&g(3), &g(-3)), h(3).scale(&int(2)));
    assert_eq!(so7.eps_values(&h(1)), vec![int(1), int(-1), int(0)]);
    assert_eq!(so7.eps_values(&h(3)), vec![int(0), int(0), int(1)]);
}

#[test]
fn g2_closure_and_homomorphism() {
    let e = Engine::new().unwrap();
    let g2 = e.g2();
    assert_eq!(g2.closure_dim(), 14);
    assert_eq!(g2.table().dim(), 14);
    g2.check_homomorphism(e.so7()).unwrap();
    g2.table().check_jacobi().unwrap();
    g2.table().check_root_grading().unwrap();
    assert_eq!(g2.root_data().root(6).unwrap(), vec![3, 2]);
}

#[test]
fn g2_cartan_images() {
    let e = Engine::new().unwrap();
    let h = |i| e.so7_cartan(i);
    assert_eq!(e.g2_cartan(2), h(2).scale(&int(3)));
    assert_eq!(e.g2_cartan(1), &h(1) + &h(3).scale(&int(2)));
}

#[test]
fn projection_and_injection() {
    assert_eq!(project_weight(&w("eps2 - eps3")).unwrap(), w("alpha2"));
    assert_eq!(project_weight(&w("omega1")).unwrap(), w("psi1").to(WeightBasis::Alpha).unwrap());
    assert_eq!(project_weight(&w("omega2")).unwrap(), w("psi2").to(WeightBasis::Alpha).unwrap());
    assert_eq!(project_weight(&w("omega3")).unwrap(), w("psi1").to(WeightBasis::Alpha).unwrap());
    assert_eq!(project_weight(&w("eps1")).unwrap(), w("2*alpha1 + alpha2"));
    assert_eq!(inject_weight(&w("alpha2")).unwrap(), w("3*eps2 - 3*eps3"));
    assert_eq!(inject_weight(&w("alpha1")).unwrap(), w("eps1 - eps2 + 2*eps3"));
    for s in ["alpha1", "alpha2", "1/2*alpha1 - 7*alpha2"] {
        let back = project_weight(&inject_weight(&w(s)).unwrap()).unwrap();
        assert_eq!(back, w(s).scale(&int(3)));
    }
}

#[test]
fn highest_weight_restricts_to_lam_psi1() {
    let e = Engine::new().unwrap();
    let lam_eps1 = WeightVec::new(
        WeightBasis::Eps,
        vec![fmethod_core::ParamScalar::lam(), Default::default(), Default::default()],
    );
    let mu = e.g2().restrict_weight(e.so7(), &lam_eps1).unwrap();
    assert_eq!(mu.eval_lam(&int(1)), w("psi1").to(WeightBasis::Alpha).unwrap());
    assert_eq!(mu.eval_lam(&rat(3, 2)), w("3/2*psi1").to(WeightBasis::Alpha).unwrap());
}

#[test]
fn conformal_parabolic() {
    let so7 = build_so_odd(3).unwrap();
    let t = so7.table();
    let p = parabolic(t, AlgebraTag::So7, &[1, 0, 0]).unwrap();
    let mut labels = p.opposite_labels(t);
    labels.sort();
    assert_eq!(labels, ["g_-1", "g_-4", "g_-6", "g_-8", "g_-9"]);
    assert!(p.opposite_is_commutative(t));
    assert!(p.is_subalgebra(t));
    // Levi semisimple part is so(5): 2 * 4 roots + 3 Cartan
    assert_eq!(p.levi.len(), 11);
    let b = parabolic(t, AlgebraTag::So7, &[1, 1, 1]).unwrap();
    assert_eq!(b.levi.len(), 3);
    assert_eq!(b.nilradical.len(), 9);
    assert!(parabolic(t, AlgebraTag::So7, &[1, 0]).is_err());
}

#[test]
fn intersections() {
    let e = Engine::new().unwrap();
    let t = e.so7().table();
    let cases = [([1, 0, 0], [1, 0]), ([0, 0, 0], [0, 0]), ([1, 1, 1], [1, 1]), ([0, 1, 0], [0, 1])];
    for (m, expect) in cases {
        let p = parabolic(t, AlgebraTag::So7, &m).unwrap();
        let q = intersect_parabolic(e.so7(), e.g2(), &p).unwrap();
        assert_eq!(q.mask, expect, "mask {m:?}");
    }
}

#[test]
fn lattice_has_twenty_covering_arrows() {
    let e = Engine::new().unwrap();
    let l = inclusion_lattice(e.so7(), e.g2()).unwrap();
    let names = l.arrow_names();
    assert_eq!(names.len(), 20);
    assert!(names.contains(&("p'(1,0)".into(), "p(1,0,1)".into())));
    assert!(!names.contains(&("p'(1,0)".into(), "p(0,1,0)".into())));
}

#[test]
fn algebra_element_arithmetic() {
    let a = AlgebraElement::basis(3, 0);
    let b = AlgebraElement::basis(3, 2);
    let s = &a + &b;
    assert_eq!(s.support().count(), 2);
    assert!((&s - &s).is_zero());
}
