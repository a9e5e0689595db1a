//! Reference values of the theory, checked through the public API.

use mystica::classify::{fingerprint, isomorphic, regular_singular};
use mystica::cyclo::Cyclotomic;
use mystica::groupalg::{j_c, GroupAlgebraElement};
use mystica::groups::FiniteMonomialGroup;
use mystica::monomial::MonomialElement;
use mystica::mystic::{group_ring_iso_check, mu_group, mystic_equiv_check};
use mystica::qpoly::{
    act_c, commute_check, fundamental_invariants, phi_eval, qmul, ExponentVector, QMatrix,
    QPolynomial, Twist,
};

fn gmpn(m: u32, p: u32, n: usize) -> FiniteMonomialGroup {
    FiniteMonomialGroup::make_gmpn(m, p, n).unwrap()
}

fn lit(s: &str) -> Cyclotomic {
    s.parse().unwrap()
}

fn histogram(g: &FiniteMonomialGroup) -> Vec<(u64, usize)> {
    fingerprint(g).order_histogram.into_iter().collect()
}

#[test]
fn semidirect_rule() {
    let s1 = MonomialElement::simple_reflection(2, 1, 4).unwrap();
    let t1 = MonomialElement::torus_generator(2, 1, 1, 4).unwrap();
    let t2 = MonomialElement::torus_generator(2, 2, 1, 4).unwrap();
    assert_eq!(&s1 * &t1, &t2 * &s1);
    assert_eq!(s1.det_char().to_cyclotomic(), Cyclotomic::from_integer(-1));
}

#[test]
fn central_element_z() {
    let z = MonomialElement::central_scalar(2, 2, mystica::cyclo::RootOfUnity::new(2, 1)).unwrap();
    assert_eq!(z, MonomialElement::torus(vec![1, 1], 2).unwrap());
}

#[test]
fn standard_actions_on_generators() {
    let s1 = MonomialElement::simple_reflection(2, 1, 4).unwrap();
    let x1 = QPolynomial::var(2, 1);
    let x2 = QPolynomial::var(2, 2);
    assert_eq!(act_c(&Twist::Plus, &s1, &x1).unwrap(), x2);
    let x1x2 = QPolynomial::monomial(ExponentVector(vec![1, 1]), Cyclotomic::one(1));
    assert_eq!(
        act_c(&Twist::minus(), &s1, &x1x2).unwrap(),
        x1x2.scale(&Cyclotomic::from_integer(-1))
    );
    let t1 = MonomialElement::torus_generator(2, 1, 1, 4).unwrap();
    let x1_cubed = QPolynomial::monomial(ExponentVector(vec![3, 0]), Cyclotomic::one(1));
    assert_eq!(
        act_c(&Twist::Plus, &t1, &x1_cubed).unwrap(),
        x1_cubed.scale(&lit("zeta4^3"))
    );
}

#[test]
fn skew_relation() {
    let q = QMatrix::minus_one(2);
    let (x1, x2) = (QPolynomial::var(2, 1), QPolynomial::var(2, 2));
    let x1x2 = QPolynomial::monomial(ExponentVector(vec![1, 1]), Cyclotomic::one(1));
    assert_eq!(
        qmul(&q, &x2, &x1).unwrap(),
        x1x2.scale(&Cyclotomic::from_integer(-1))
    );
}

#[test]
fn pair_function_values() {
    let c = Twist::scalar(lit("zeta3^1"));
    assert_eq!(
        phi_eval(&c, 1, 2, &ExponentVector(vec![1, 0])).unwrap(),
        lit("zeta3^1")
    );
    assert_eq!(
        phi_eval(&Twist::minus(), 1, 2, &ExponentVector(vec![1, 1])).unwrap(),
        Cyclotomic::from_integer(-1)
    );
}

#[test]
fn orders() {
    assert_eq!(gmpn(6, 3, 2).order(), 24);
    assert_eq!(mu_group(&gmpn(6, 3, 2)).unwrap().order(), 24);
    for (m, p, n) in [(2, 1, 3), (3, 3, 3), (4, 2, 4), (5, 5, 2)] {
        let expected = (m as usize).pow(n as u32) * (1..=n).product::<usize>() / p as usize;
        assert_eq!(gmpn(m, p, n).order(), expected);
    }
}

#[test]
fn mystic_counterpart_of_klein_four() {
    let g = gmpn(2, 2, 2);
    let mu = mu_group(&g).unwrap();
    assert!(mu.same_elements(&FiniteMonomialGroup::make_w(2, 1, 2).unwrap()));
    assert_eq!(histogram(&g), vec![(1, 1), (2, 3)]);
    assert_eq!(histogram(&mu), vec![(1, 1), (2, 1), (4, 2)]);
    assert!(!isomorphic(&g, &mu).unwrap());
    assert!(g.is_thick(2).unwrap());
    assert!(mu.is_thick(2).unwrap());
}

#[test]
fn m_over_p_even_is_fixed_by_mu() {
    for (m, p, n) in [(4, 2, 2), (4, 2, 3), (4, 1, 2), (6, 3, 2), (6, 1, 2)] {
        let g = gmpn(m, p, n);
        assert!(mu_group(&g).unwrap().same_elements(&g), "G({m},{p},{n})");
    }
}

#[test]
fn odd_m_is_rejected() {
    assert!(mu_group(&gmpn(3, 1, 2)).is_err());
}

#[test]
fn mystical_equivalence_examples() {
    let g = gmpn(2, 2, 2);
    let mu = mu_group(&g).unwrap();
    assert!(
        mystic_equiv_check(&g, &Twist::Plus, &mu, &Twist::minus(), 4)
            .unwrap()
            .verdict
    );
    let g3 = gmpn(2, 2, 3);
    let mu3 = mu_group(&g3).unwrap();
    assert!(
        mystic_equiv_check(&g3, &Twist::Plus, &mu3, &Twist::minus(), 8)
            .unwrap()
            .verdict
    );
}

#[test]
fn invariants_commute() {
    let inv = fundamental_invariants(2, 2, 2).unwrap();
    assert_eq!(inv[0].to_string(), "x1^2 + x2^2");
    assert_eq!(inv[1].to_string(), "x1*x2");
    assert!(commute_check(&QMatrix::minus_one(2), &inv).unwrap());
}

#[test]
fn q_element_inverse() {
    let c = lit("zeta4^1");
    let q = mystica::groupalg::q_ij(&c, 1, 2, 2, 4).unwrap();
    let qi = mystica::groupalg::q_ij(&c.inv().unwrap(), 1, 2, 2, 4).unwrap();
    assert_eq!(
        mystica::groupalg::ga_mul(&q, &qi).unwrap(),
        GroupAlgebraElement::one(2, 4)
    );
}

#[test]
fn group_ring_isomorphism_on_klein_four() {
    let g = gmpn(2, 2, 2);
    let r = group_ring_iso_check(&g).unwrap();
    assert!(r.pass);
    let s1 = MonomialElement::simple_reflection(2, 1, 4).unwrap();
    let image = j_c(&lit("zeta4^1"), &GroupAlgebraElement::from_element(s1)).unwrap();
    let mu = mu_group(&g).unwrap();
    let half = |s: &str| lit(s);
    let coeffs: Vec<Cyclotomic> = image.terms().map(|(_, c)| c.clone()).collect();
    assert_eq!(image.support().count(), 2);
    assert!(image.support().all(|h| mu.contains(h)));
    for c in coeffs {
        assert!(c == half("1/2 + 1/2*zeta4^1") || c == half("1/2 - 1/2*zeta4^1"));
        assert!(c.in_gaussian_half_ring());
    }
}

#[test]
fn cross_rank_coincidence() {
    let s4 = gmpn(1, 1, 4);
    assert!(isomorphic(&gmpn(2, 2, 3), &s4).unwrap());
    assert!(isomorphic(&mu_group(&gmpn(2, 2, 3)).unwrap(), &s4).unwrap());
    assert!(isomorphic(&gmpn(2, 2, 3), &mu_group(&gmpn(2, 2, 3)).unwrap()).unwrap());
}

#[test]
fn listed_singular_groups() {
    assert!(!regular_singular(&gmpn(2, 1, 2)).regular);
    assert!(!regular_singular(&mu_group(&gmpn(2, 2, 2)).unwrap()).regular);
    for n in 2..=4 {
        assert!(!regular_singular(&gmpn(1, 1, n)).regular);
    }
    assert!(regular_singular(&gmpn(1, 1, 5)).regular);
}
