use proptest::prelude::*;
use proptest::sample::select;

use mystica::cyclo::Cyclotomic;
use mystica::groupalg::{ga_mul, j_c, GroupAlgebraElement};
use mystica::monomial::{perm_compose, perm_inverse, perm_sign, permute_vector, MonomialElement};
use mystica::qpoly::{act_c, qmul, ExponentVector, QMatrix, QPolynomial, Twist};

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (
        select(vec![1u32, 2, 3, 4, 5, 6, 8, 12]),
        prop::collection::vec(-4i64..=4, 1..6),
        1i64..4,
    )
        .prop_map(|(order, coeffs, den)| {
            coeffs
                .iter()
                .enumerate()
                .fold(Cyclotomic::zero(order), |acc, (i, &c)| {
                    let term = &Cyclotomic::root(order, i as i64).unwrap()
                        * &Cyclotomic::from_fraction(c, den).unwrap();
                    &acc + &term
                })
        })
}

fn perm(n: usize) -> impl Strategy<Value = Vec<u8>> {
    Just((0..n as u8).collect::<Vec<u8>>()).prop_shuffle()
}

fn element(n: usize, order: u32) -> impl Strategy<Value = MonomialElement> {
    (perm(n), prop::collection::vec(0..order as i64, n))
        .prop_map(move |(p, e)| MonomialElement::new(p, e, order).unwrap())
}

fn triple() -> impl Strategy<Value = [MonomialElement; 3]> {
    (1usize..=4, select(vec![2u32, 3, 4, 6]))
        .prop_flat_map(|(n, order)| [element(n, order), element(n, order), element(n, order)])
}

fn polynomial(n: usize) -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, n), -3i64..=3), 1..4).prop_map(
        move |terms| {
            QPolynomial::from_terms(
                n,
                terms
                    .into_iter()
                    .map(|(k, c)| (ExponentVector(k), Cyclotomic::from_integer(c))),
            )
            .unwrap()
        },
    )
}

fn twist() -> impl Strategy<Value = Twist> {
    select(vec![
        Twist::Plus,
        Twist::minus(),
        Twist::scalar("zeta4^1".parse().unwrap()),
        Twist::scalar("zeta3^2".parse().unwrap()),
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_ring_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &(-&a), Cyclotomic::zero(1));
    }

    #[test]
    fn nonzero_elements_invert(a in cyclotomic()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn conjugation_is_a_ring_automorphism(a in cyclotomic(), b in cyclotomic()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn lifting_preserves_value(a in cyclotomic(), k in 1u32..4) {
        let lifted = a.lift(a.order() * k).unwrap();
        prop_assert_eq!(&lifted, &a);
        prop_assert_eq!(lifted.to_string().parse::<Cyclotomic>().unwrap(), a);
    }

    #[test]
    fn monomial_group_axioms([a, b, c] in triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        let e = MonomialElement::identity(a.rank(), a.order());
        prop_assert_eq!(&a * &e, a.clone());
        prop_assert!((&a * &a.invert()).is_identity());
        prop_assert!(a.pow(a.element_order()).is_identity());
        prop_assert_eq!(
            (&a * &b).det_char().to_cyclotomic(),
            &a.det_char().to_cyclotomic() * &b.det_char().to_cyclotomic()
        );
        prop_assert_eq!(a.conjugate_by(&b), &(&b * &a) * &b.invert());
    }

    #[test]
    fn permutation_helpers((w, v, k) in (1usize..=6).prop_flat_map(|n| {
        (perm(n), perm(n), prop::collection::vec(0u32..9, n))
    })) {
        let wv = perm_compose(&w, &v);
        prop_assert_eq!(permute_vector(&wv, &k), permute_vector(&w, &permute_vector(&v, &k)));
        prop_assert_eq!(permute_vector(&perm_inverse(&w), &permute_vector(&w, &k)), k);
        prop_assert_eq!(perm_sign(&wv), perm_sign(&w) * perm_sign(&v));
    }

    #[test]
    fn twisted_action_is_a_representation(
        ([g, h, _], f, c) in (1usize..=3).prop_flat_map(|n| {
            ([element(n, 4), element(n, 4), element(n, 4)], polynomial(n), twist())
        })
    ) {
        let gh = &g * &h;
        prop_assert_eq!(
            act_c(&c, &gh, &f).unwrap(),
            act_c(&c, &g, &act_c(&c, &h, &f).unwrap()).unwrap()
        );
    }

    #[test]
    fn skew_product_is_associative(
        (f, g, h) in (1usize..=3).prop_flat_map(|n| (polynomial(n), polynomial(n), polynomial(n)))
    ) {
        let q = QMatrix::minus_one(f.n());
        prop_assert_eq!(
            qmul(&q, &qmul(&q, &f, &g).unwrap(), &h).unwrap(),
            qmul(&q, &f, &qmul(&q, &g, &h).unwrap()).unwrap()
        );
    }

    #[test]
    fn minus_action_respects_skew_product(
        (g, f, h) in (1usize..=3).prop_flat_map(|n| (element(n, 2), polynomial(n), polynomial(n)))
    ) {
        let q = QMatrix::minus_one(f.n());
        let c = Twist::minus();
        prop_assert_eq!(
            act_c(&c, &g, &qmul(&q, &f, &h).unwrap()).unwrap(),
            qmul(&q, &act_c(&c, &g, &f).unwrap(), &act_c(&c, &g, &h).unwrap()).unwrap()
        );
    }

    #[test]
    fn j_is_multiplicative(
        (a, b) in (element(2, 4), element(2, 4), -2i64..=2, -2i64..=2)
            .prop_map(|(x, y, p, q)| {
                let mut a = GroupAlgebraElement::from_element(x.clone());
                a.add_term(y.clone(), Cyclotomic::from_integer(p)).unwrap();
                let mut b = GroupAlgebraElement::from_element(y);
                b.add_term(x, Cyclotomic::from_integer(q)).unwrap();
                (a, b)
            })
    ) {
        let c: Cyclotomic = "zeta4^1".parse().unwrap();
        let ab = ga_mul(&a, &b).unwrap();
        prop_assert_eq!(
            j_c(&c, &ab).unwrap(),
            ga_mul(&j_c(&c, &a).unwrap(), &j_c(&c, &b).unwrap()).unwrap()
        );
    }
}
