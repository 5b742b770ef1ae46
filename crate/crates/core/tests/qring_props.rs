use num_rational::BigRational;
use proptest::prelude::*;
use trigva_core::qring::{LaurentQ, QringError, Scalar};

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn laurent() -> impl Strategy<Value = LaurentQ> {
    prop::collection::vec((-4i32..=4, -3i64..=3), 0..4)
        .prop_map(|ts| LaurentQ::from_terms(ts.into_iter().map(|(e, c)| (e, r(c, 1)))))
}

/// Sums of `laurent * u_j^e`, optionally divided by a `q`-bracket.
fn scalar() -> impl Strategy<Value = Scalar> {
    (
        prop::collection::vec((laurent(), 0usize..2, -2i32..=2), 1..3),
        prop::option::of(1i32..=3),
    )
        .prop_map(|(terms, den)| {
            let mut x = Scalar::zero();
            for (l, j, e) in terms {
                x += &Scalar::from_laurent(l) * &Scalar::param_pow(j, e);
            }
            match den {
                Some(s) => &x * &Scalar::sin_bracket(s).invert().unwrap(),
                None => x,
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert_eq!(&a + &Scalar::zero(), a);
    }

    #[test]
    fn product_to_sum(a in -6i32..=6, b in -6i32..=6) {
        let lhs = &LaurentQ::sin_bracket(a) * &LaurentQ::sin_bracket(b);
        let rhs = &(&LaurentQ::q_pow(a + b) + &LaurentQ::q_pow(-a - b))
            - &(&LaurentQ::q_pow(a - b) + &LaurentQ::q_pow(b - a));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn specialization_is_a_homomorphism(
        a in scalar(),
        b in scalar(),
        q0 in prop::sample::select(vec![(2i64, 1i64), (3, 2), (-5, 3), (7, 5)]),
        u0 in prop::sample::select(vec![(1i64, 2i64), (3, 1), (-2, 7)]),
    ) {
        let q0 = r(q0.0, q0.1);
        let u = vec![r(u0.0, u0.1), r(u0.1, 3)];
        let ev = |x: &Scalar| x.specialize(&q0, &u);
        match (ev(&a), ev(&b)) {
            (Ok(x), Ok(y)) => {
                prop_assert_eq!(ev(&(&a + &b)).unwrap(), &x + &y);
                prop_assert_eq!(ev(&(&a * &b)).unwrap(), x * y);
            }
            (Err(QringError::Pole(_)), _) | (_, Err(QringError::Pole(_))) => {}
            (Err(e), _) | (_, Err(e)) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn text_round_trip(a in scalar()) {
        let s = a.to_string();
        let back: Scalar = s.parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn invertible_elements(l in laurent(), e in -3i32..=3) {
        prop_assume!(!l.is_zero());
        let x = &Scalar::from_laurent(l) * &Scalar::param_pow(0, e);
        let y = x.invert().unwrap();
        prop_assert!((&x * &y).is_one());
    }
}

#[test]
fn bracket_examples() {
    let two = r(2, 1);
    let sum = &Scalar::q_pow(1) + &Scalar::q_pow(-1);
    assert_eq!(sum.specialize(&two, &[]).unwrap(), r(5, 2));
    let prod = &Scalar::sin_bracket(1) * &(&Scalar::q_pow(1) + &Scalar::q_pow(-1));
    assert_eq!(prod, Scalar::sin_bracket(2));
    assert_eq!(Scalar::q_pow(2).invert().unwrap(), Scalar::q_pow(-2));
    assert!(Scalar::sin_bracket(0).is_zero());
    assert_eq!(Scalar::sin_bracket(-2), -Scalar::sin_bracket(2));
    assert_eq!(
        Scalar::sin_bracket(1).specialize(&two, &[]).unwrap(),
        r(3, 2)
    );
    let ratio = &Scalar::q_pow(1) * &Scalar::sin_bracket(1).invert().unwrap();
    assert_eq!(ratio.specialize(&two, &[]).unwrap(), r(4, 3));
    let pole = Scalar::sin_bracket(1).invert().unwrap();
    assert!(matches!(
        pole.specialize(&r(1, 1), &[]),
        Err(QringError::Pole(_))
    ));
}
