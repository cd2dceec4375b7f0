use equicohom::hcoeff::HCoeff;
use equicohom::laurent::Laurent;
use equicohom::maps::push::{nonequiv_pushforward, BU_VARS, C1, C2, XH1, XH2};
use equicohom::parse::{parse, parse_grading};
use equicohom::rings::bt1::{self, Bt1Elem};
use equicohom::rings::bt2::{self, Bt2Elem};
use proptest::prelude::*;

fn coefficient() -> impl Strategy<Value = HCoeff> {
    prop_oneof![
        (-3i64..=3).prop_map(HCoeff::int),
        Just(HCoeff::kappa()),
        Just(HCoeff::g()),
        Just(HCoeff::xi()),
        Just(HCoeff::e()),
        Just(HCoeff::u(1)),
    ]
}

/// Integers, κ and g: closed under multiplication by every rule coefficient.
fn safe_coefficient() -> impl Strategy<Value = HCoeff> {
    prop_oneof![
        (-3i64..=3).prop_map(HCoeff::int),
        Just(HCoeff::kappa()),
        Just(HCoeff::g()),
    ]
}

fn bt2_from(c: impl Strategy<Value = HCoeff>) -> impl Strategy<Value = Bt2Elem> {
    prop::collection::vec((c, prop::collection::vec(0u32..=2, bt2::NVARS)), 1..=3).prop_filter_map(
        "outside the coefficient fragment",
        |terms| {
            terms.into_iter().try_fold(Bt2Elem::zero(), |acc, (c, exps)| {
                let pairs: Vec<(usize, u32)> = exps.into_iter().enumerate().collect();
                Some(acc.add(&Bt2Elem::mono(c, &pairs).ok()?))
            })
        },
    )
}

fn bt1_from(c: impl Strategy<Value = HCoeff>) -> impl Strategy<Value = Bt1Elem> {
    prop::collection::vec((c, prop::collection::vec(0u32..=3, bt1::NVARS)), 1..=3).prop_filter_map(
        "outside the coefficient fragment",
        |terms| {
            terms.into_iter().try_fold(Bt1Elem::zero(), |acc, (c, exps)| {
                let e: [u32; bt1::NVARS] = exps.try_into().expect("length");
                Some(acc.add(&Bt1Elem::term(c, e).ok()?))
            })
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bt2_printed_form_parses_back(x in bt2_from(coefficient())) {
        let y: Bt2Elem = parse(&x.to_string()).unwrap();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn bt1_printed_form_parses_back(x in bt1_from(coefficient())) {
        let y: Bt1Elem = parse(&x.to_string()).unwrap();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn coefficient_printed_form_parses_back(a in coefficient(), b in coefficient(), c in coefficient()) {
        let x = a.mul(&b).and_then(|ab| ab.mul(&c));
        prop_assume!(x.is_ok());
        let x = x.unwrap().add(&a);
        let y: HCoeff = parse(&x.to_string()).unwrap();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn bt2_ring_axioms(x in bt2_from(safe_coefficient()), y in bt2_from(safe_coefficient()), z in bt2_from(safe_coefficient())) {
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(&xy, &y.mul(&x).unwrap());
        let left = xy.mul(&z).unwrap();
        let right = x.mul(&y.mul(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let dist = x.mul(&y.add(&z)).unwrap();
        prop_assert_eq!(dist, xy.add(&x.mul(&z).unwrap()));
        prop_assert_eq!(x.mul(&Bt2Elem::one()).unwrap(), x.clone());
        prop_assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn bt1_ring_axioms(x in bt1_from(safe_coefficient()), y in bt1_from(safe_coefficient()), z in bt1_from(safe_coefficient())) {
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(&xy, &y.mul(&x).unwrap());
        prop_assert_eq!(xy.mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(x.mul(&y.add(&z)).unwrap(), xy.add(&x.mul(&z).unwrap()));
    }

    #[test]
    fn gradings_add_under_products(x in bt2_from(safe_coefficient()), y in bt2_from(safe_coefficient())) {
        let (gx, gy) = (x.grading(), y.grading());
        prop_assume!(matches!((&gx, &gy), (Ok(Some(_)), Ok(Some(_)))));
        let p = x.mul(&y).unwrap();
        match p.grading().unwrap() {
            Some(g) => prop_assert_eq!(g, gx.unwrap().unwrap() + gy.unwrap().unwrap()),
            None => prop_assert!(p.is_zero()),
        }
    }

    #[test]
    fn grading_printed_form_parses_back(raw in prop::array::uniform6(-5i64..=5)) {
        let g = equicohom::grading::GradingBT2::from_raw(raw[0], raw[1], raw[2], raw[3], raw[4], raw[5]);
        prop_assert_eq!(parse_grading(&g.to_string()).unwrap(), g);
    }

    /// `B` in `f = A + B·x̂1` is the divided difference `(f(x1,x2) − f(x2,x1))/(x1 − x2)`,
    /// evaluated at integer points with `ĉ1 = x1 + x2`, `ĉ2 = x1·x2`.
    #[test]
    fn pushforward_is_divided_difference(
        terms in prop::collection::vec((-4i64..=4, 0i64..=4, 0i64..=4), 1..=4),
        pts in prop::collection::vec((-5i64..=5, -5i64..=5), 3),
    ) {
        let mut f = Laurent::zero(BU_VARS);
        for &(k, i, j) in &terms {
            let mut e = vec![0; BU_VARS];
            e[XH1] = i;
            e[XH2] = j;
            f.add_term(e, HCoeff::int(k));
        }
        let b = nonequiv_pushforward(&f).unwrap();
        let eval_f = |x1: i64, x2: i64| -> i64 {
            terms.iter().map(|&(k, i, j)| k * x1.pow(i as u32) * x2.pow(j as u32)).sum()
        };
        for &(x1, x2) in &pts {
            let (c1, c2) = (x1 + x2, x1 * x2);
            let mut value = 0i64;
            for (e, c) in b.terms() {
                for (v, &n) in e.iter().enumerate() {
                    prop_assert!(n == 0 || v == C1 || v == C2, "unexpected variable in {:?}", e);
                }
                value += c.as_int().unwrap() * c1.pow(e[C1] as u32) * c2.pow(e[C2] as u32);
            }
            prop_assert_eq!(value * (x1 - x2), eval_f(x1, x2) - eval_f(x2, x1));
        }
    }
}
