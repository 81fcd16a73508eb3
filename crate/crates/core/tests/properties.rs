use std::cmp::Ordering;

use proptest::prelude::*;

use solidus::cli::{eval, parse};
use solidus::field::rat;
use solidus::{ExternalNum, Neutrix, PreciseNum, RhoPoly};

fn exponent() -> impl Strategy<Value = (i64, i64)> {
    (-8i64..=8, 1i64..=2)
}

fn poly() -> impl Strategy<Value = RhoPoly> {
    prop::collection::vec((-20i64..=20, 1i64..=3, exponent()), 0..4).prop_map(|terms| {
        RhoPoly::from_terms(terms.into_iter().map(|(c, d, (n, m))| (rat(c, d), rat(n, m))))
    })
}

fn precise() -> impl Strategy<Value = PreciseNum> {
    (poly(), prop::option::weighted(0.15, poly())).prop_map(|(num, den)| match den {
        Some(d) if !d.is_zero() => PreciseNum::new(num, d).expect("nonzero denominator"),
        _ => PreciseNum::from_poly(num),
    })
}

fn neutrix() -> impl Strategy<Value = Neutrix> {
    prop_oneof![
        Just(Neutrix::Zero),
        exponent().prop_map(|(n, m)| Neutrix::ScaledOslash(rat(n, m))),
        exponent().prop_map(|(n, m)| Neutrix::ScaledPound(rat(n, m))),
        Just(Neutrix::Max),
    ]
}

fn external() -> impl Strategy<Value = ExternalNum> {
    (precise(), neutrix()).prop_map(|(p, n)| ExternalNum::new(p, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn precise_field_laws(a in precise(), b in precise(), c in precise()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            let q = a.checked_div(&b).unwrap();
            prop_assert_eq!(&q * &b, a.clone());
        }
    }

    #[test]
    fn precise_order_is_compatible(a in precise(), b in precise(), c in precise()) {
        if a <= b {
            prop_assert!(&a + &c <= &b + &c);
        }
        if a.is_positive() && b.is_positive() {
            prop_assert!((&a * &b).is_positive());
        }
        prop_assert_eq!((&a * &b).signum(), a.signum() * b.signum());
    }

    #[test]
    fn representative_shift_is_invisible(p in precise(), n in neutrix(), m in precise()) {
        let x = ExternalNum::new(p.clone(), n.clone());
        if n.contains(&m) {
            prop_assert_eq!(ExternalNum::new(&p + &m, n), x);
        }
    }

    #[test]
    fn neutrix_sum_is_the_larger(a in neutrix(), b in neutrix()) {
        prop_assert_eq!(a.add(&b), std::cmp::max(a.clone(), b.clone()));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn external_laws(x in external(), y in external(), z in external()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &x.magnitude(), x.clone());
        prop_assert_eq!(x.magnitude().magnitude(), x.magnitude());
        prop_assert_eq!(&x - &x, x.magnitude());
    }

    #[test]
    fn order_is_total_and_antisymmetric(x in external(), y in external()) {
        let o = x.compare(&y);
        prop_assert_eq!(y.compare(&x), o.reverse());
        prop_assert_eq!(o == Ordering::Equal, x == y);
    }

    #[test]
    fn inverse_gives_unity(x in external()) {
        if x.is_zeroless() {
            let inv = x.ext_inv().unwrap();
            prop_assert_eq!(x.ext_mul(&inv), x.unity().unwrap());
        } else {
            prop_assert!(x.ext_inv().is_err());
        }
    }

    #[test]
    fn printed_values_parse_back(x in external()) {
        let text = x.to_string();
        let back = eval(&parse(&text).unwrap()).unwrap();
        prop_assert_eq!(back, x);
    }
}
