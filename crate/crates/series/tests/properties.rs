use affine_cartan::{AffineCartanData, Coweight};
use affine_series::{LPoly, Series, TruncationContext, VCoeff};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn data() -> AffineCartanData {
    AffineCartanData::from_name("A2").unwrap()
}

fn lpoly() -> impl Strategy<Value = LPoly> {
    (-3i32..3, prop::collection::vec(-4i64..5, 0..4)).prop_map(|(val, c)| LPoly::from_coeffs(val, c))
}

fn vcoeff() -> impl Strategy<Value = VCoeff> {
    (lpoly(), prop::bool::ANY, prop::collection::vec(-2i64..3, 1..3)).prop_map(|(n, rational, d)| {
        if rational {
            let mut den = vec![1];
            den.extend(d);
            VCoeff::ratio(n, LPoly::from_coeffs(0, den)).unwrap()
        } else {
            VCoeff::poly(n)
        }
    })
}

/// Series anchored at 0 with support in `−Q₊∨` (nonnegative combinations of simple coroots).
fn series(depth: u32) -> impl Strategy<Value = Series> {
    prop::collection::vec(((0i64..3, 0i64..3, 0i64..2), vcoeff()), 0..6).prop_map(move |terms| {
        let d = data();
        let ctx = TruncationContext::with_depth(d.zero(), depth);
        let items = terms.into_iter().map(|((a, b, c), k)| {
            let q = a * d.simple_coroot(1) + b * d.simple_coroot(2) + c * d.simple_coroot(3);
            (-q, k)
        });
        Series::from_terms(&d, ctx, items).unwrap()
    })
}

fn rat(n: i64, m: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn vcoeff_field_ops_commute_with_evaluation(a in vcoeff(), b in vcoeff()) {
        // v² = 1/3 avoids the roots of every denominator the strategy can produce with even powers only
        let t = rat(1, 3);
        let ev = |x: &VCoeff| {
            let even = x.num().is_even() && x.den().is_even();
            if even { x.eval_v2(&t) } else { None }
        };
        if let (Some(x), Some(y)) = (ev(&a), ev(&b)) {
            prop_assert_eq!(ev(&(&a + &b)).unwrap(), &x + &y);
            prop_assert_eq!(ev(&(&a * &b)).unwrap(), &x * &y);
        }
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&a.div(&b).unwrap() * &b, a);
        }
    }

    #[test]
    fn ring_axioms(f in series(5), g in series(5), h in series(5)) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h).unwrap()), f.mul(&g).add(&f.mul(&h)).unwrap());
        prop_assert!(f.sub(&f).unwrap().is_empty());
    }

    #[test]
    fn truncation_coherence(f in series(6), g in series(6), dp in 0u32..=6) {
        let lhs = f.mul(&g).truncate(dp);
        let rhs = f.truncate(dp).mul(&g.truncate(dp)).truncate(dp);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn invert_unit_is_inverse(f in series(5), u in vcoeff()) {
        prop_assume!(!u.is_zero());
        let d = data();
        let head = Series::from_terms(&d, f.context(), [(d.zero(), u)]).unwrap();
        let tail = f.sub(&Series::from_terms(&d, f.context(), [(d.zero(), f.coeff(&d.zero()))]).unwrap()).unwrap();
        let unit = head.add(&tail).unwrap();
        let one = Series::one(&d).with_context(f.context()).unwrap();
        prop_assert!(unit.invert_unit().unwrap().mul(&unit).agrees_with(&one, Some(5), None));
    }

    #[test]
    fn shift_is_multiplication_by_monomial(f in series(4), a in -2i64..3, b in -2i64..3) {
        let d = data();
        let mu = Coweight::new(0, &[a, b], 1);
        let m = Series::monomial(&d, mu, VCoeff::one());
        prop_assert_eq!(f.mul(&m), f.shift(mu));
    }
}
