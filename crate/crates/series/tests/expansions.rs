use affine_cartan::{AffineCartanData, CorootAff, Coweight};
use affine_series::{
    delta, delta_w, delta_w_logged, expand_b, expand_c, small_inversions, LPoly, Normalization, Series,
    SeriesError, TruncationContext, VCoeff,
};
use affine_weyl::WeylGroup;
use num_bigint::BigInt;
use num_rational::BigRational;

fn p(t: &[(i32, i64)]) -> VCoeff {
    VCoeff::poly(LPoly::from_terms(t))
}

fn exact(data: &AffineCartanData, anchor: Coweight, terms: &[(Coweight, VCoeff)]) -> Series {
    Series::from_terms(data, TruncationContext::exact(anchor), terms.iter().cloned()).unwrap()
}

/// Power series in `x` divided by `1 − x`, by naive long division: an oracle independent of
/// the geometric closed form.
fn long_divide(num: &[VCoeff], n: usize) -> Vec<VCoeff> {
    let mut rem: Vec<VCoeff> = (0..=n).map(|i| num.get(i).cloned().unwrap_or_else(VCoeff::zero)).collect();
    let mut q = Vec::new();
    for i in 0..=n {
        let c = rem[i].clone();
        if i < n {
            rem[i + 1] = &rem[i + 1] + &c;
        }
        q.push(c);
    }
    q
}

#[test]
fn unit_and_monomial_products() {
    let data = AffineCartanData::from_name("A2").unwrap();
    let lam = Coweight::new(1, &[1, 0], 0);
    let mu = Coweight::new(0, &[0, 1], 2);
    let f = exact(&data, lam, &[(lam, p(&[(1, 3)])), (lam - data.simple_coroot(1), VCoeff::int(2))]);
    assert_eq!(f.mul(&Series::one(&data)), f);
    let a = Series::monomial(&data, lam, VCoeff::one());
    let b = Series::monomial(&data, mu, VCoeff::one());
    assert_eq!(a.mul(&b), Series::monomial(&data, lam + mu, VCoeff::one()));
}

#[test]
fn add_requires_matching_anchor() {
    let data = AffineCartanData::from_name("A1").unwrap();
    let a = Series::one(&data);
    let b = Series::monomial(&data, data.central(), VCoeff::one());
    assert!(matches!(a.add(&b), Err(SeriesError::AnchorMismatch(..))));
}

#[test]
fn expansions_match_long_division_in_a1() {
    let data = AffineCartanData::from_name("A1").unwrap();
    let depth = 12;
    for (k, gamma) in [CorootAff::new(&[1], 0), CorootAff::new(&[-1], 1), CorootAff::new(&[0], 1)]
        .into_iter()
        .enumerate()
    {
        let ht = data.coroot_height(&gamma) as usize;
        let n = depth as usize / ht;
        let step = gamma.to_coweight();
        let check = |s: &Series, num: [VCoeff; 2]| {
            let q = long_divide(&num, n);
            for (j, c) in q.iter().enumerate() {
                assert_eq!(s.coeff(&(-(j as i64) * step)), *c, "case {k}, power {j}");
            }
            assert_eq!(s.len(), q.iter().filter(|c| !c.is_zero()).count());
        };
        check(&expand_c(&data, &gamma, depth, Normalization::Delta).unwrap(), [VCoeff::one(), p(&[(2, -1)])]);
        if !gamma.is_imaginary() {
            // c(−γ) = (1 − v²x⁻¹)/(1 − x⁻¹) = (v² − x)/(1 − x) with x = e^{−γ}
            check(&expand_c(&data, &-gamma, depth, Normalization::Delta).unwrap(), [p(&[(2, 1)]), VCoeff::int(-1)]);
            check(&expand_c(&data, &gamma, depth, Normalization::Hecke).unwrap(), [p(&[(1, 1)]), p(&[(-1, -1)])]);
            check(&expand_b(&data, &gamma, depth).unwrap(), [VCoeff::zero(), p(&[(-1, 1), (1, -1)])]);
            check(&expand_b(&data, &-gamma, depth).unwrap(), [p(&[(-1, -1), (1, 1)]), VCoeff::zero()]);
        }
    }
}

#[test]
fn expansion_certificate_and_constant_term() {
    for name in ["A1", "A2", "D4"] {
        let data = AffineCartanData::from_name(name).unwrap();
        for beta in data.positive_real_coroots(7) {
            let c = expand_c(&data, &beta, 7, Normalization::Delta).unwrap();
            assert_eq!(c.coeff(&data.zero()), VCoeff::one());
            let one_minus = exact(&data, data.zero(), &[(data.zero(), VCoeff::one()), (-beta.to_coweight(), VCoeff::int(-1))]);
            let target = exact(&data, data.zero(), &[(data.zero(), VCoeff::one()), (-beta.to_coweight(), p(&[(2, -1)]))]);
            assert!(one_minus.mul(&c).agrees_with(&target, Some(7), None));
            let cm = expand_c(&data, &-beta, 7, Normalization::Delta).unwrap();
            assert_eq!(cm.coeff(&data.zero()), p(&[(2, 1)]));
        }
    }
}

#[test]
fn zero_coroot_is_rejected() {
    let data = AffineCartanData::from_name("A2").unwrap();
    let z = CorootAff::new(&[0, 0], 0);
    assert_eq!(expand_c(&data, &z, 3, Normalization::Delta).unwrap_err(), SeriesError::ZeroCoroot);
    assert!(expand_b(&data, &CorootAff::new(&[1, -1], 0), 3).is_err());
}

#[test]
fn hecke_normalization_identities() {
    let data = AffineCartanData::from_name("A2").unwrap();
    let d = 10;
    let vsum = exact(&data, data.zero(), &[(data.zero(), p(&[(-1, 1), (1, 1)]))]);
    let one = Series::one(&data);
    for g in data.positive_real_coroots(6) {
        let c = expand_c(&data, &g, d, Normalization::Hecke).unwrap();
        let ci = expand_c(&data, &-g, d, Normalization::Hecke).unwrap();
        let b = expand_b(&data, &g, d).unwrap();
        let bi = expand_b(&data, &-g, d).unwrap();
        // c(X) + c(X⁻¹) = v + v⁻¹
        assert!(c.add(&ci).unwrap().agrees_with(&vsum, Some(d), None));
        // c(X)c(X⁻¹) = 1 + b(X)b(X⁻¹)
        let lhs = c.mul(&ci);
        let rhs = b.mul(&bi).add(&one.with_context(lhs.context()).unwrap()).unwrap();
        assert!(lhs.agrees_with(&rhs, Some(d), None));
        // normalization map: v·c_T(γ) = c_Δ(−γ)
        let cd = expand_c(&data, &-g, d, Normalization::Delta).unwrap();
        assert_eq!(c.scale(&VCoeff::mono(1, 1)), cd);
    }
}

#[test]
fn delta_w_leading_coefficient_and_imaginary_part() {
    let g = WeylGroup::from_name("A2").unwrap();
    let data = g.cartan();
    let d = 6;
    let base = delta(&g, d);
    assert_eq!(base.coeff(&data.zero()), VCoeff::one());
    for shell in g.bfs_enumerate(4) {
        for w in shell {
            let dw = delta_w(&g, &w, d);
            assert_eq!(dw.coeff(&data.zero()), VCoeff::mono(1, 2 * g.length(&w) as i32));
            let (_, log) = delta_w_logged(&g, &w, d);
            assert_eq!(log.imaginary, 2);
            assert_eq!(log.inert_negative + small_inversions(&g, &w, d).len(), g.length(&w) as usize);
        }
    }
}

/// `Δ^w = Δ · ∏_{β ∈ N(w⁻¹)} (v² − e^{−β})/(1 − v²e^{−β})`, with inert factors contributing `v²`.
#[test]
fn delta_w_ratio_identity() {
    let g = WeylGroup::from_name("A1").unwrap();
    let data = g.cartan();
    let d = 8;
    let base = delta(&g, d);
    for shell in g.bfs_enumerate(5) {
        for w in shell {
            let mut rhs = base.clone();
            let small = small_inversions(&g, &w, d);
            for beta in &small {
                let num = exact(&data.clone(), data.zero(), &[(data.zero(), p(&[(2, 1)])), (-beta.to_coweight(), VCoeff::int(-1))]);
                let den = exact(&data.clone(), data.zero(), &[(data.zero(), VCoeff::one()), (-beta.to_coweight(), p(&[(2, -1)]))])
                    .truncate(d);
                rhs = rhs.mul(&num).mul(&den.with_context(TruncationContext::with_depth(data.zero(), d)).unwrap().invert_unit().unwrap());
            }
            let extra = g.length(&w) as i32 - small.len() as i32;
            rhs = rhs.scale(&VCoeff::mono(1, 2 * extra));
            assert!(delta_w(&g, &w, d).agrees_with(&rhs, Some(d), None), "{w:?}");
        }
    }
}

#[test]
fn simple_reflection_ratio() {
    let g = WeylGroup::from_name("A2").unwrap();
    let data = g.cartan();
    let d = 7;
    let base = delta(&g, d);
    for i in 1..=data.num_simple() {
        let a = data.simple_coroot_aff(i);
        let lhs = delta_w(&g, &g.s(i), d).mul(&expand_c(data, &a, d, Normalization::Delta).unwrap());
        let rhs = base.mul(&expand_c(data, &-a, d, Normalization::Delta).unwrap());
        assert!(lhs.agrees_with(&rhs, Some(d), None));
    }
}

#[test]
fn inversion() {
    let data = AffineCartanData::from_name("A2").unwrap();
    let d = 9;
    let ctx = TruncationContext::with_depth(data.zero(), d);
    let one = Series::one(&data).with_context(ctx).unwrap();
    assert_eq!(one.invert_unit().unwrap(), one);
    let f = Series::from_terms(&data, ctx, [(data.zero(), VCoeff::one()), (-data.central(), VCoeff::int(-1))]).unwrap();
    let inv = f.invert_unit().unwrap();
    assert_eq!(inv.len(), 4);
    for n in 0..=3 {
        assert_eq!(inv.coeff(&(-(n as i64) * data.central())), VCoeff::one());
    }
    let g = WeylGroup::new(data.clone());
    let dl = delta(&g, d);
    let prod = dl.invert_unit().unwrap().mul(&dl);
    assert!(prod.agrees_with(&one, Some(d), None));
    let nonunit = Series::from_terms(&data, ctx, [(-data.central(), VCoeff::one())]).unwrap();
    assert_eq!(nonunit.invert_unit().unwrap_err(), SeriesError::NotUnit);
}

#[test]
fn specialization() {
    let data = AffineCartanData::from_name("A1").unwrap();
    let four = BigRational::from_integer(BigInt::from(4));
    let one = Series::one(&data).specialize(&four).unwrap();
    assert_eq!(one[&data.zero()], BigRational::from_integer(BigInt::from(1)));
    let v2 = Series::monomial(&data, data.zero(), VCoeff::mono(1, 2)).specialize(&four).unwrap();
    assert_eq!(v2[&data.zero()], BigRational::new(BigInt::from(1), BigInt::from(4)));
    let bad = VCoeff::ratio(LPoly::one(), LPoly::from_terms(&[(0, 1), (2, -1)])).unwrap();
    let err = Series::monomial(&data, data.central(), bad).specialize(&four).unwrap_err();
    assert_eq!(err, SeriesError::NotVFinite(data.central()));
}

#[test]
fn weyl_action_on_series() {
    let g = WeylGroup::from_name("A2").unwrap();
    let data = g.cartan();
    let lam = Coweight::new(0, &[0, 0], 2);
    let mu = lam - data.simple_coroot(1);
    let f = exact(data, lam + 5 * data.central(), &[(lam, VCoeff::one()), (mu, VCoeff::int(3))]);
    assert_eq!(f.w_act(&g, &g.identity()).unwrap().0, f);
    let c = exact(data, 2 * data.central(), &[(2 * data.central(), VCoeff::int(5))]);
    for w in g.bfs_enumerate(3).concat() {
        assert_eq!(c.w_act(&g, &w).unwrap().0, c);
        let u = g.s(2);
        let once = f.w_act(&g, &u).unwrap().0.w_act(&g, &w).unwrap().0;
        assert_eq!(once, f.w_act(&g, &g.mul(&w, &u)).unwrap().0);
    }
    let outside = exact(data, Coweight::new(0, &[1, 0], 0), &[(Coweight::new(0, &[1, 0], 0), VCoeff::one())]);
    assert!(matches!(outside.w_act(&g, &g.s(1)), Err(SeriesError::OutsideTitsCone(_))));
}

#[test]
fn power_series_expansion_of_rational_coefficients() {
    // 1/(1 − v²) = 1 + v² + v⁴ + …
    let c = VCoeff::ratio(LPoly::one(), LPoly::from_terms(&[(0, 1), (2, -1)])).unwrap();
    let e = c.expand_v(7).unwrap();
    assert_eq!(e, LPoly::from_terms(&[(0, 1), (2, 1), (4, 1), (6, 1)]));
    // the expansion agrees with the exact value to the stated precision
    let w = VCoeff::ratio(LPoly::from_terms(&[(-1, 3), (1, 1)]), LPoly::from_terms(&[(0, 1), (1, 2), (3, -1)])).unwrap();
    let e = w.expand_v(12).unwrap();
    assert!(VCoeff::poly(e).eq_mod(&w, 12));
    let bad = VCoeff::ratio(LPoly::one(), LPoly::from_terms(&[(0, 2), (1, 1)])).unwrap();
    assert!(bad.expand_v(4).is_err());
}
