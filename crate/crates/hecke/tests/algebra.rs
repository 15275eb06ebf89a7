use affine_cartan::Coweight;
use affine_hecke::{HeckeAlgebra, HeckeElement, ThetaExpr, ThetaPolicy};
use affine_series::{LPoly, VCoeff};
use proptest::prelude::*;

fn algebra(name: &str) -> HeckeAlgebra {
    HeckeAlgebra::from_name(name).unwrap()
}

#[test]
fn braid_relations_hold_for_every_finite_pair() {
    for name in ["A2", "A3", "D4"] {
        let h = algebra(name);
        let g = h.group().clone();
        let n = h.cartan().num_simple();
        let am = h.cartan().affine_cartan_matrix();
        for i in 1..=n {
            for j in (i + 1)..=n {
                let m = match am[i - 1][j - 1] {
                    0 => 2,
                    -1 => 3,
                    _ => continue,
                };
                let word_i: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
                let word_j: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
                let a = h.t_word(&word_i);
                let b = h.t_word(&word_j);
                assert_eq!(a, b, "{name}: braid {i},{j}");
                assert_eq!(a, h.t(&g.from_word(&word_i).unwrap()));
            }
        }
    }
}

#[test]
fn reduced_word_products_give_t_w() {
    let h = algebra("A2");
    let g = h.group().clone();
    for w in g.bfs_enumerate(5).concat() {
        assert_eq!(h.t_word(&g.reduced_word(&w)), h.t(&w));
    }
}

#[test]
fn theta_construction_on_a_window() {
    for name in ["A1", "A2"] {
        let h = algebra(name);
        let data = h.cartan().clone();
        let l = data.rank();
        let mut count = 0;
        for d in 1..=2i64 {
            for c in -2..=1i64 {
                let ranges: Vec<i64> = (-3..=3).collect();
                let fins: Vec<Vec<i64>> = if l == 1 {
                    ranges.iter().map(|&x| vec![x]).collect()
                } else {
                    ranges.iter().flat_map(|&x| ranges.iter().map(move |&y| vec![x, y])).collect()
                };
                for f in fins {
                    let mu = Coweight::new(c, &f, d);
                    let a = h.theta_construct(&mu, ThetaPolicy::SmallestIndex, 64).unwrap();
                    let b = h.theta_construct(&mu, ThetaPolicy::LargestIndex, 64).unwrap();
                    assert!(a.verified && b.verified, "{name} {mu:?}");
                    assert_eq!(a.value, b.value);
                    count += 1;
                }
            }
        }
        assert!(count > 50);
    }
}

#[test]
fn theta_construction_base_and_first_step() {
    let h = algebra("A2");
    let data = h.cartan().clone();
    let dom = Coweight::new(0, &[0, 0], 1);
    let r = h.theta_construct(&dom, ThetaPolicy::SmallestIndex, 8).unwrap();
    assert_eq!(r.nodes[&dom], ThetaExpr::Dominant);
    assert_eq!(r.depth(), 0);
    // ⟨a_1, μ⟩ = −1 with w_1 μ dominant
    let nu = Coweight::new(0, &[1, 1], 2);
    assert_eq!(data.simple_pairing(1, &nu), 1);
    assert!(data.is_dominant(&nu));
    let mu = data.reflect_coweight(1, &nu);
    let r = h.theta_construct(&mu, ThetaPolicy::SmallestIndex, 8).unwrap();
    assert_eq!(r.depth(), 1);
    assert!(matches!(r.nodes[&mu], ThetaExpr::Step { a: 1, .. }));
    let tinv = h.t_simple_inv(1);
    let qm1 = VCoeff::poly(LPoly::from_terms(&[(-2, 1), (0, -1)]));
    let by_hand = h
        .mul(&h.mul(&h.t_simple(1), &h.theta(nu)), &tinv)
        .sub(&h.mul(&h.theta(nu), &tinv).scale(&qm1));
    assert_eq!(by_hand, h.theta(mu));
    assert!(r.verified);
}

#[test]
fn theta_construction_rejects_outside_tits_cone() {
    let h = algebra("A1");
    assert!(h.theta_construct(&Coweight::new(0, &[1], 0), ThetaPolicy::SmallestIndex, 8).is_err());
    assert!(h.theta_construct(&Coweight::new(0, &[40], 1), ThetaPolicy::SmallestIndex, 2).is_err());
}

fn small_element(h: &HeckeAlgebra, positive: bool) -> impl Strategy<Value = HeckeElement> {
    let g = h.group().clone();
    let elems = g.bfs_enumerate(2).concat();
    let lo = if positive { 0 } else { -1 };
    prop::collection::vec(
        ((lo..=1i64, -1i64..=1, -1i64..=1, -1i64..=1), 0..elems.len(), -2i64..=2, -2i32..=2),
        1..3,
    )
    .prop_map(move |items| {
        let mut x = HeckeElement::zero();
        for ((d, c, a, b), wi, k, vd) in items {
            let lam = if positive && d == 0 { Coweight::new(c, &[0, 0], 0) } else { Coweight::new(c, &[a, b], d) };
            x.add_term(lam, elems[wi], VCoeff::mono(k, vd));
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn associativity(x in small_element(&algebra("A2"), false), y in small_element(&algebra("A2"), false), z in small_element(&algebra("A2"), false)) {
        let h = algebra("A2");
        prop_assert_eq!(h.mul(&h.mul(&x, &y), &z), h.mul(&x, &h.mul(&y, &z)));
    }

    #[test]
    fn h_plus_is_closed(x in small_element(&algebra("A2"), true), y in small_element(&algebra("A2"), true)) {
        let h = algebra("A2");
        prop_assert!(h.is_in_h_plus(&x) && h.is_in_h_plus(&y));
        prop_assert!(h.is_in_h_plus(&h.mul(&x, &y)));
    }

    #[test]
    fn grading_is_multiplicative(x in small_element(&algebra("A2"), false), y in small_element(&algebra("A2"), false)) {
        let h = algebra("A2");
        for (dx, px) in h.grade(&x) {
            for (dy, py) in h.grade(&y) {
                let prod = h.mul(&px, &py);
                prop_assert!(h.grade(&prod).keys().all(|&k| k == dx + dy));
            }
        }
    }
}
