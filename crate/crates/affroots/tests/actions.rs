use affine_cartan::{Coweight, RootAff};
use affine_roots::*;
use affine_weyl::{ExtendedElement, WeylGroup};
use proptest::prelude::*;

fn grp(name: &str) -> WeylGroup {
    WeylGroup::from_name(name).unwrap()
}

fn element(g: &WeylGroup, word: &[usize], c: i64, fin: &[i64], d: i64) -> ExtendedElement {
    let w = g.from_word(word).unwrap();
    g.extended(Coweight::new(c, &fin[..g.rank()], d), w)
}

fn root(g: &WeylGroup, idx: usize, m: i64, k: i64) -> AffinizedRoot {
    let roots = g.cartan().finite_roots();
    AffinizedRoot::new(g, RootAff::new(&roots[idx % roots.len()], m), k).unwrap()
}

fn arb_case() -> impl Strategy<Value = (bool, Vec<usize>, i64, [i64; 2], i64)> {
    (
        any::<bool>(),
        prop::collection::vec(1usize..=3, 0..7),
        -3i64..=3,
        [-3i64..=3, -3i64..=3],
        -2i64..=3,
    )
}

fn build(rank2: bool, word: &[usize], c: i64, fin: [i64; 2], d: i64) -> (WeylGroup, ExtendedElement) {
    let g = grp(if rank2 { "A2" } else { "A1" });
    let word: Vec<usize> = word.iter().map(|&i| 1 + (i - 1) % g.num_simple()).collect();
    let x = element(&g, &word, c, &fin, d);
    (g, x)
}

#[test]
fn rank_one_left_action_example() {
    let g = grp("A1");
    let x = from_right_form(&g, &g.s(1), &Coweight::new(0, &[1], 0));
    let alpha = AffinizedRoot { root: RootAff::new(&[1], 0), k: 0 };
    assert_eq!(act_left(&g, &x, &alpha), AffinizedRoot { root: RootAff::new(&[-1], 0), k: 2 });
}

#[test]
fn rank_one_right_action_example() {
    let g = grp("A1");
    let x = g.extended(Coweight::new(0, &[1], 0), g.identity());
    let alpha = AffinizedRoot { root: RootAff::new(&[1], 0), k: 0 };
    assert_eq!(act_right(&g, &alpha, &x), AffinizedRoot { root: RootAff::new(&[1], 0), k: -2 });
}

#[test]
fn identity_acts_trivially() {
    let g = grp("A2");
    let e = g.extended(Coweight::zero(2), g.identity());
    for m in -2..=2 {
        for k in -2..=2 {
            for i in 0..6 {
                let a = root(&g, i, m, k);
                assert_eq!(act_left(&g, &e, &a), a);
                assert_eq!(act_right(&g, &a, &e), a);
            }
        }
    }
}

#[test]
fn quadrants_partition_and_negation_swaps_them() {
    let g = grp("A2");
    for i in 0..6 {
        for m in -2..=2 {
            for k in -2..=2 {
                let a = root(&g, i, m, k);
                let q = classify(&g, &a);
                let n = classify(&g, &-a);
                assert_ne!(q.upper_positive(), n.upper_positive());
                assert_ne!(q.lower_positive(), n.lower_positive());
                assert_eq!(q.upper_positive(), g.cartan().is_positive_root(&a.root));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn left_action_axiom(
        (r2, w1, c1, f1, d1) in arb_case(),
        (_, w2, c2, f2, d2) in arb_case(),
        idx in 0usize..6, m in -3i64..=3, k in -4i64..=4,
    ) {
        let (g, x) = build(r2, &w1, c1, f1, d1);
        let (_, y) = build(r2, &w2, c2, f2, d2);
        let a = root(&g, idx, m, k);
        prop_assert_eq!(act_left(&g, &g.ext_mul(&x, &y), &a), act_left(&g, &x, &act_left(&g, &y, &a)));
    }

    #[test]
    fn right_action_axiom(
        (r2, w1, c1, f1, d1) in arb_case(),
        (_, w2, c2, f2, d2) in arb_case(),
        idx in 0usize..6, m in -3i64..=3, k in -4i64..=4,
    ) {
        let (g, x) = build(r2, &w1, c1, f1, d1);
        let (_, y) = build(r2, &w2, c2, f2, d2);
        let a = root(&g, idx, m, k);
        prop_assert_eq!(act_right(&g, &act_right(&g, &a, &x), &y), act_right(&g, &a, &g.ext_mul(&x, &y)));
        prop_assert_eq!(act_right(&g, &a, &x), act_left(&g, &g.ext_inverse(&x), &a));
    }

    #[test]
    fn reflection_elements(
        (r2, w, c, f, d) in arb_case(),
        idx in 0usize..6, m in -3i64..=3, n in -4i64..=4,
    ) {
        let (g, x) = build(r2, &w, c, f, d);
        let alpha = root(&g, idx, m, n);
        let wa = reflection_element(&g, &alpha).unwrap();
        let e = g.extended(Coweight::zero(g.rank()), g.identity());
        prop_assert_eq!(g.ext_mul(&wa, &wa), e);
        // w_α π^λ w = π^{w_a λ − n a∨} w_a w
        let refl = g.reflection(&alpha.root).unwrap();
        let co = g.cartan().coroot_of(&alpha.root).unwrap().to_coweight();
        let lhs = g.ext_mul(&wa, &x);
        let rhs = g.extended(g.act(&refl, &x.lam) - co.scale(n), refl.compose(&x.w));
        prop_assert_eq!(lhs, rhs);
        // The mirror a − nπ is sent to its negative.
        let mirror = AffinizedRoot { root: alpha.root, k: -n };
        prop_assert_eq!(act_left(&g, &wa, &mirror), -mirror);
        prop_assert_eq!(reflection_element(&g, &-alpha).unwrap(), wa);
    }
}

fn tits_elements(g: &WeylGroup) -> Vec<ExtendedElement> {
    let words: [&[usize]; 5] = [&[], &[1], &[2, 1], &[1, 2, 1], &[3, 1, 2]];
    let lams: [(i64, [i64; 2], i64); 5] = [(0, [0, 0], 1), (1, [2, -1], 1), (0, [-3, 1], 2), (2, [0, 0], 0), (-1, [1, 1], 3)];
    let mut out = Vec::new();
    for word in words {
        for (c, f, d) in lams {
            let word: Vec<usize> = word.iter().map(|&i| 1 + (i - 1) % g.num_simple()).collect();
            out.push(element(g, &word, c, &f, d));
        }
    }
    out
}

#[test]
fn inversion_sets_match_a_scan_at_doubled_bounds() {
    for name in ["A1", "A2"] {
        let g = grp(name);
        for x in tits_elements(&g) {
            let exact = inversion_sets(&g, &x).unwrap();
            let cut = Cutoff { delta_level: exact.cutoff.delta_level + 1, pi_level: exact.cutoff.pi_level + 1 };
            let scan = scan_inversion_sets(&g, &x, cut);
            let wide = scan_inversion_sets(&g, &x, cut.doubled());
            assert_eq!(scan.positive_to_negative, exact.positive_to_negative, "{x:?}");
            assert_eq!(scan.negative_to_positive, exact.negative_to_positive, "{x:?}");
            assert_eq!(wide.sizes(), exact.sizes(), "{x:?}");
            for (a, b) in &exact.positive_to_negative {
                assert!(exact.negative_to_positive.contains(&(-*a, -*b)));
            }
        }
    }
}

#[test]
fn without_translation_the_first_set_has_length_many_elements() {
    let g = grp("A2");
    for layer in g.bfs_enumerate(4) {
        for w in layer {
            let x = g.extended(Coweight::zero(2), w);
            let sets = inversion_sets(&g, &x).unwrap();
            assert_eq!(sets.positive_to_negative.len() as u32, g.length(&w));
            assert!(sets.positive_to_negative.iter().all(|(a, _)| a.k == 0));
        }
    }
}

#[test]
fn central_translations_use_the_inverted_roots() {
    let g = grp("A1");
    let w = g.from_word(&[1, 2, 1]).unwrap();
    let x = g.extended(Coweight::new(5, &[0], 0), w);
    let exact = inversion_sets(&g, &x).unwrap();
    assert_eq!(exact.sizes(), (3, 3));
    let scan = scan_inversion_sets(&g, &x, Cutoff { delta_level: 4, pi_level: 4 });
    assert_eq!(scan, InversionSets { cutoff: scan.cutoff, ..exact });
}

#[test]
fn chain_search_is_monotone_and_witnessed() {
    let g = grp("A1");
    let x = element(&g, &[1], 0, &[1, 0], 1);
    let small = LebBound { delta_level: 0, pi_level: 1 };
    let big = LebBound { delta_level: 1, pi_level: 1 };
    let s1 = leb_search(&g, &x, 1, small).unwrap();
    let s2 = leb_search(&g, &x, 2, small).unwrap();
    let s3 = leb_search(&g, &x, 2, big).unwrap();
    assert!(s1.found.keys().all(|y| s2.found.contains_key(y)));
    assert!(s2.found.keys().all(|y| s3.found.contains_key(y)));
    assert!(s3.found.len() > s2.found.len() && s2.found.len() > s1.found.len());
    for (y, chain) in &s3.found {
        assert!(replay_chain(&g, &x, y, chain));
    }
    let probe = leb_probe(&g, &s3);
    assert_eq!(probe.elements, s3.found.len());
    for y in &probe.antisymmetry_violations {
        let back = reverse_chain(&g, &x, y, &s3.found[y]).unwrap();
        assert!(replay_chain(&g, y, &x, &back));
    }
}

#[test]
fn non_tits_start_is_rejected() {
    let g = grp("A1");
    let x = element(&g, &[], 0, &[1, 0], 0);
    assert!(leb_search(&g, &x, 1, LebBound { delta_level: 0, pi_level: 0 }).is_err());
}
