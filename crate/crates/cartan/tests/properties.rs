use affine_cartan::{AffineCartanData, Coweight, RootAff, RootBound};
use proptest::prelude::*;

fn types() -> impl Strategy<Value = AffineCartanData> {
    prop_oneof![Just("A1"), Just("A2"), Just("A3"), Just("D4")]
        .prop_map(|s| AffineCartanData::from_name(s).unwrap())
}

fn coweight(rank: usize, r: i64) -> impl Strategy<Value = Coweight> {
    (-r..=r, proptest::collection::vec(-r..=r, rank), -r..=r)
        .prop_map(|(c, f, d)| Coweight::new(c, &f, d))
}

fn with_coweights(n: usize) -> impl Strategy<Value = (AffineCartanData, Vec<Coweight>)> {
    types().prop_flat_map(move |d| {
        let l = d.rank();
        (Just(d), proptest::collection::vec(coweight(l, 4), n))
    })
}

proptest! {
    #[test]
    fn pairing_is_bilinear((d, cws) in with_coweights(2), k in -3i64..=3, i in 0usize..20, j in 0usize..20) {
        let roots = d.positive_real_roots(RootBound::DeltaLevel(2));
        let a = roots[i % roots.len()];
        let b = roots[j % roots.len()];
        let (x, y) = (cws[0], cws[1]);
        prop_assert_eq!(d.pairing(&a, &(x + y.scale(k))), d.pairing(&a, &x) + k * d.pairing(&a, &y));
        prop_assert_eq!(d.pairing(&(a + b), &x), d.pairing(&a, &x) + d.pairing(&b, &x));
        prop_assert_eq!(d.pairing(&a, &d.central()), 0);
    }

    #[test]
    fn real_roots_pair_to_two_with_their_coroots(name in prop_oneof![Just("A1"), Just("A2"), Just("D4"), Just("E6")], i in 0usize..500, neg in any::<bool>()) {
        let d = AffineCartanData::from_name(name).unwrap();
        let roots = d.positive_real_roots(RootBound::DeltaLevel(3));
        let mut a = roots[i % roots.len()];
        if neg { a = -a; }
        let c = d.coroot_of(&a).unwrap();
        prop_assert_eq!(d.root_coroot(&a, &c), 2);
        prop_assert_eq!(d.root_of(&c).unwrap(), a);
    }

    #[test]
    fn dominance_is_a_partial_order((d, cws) in with_coweights(3)) {
        let (x, y, z) = (cws[0], cws[1], cws[2]);
        prop_assert_eq!(d.dominance_leq(&x, &x), Some(vec![0; d.num_simple()]));
        if d.is_leq(&x, &y) && d.is_leq(&y, &x) {
            prop_assert_eq!(x, y);
        }
        if d.is_leq(&x, &y) && d.is_leq(&y, &z) {
            prop_assert!(d.is_leq(&x, &z));
        }
    }

    #[test]
    fn dominance_witness_reconstructs_difference((d, cws) in with_coweights(1), n in proptest::collection::vec(0i64..4, 9)) {
        let mu = cws[0];
        let mut lam = mu;
        for i in 1..=d.num_simple() {
            lam += d.simple_coroot(i).scale(n[i - 1]);
        }
        prop_assert_eq!(d.dominance_leq(&mu, &lam), Some(n[..d.num_simple()].to_vec()));
    }

    #[test]
    fn height_is_additive(name in prop_oneof![Just("A1"), Just("A2"), Just("D4")], n in proptest::collection::vec(0i64..5, 10), m in proptest::collection::vec(0i64..5, 10)) {
        let d = AffineCartanData::from_name(name).unwrap();
        let build = |v: &[i64]| {
            let mut q = d.zero();
            for i in 1..=d.num_simple() {
                q += d.simple_coroot(i).scale(v[i - 1]);
            }
            q
        };
        let (x, y) = (build(&n), build(&m));
        let hx = d.height(&x).unwrap();
        prop_assert_eq!(hx, n[..d.num_simple()].iter().sum::<i64>());
        prop_assert_eq!(d.height(&(x + y)).unwrap(), hx + d.height(&y).unwrap());
        prop_assert_eq!(hx, d.rho_pairing(&x));
    }

    #[test]
    fn simple_reflections_preserve_pairing((d, cws) in with_coweights(1), i in 1usize..10, j in 0usize..30) {
        let i = 1 + (i - 1) % d.num_simple();
        let roots = d.positive_real_roots(RootBound::DeltaLevel(2));
        let a = roots[j % roots.len()];
        let x = cws[0];
        prop_assert_eq!(d.pairing(&d.reflect_root(i, &a), &d.reflect_coweight(i, &x)), d.pairing(&a, &x));
        prop_assert_eq!(d.reflect_coweight(i, &d.reflect_coweight(i, &x)), x);
        prop_assert!(d.is_real_root(&d.reflect_root(i, &a)));
    }
}

#[test]
fn simple_root_reflects_to_negative() {
    let d = AffineCartanData::from_name("A2").unwrap();
    for i in 1..=3 {
        let a = d.simple_root(i);
        assert_eq!(d.reflect_root(i, &a), -a);
    }
    let r = RootAff::new(&[1, 1], 0);
    assert_eq!(d.reflect_root(3, &r), RootAff::new(&[-1, -1], 2));
}
