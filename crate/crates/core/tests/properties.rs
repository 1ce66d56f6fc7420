use proptest::prelude::*;

use tractlab_core::closure::{compare_null_sets, fusion_closure, sigma_closure_tract, truncate3};
use tractlab_core::{
    check_idyll, check_msf, hyperfield, phase, Axiom, FiniteRing, FormalSum, NullOracle, PartialField, Tract, Unit,
};

fn tracts() -> Vec<Tract> {
    let s = hyperfield::sign();
    vec![
        hyperfield::tract_of(&s),
        hyperfield::tract_of(&hyperfield::product(&s, &s)),
        PartialField::all_units(FiniteRing::gf(3).unwrap())
            .unwrap()
            .tract_embedding(),
        PartialField::all_units(FiniteRing::gf(5).unwrap())
            .unwrap()
            .tract_embedding(),
        phase::p_prime(phase::quarter_turns()),
    ]
}

fn sum_strategy(units: usize, max_norm: u32) -> impl Strategy<Value = FormalSum> {
    prop::collection::vec(0..units as u16, 0..=max_norm as usize)
        .prop_map(move |terms| FormalSum::from_terms(units, &terms.into_iter().map(Unit).collect::<Vec<_>>()).unwrap())
}

fn tract_and_sums(k: usize, max_norm: u32) -> impl Strategy<Value = (usize, Vec<FormalSum>, u16)> {
    (0..tracts().len()).prop_flat_map(move |i| {
        let units = tracts()[i].carrier().n_units();
        (
            Just(i),
            prop::collection::vec(sum_strategy(units, max_norm), k),
            0..units as u16,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn semiring_laws((i, sums, u) in tract_and_sums(3, 4)) {
        let t = &tracts()[i];
        let c = t.carrier();
        let (a, b, d) = (&sums[0], &sums[1], &sums[2]);
        prop_assert_eq!(&(a + b) + d, a + &(b + d));
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!((a + b).norm(), a.norm() + b.norm());
        let u = Unit(u);
        prop_assert_eq!(c.scale(u, &(a + b)), &c.scale(u, a) + &c.scale(u, b));
        prop_assert_eq!(c.scale(u, a).norm(), a.norm());
        prop_assert_eq!(c.negate(&c.negate(a)), a.clone());
        prop_assert_eq!(c.mul_sums(a, &(b + d)), &c.mul_sums(a, b) + &c.mul_sums(a, d));
    }

    #[test]
    fn null_sets_are_unit_invariant((i, sums, u) in tract_and_sums(1, 6)) {
        let t = &tracts()[i];
        let a = &sums[0];
        let scaled = t.carrier().scale(Unit(u), a);
        prop_assert_eq!(t.is_null(a).unwrap(), t.is_null(&scaled).unwrap());
    }

    #[test]
    fn idylls_are_closed_under_sums_and_products((i, sums, _u) in tract_and_sums(2, 3)) {
        let t = &tracts()[i];
        prop_assume!(check_idyll(t, 6).unwrap().holds);
        let (a, b) = (&sums[0], &sums[1]);
        if t.is_null(a).unwrap() && t.is_null(b).unwrap() {
            prop_assert!(t.is_null(&(a + b)).unwrap());
        }
        let prod = t.carrier().mul_sums(a, b);
        if t.is_null(b).unwrap() && prod.norm() <= 6 {
            prop_assert!(t.is_null(&prod).unwrap());
        }
    }

    #[test]
    fn hypersums_are_order_independent(xs in prop::collection::vec(0usize..9, 1..6), seed in any::<u64>()) {
        let s = hyperfield::sign();
        let h = hyperfield::product(&s, &s);
        let mut shuffled = xs.clone();
        let n = shuffled.len();
        for k in (1..n).rev() {
            let j = (seed as usize).wrapping_mul(k + 7) % (k + 1);
            shuffled.swap(k, j);
        }
        prop_assert_eq!(h.hypersum_many(&xs), h.hypersum_many(&shuffled));
    }
}

#[test]
fn fusion_closure_is_monotone_in_bound() {
    for t in tracts() {
        let p = truncate3(&t).unwrap();
        let small = fusion_closure(&p, 4).unwrap();
        let large = fusion_closure(&p, 5).unwrap();
        for s in small.members() {
            assert!(large.contains(s));
        }
        for s in large.members().filter(|s| s.norm() <= 4) {
            assert!(small.contains(s));
        }
    }
}

#[test]
fn sigma_fixes_msf_tracts() {
    for t in tracts() {
        if check_msf(&t, 5).unwrap().holds {
            let sig = sigma_closure_tract(&t, 5).unwrap();
            let r = compare_null_sets(Axiom::SigmaFixedPoint, &t, &sig, 5).unwrap();
            assert!(r.holds, "{}: {r:?}", t.name());
        }
    }
}

#[test]
fn sigma_closures_satisfy_msf() {
    for t in tracts() {
        let sig = sigma_closure_tract(&t, 5).unwrap();
        assert!(check_msf(&sig, 5).unwrap().holds, "{}", t.name());
        // Sigma only adds sums.
        let r = compare_null_sets(Axiom::ClosureComparison, &t, &sig, 5).unwrap();
        assert_eq!(r.details["only_first"], 0);
    }
}
