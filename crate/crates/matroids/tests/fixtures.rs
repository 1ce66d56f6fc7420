use tractlab_core::{Axiom, Unit};
use tractlab_matroids::fixtures::{canonical_signing, fixture, gf_tract, sign_tract, CATALOG};
use tractlab_matroids::{
    check_dual_pair, check_f_signature, covectors, gen_covectors, FMatroid, FSignature, FVector, GenVector, Matroid,
};

fn shown(fm: &FMatroid) -> (Vec<String>, Vec<String>) {
    let c = fm.carrier();
    (
        fm.circuits().vectors().iter().map(|v| v.display(c)).collect(),
        fm.cocircuits().vectors().iter().map(|v| v.display(c)).collect(),
    )
}

fn strs(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

#[test]
fn canonical_fixtures_are_frozen() {
    let expected: [(&str, &[&str], &[&str]); 6] = [
        ("U12/S", &["(1, -1)"], &["(1, 1)"]),
        ("U23/S", &["(1, -1, -1)"], &["(1, 1, 0)", "(1, 0, 1)", "(0, 1, -1)"]),
        (
            "U24/S",
            &["(1, -1, -1, 0)", "(1, -1, 0, 1)", "(1, 0, -1, -1)", "(0, 1, -1, -1)"],
            &["(1, 1, 1, 0)", "(1, 1, 0, 1)", "(1, 0, 1, -1)", "(0, 1, -1, 1)"],
        ),
        ("U12/GF2", &["(1, 1)"], &["(1, 1)"]),
        ("U23/GF3", &["(1, 2, 2)"], &["(1, 1, 0)", "(1, 0, 1)", "(0, 1, 2)"]),
        (
            "U24/GF3",
            &["(1, 1, 1, 0)", "(1, 2, 0, 1)", "(1, 0, 2, 2)", "(0, 1, 2, 1)"],
            &["(1, 1, 1, 0)", "(1, 2, 0, 1)", "(1, 0, 2, 2)", "(0, 1, 2, 1)"],
        ),
    ];
    assert_eq!(CATALOG.len(), expected.len());
    for (name, circuits, cocircuits) in expected {
        let fm = fixture(name).unwrap();
        assert!(check_dual_pair(&fm).unwrap().holds, "{name}");
        assert_eq!(shown(&fm), (strs(circuits), strs(cocircuits)), "{name}");
    }
}

#[test]
fn binary_u24_has_no_signing() {
    let m = Matroid::uniform(2, 4).unwrap();
    assert!(canonical_signing(&gf_tract(2), &m).unwrap().is_none());
}

#[test]
fn dual_pair_examples() {
    let one = FVector::new(vec![Some(Unit(0)), Some(Unit(0))]);
    let fm = FMatroid::new(
        gf_tract(2),
        Matroid::uniform(1, 2).unwrap(),
        vec![one.clone()],
        vec![one],
    )
    .unwrap();
    let r = check_dual_pair(&fm).unwrap();
    assert!(r.holds);
    assert_eq!(r.details["pairs_checked"], 1);

    let s = sign_tract();
    let u23 = Matroid::uniform(2, 3).unwrap();
    let missing = FSignature::new(u23.clone(), vec![], s.carrier()).unwrap();
    let r = check_f_signature(&missing, s.carrier());
    assert_eq!((r.axiom, r.holds), (Axiom::C2, false));

    let broken = FMatroid::from_parts(
        s.clone(),
        u23,
        vec![FVector::new(vec![Some(Unit(0)), Some(Unit(0)), Some(Unit(0))])],
        fixture("U23/S").unwrap().cocircuits().vectors().to_vec(),
    )
    .unwrap();
    let r = check_dual_pair(&broken).unwrap();
    assert_eq!((r.axiom, r.holds), (Axiom::DP3, false));
}

#[test]
fn representatives_suffice_for_orbits() {
    for (name, ..) in CATALOG {
        let fm = fixture(name).unwrap();
        let t = fm.tract();
        let c = fm.carrier();
        for x in fm.circuits().expanded(c) {
            for y in fm.cocircuits().expanded(c) {
                let p = tractlab_matroids::inner_product(t, &x.to_gen(c), &y.to_gen(c)).unwrap();
                assert!(t.is_null(&p).unwrap(), "{name}");
            }
        }
    }
}

#[test]
fn u12_sign_covectors() {
    let fm = fixture("U12/S").unwrap();
    let c = fm.carrier().clone();
    let cov: Vec<String> = covectors(&fm).unwrap().iter().map(|v| v.display(&c)).collect();
    assert_eq!(cov, strs(&["(0, 0)", "(1, 1)", "(-1, -1)"]));

    let gen = gen_covectors(&fm, 2).unwrap();
    let x = GenVector::new(vec![
        c.parse_terms(&["1", "-1"]).unwrap(),
        c.parse_terms(&["1"]).unwrap(),
    ]);
    assert!(gen.contains(&x));
    assert_eq!(gen[0], GenVector::zero(&c, 2));
}
