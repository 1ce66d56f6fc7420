use tractlab_core::Unit;
use tractlab_matroids::fixtures::{fixture, CATALOG};
use tractlab_matroids::ops::{contract, delete};
use tractlab_matroids::{
    check_dual_pair, expand_matroid, gen_covectors, gen_vectors, inner_product, parallel_extend, series_extend,
    FVector, GenVector,
};

#[test]
fn series_and_parallel_extensions_are_dual_pairs() {
    for (name, ..) in CATALOG {
        let fm = fixture(name).unwrap();
        for e in fm.labels().to_vec() {
            let s = series_extend(&fm, &e).unwrap();
            assert!(check_dual_pair(&s).unwrap().holds, "{name} series at {e}");
            let p = parallel_extend(&fm, &e).unwrap();
            assert!(check_dual_pair(&p).unwrap().holds, "{name} parallel at {e}");

            let (a, b) = (format!("{e}a"), format!("{e}b"));
            assert_eq!(&s.labels()[s.len() - 2..], [a.clone(), b.clone()]);
            // The new cocircuit family (1, -1) on the pair.
            let n = s.len();
            let mut fam = vec![None; n];
            fam[n - 2] = Some(fm.carrier().one());
            fam[n - 1] = Some(fm.carrier().epsilon());
            assert!(s.cocircuits().vectors().contains(&FVector::new(fam)), "{name} at {e}");
            for c in s.circuits().vectors() {
                assert_eq!(c.get(n - 2), c.get(n - 1));
            }
            for d in p.cocircuits().vectors() {
                assert_eq!(d.get(n - 2), d.get(n - 1));
            }

            // Contracting one series element, or deleting one parallel element, undoes the extension.
            let back = s.matroid().contract(&b).unwrap().relabel(&a, &e).unwrap();
            assert_eq!(back.circuit_label_sets(), fm.matroid().circuit_label_sets());
            let back = p.matroid().delete(&b).unwrap().relabel(&a, &e).unwrap();
            assert_eq!(back.circuit_label_sets(), fm.matroid().circuit_label_sets());
            // Deleting a series element leaves the other as a coloop instead.
            let del = s.matroid().delete(&b).unwrap();
            assert!(del.is_coloop(del.index_of(&a).unwrap()));
        }
    }
}

#[test]
fn minors_of_fixtures_are_dual_pairs() {
    for (name, ..) in CATALOG {
        let fm = fixture(name).unwrap();
        for e in fm.labels().to_vec() {
            assert!(
                check_dual_pair(&delete(&fm, &e).unwrap()).unwrap().holds,
                "{name} \\ {e}"
            );
            assert!(
                check_dual_pair(&contract(&fm, &e).unwrap()).unwrap().holds,
                "{name} / {e}"
            );
        }
    }
}

#[test]
fn expansion_preserves_inner_products() {
    let fm = fixture("U12/S").unwrap();
    let c = fm.carrier().clone();
    let x = GenVector::new(vec![
        c.parse_terms(&["1", "-1"]).unwrap(),
        c.parse_terms(&["1"]).unwrap(),
    ]);
    for y in gen_covectors(&fm, 2).unwrap() {
        let ex = expand_matroid(&fm, &x, &y).unwrap();
        assert!(check_dual_pair(&ex.fmatroid).unwrap().holds);
        let before = inner_product(fm.tract(), &x, &y).unwrap();
        let after = inner_product(fm.tract(), &ex.x.to_gen(&c), &ex.y.to_gen(&c)).unwrap();
        assert_eq!(before, after, "{}", y.display(&c));
    }

    let y = GenVector::new(vec![c.parse_terms(&["1"]).unwrap(), c.parse_terms(&["1"]).unwrap()]);
    let ex = expand_matroid(&fm, &x, &y).unwrap();
    assert_eq!(ex.fmatroid.labels(), ["2", "1a", "1b"]);
    assert_eq!(ex.layout["1"], vec![vec!["1a".to_string(), "1b".to_string()]]);
    let a: Vec<_> = ["1a", "1b"]
        .iter()
        .map(|l| ex.x.get(ex.fmatroid.matroid().index_of(l).unwrap()))
        .collect();
    assert_eq!(a, vec![Some(Unit(0)), Some(Unit(1))]);
}

#[test]
fn expansions_of_generalized_pairs_are_vector_covector_pairs() {
    for name in ["U12/S", "U23/S", "U23/GF3"] {
        let fm = fixture(name).unwrap();
        let c = fm.carrier().clone();
        let vecs = gen_vectors(&fm, 2).unwrap();
        let covs = gen_covectors(&fm, 2).unwrap();
        for x in vecs.iter().step_by(7) {
            for y in covs.iter().step_by(11) {
                let ex = expand_matroid(&fm, x, y).unwrap();
                let m = &ex.fmatroid;
                let xg = ex.x.to_gen(&c);
                let yg = ex.y.to_gen(&c);
                assert!(tractlab_matroids::enumerate::is_gen_vector(m, &xg).unwrap(), "{name}");
                assert!(tractlab_matroids::enumerate::is_gen_covector(m, &yg).unwrap(), "{name}");
                assert_eq!(
                    inner_product(m.tract(), &xg, &yg).unwrap(),
                    inner_product(fm.tract(), x, y).unwrap()
                );
            }
        }
    }
}
