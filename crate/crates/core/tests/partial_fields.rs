use tractlab_core::closure::{fusion_closure, truncate3};
use tractlab_core::partial_field::{compare_closure_with_embedding, RingError};
use tractlab_core::{check_strong_fusion, FiniteRing, PartialField};

fn field(p: usize) -> PartialField {
    PartialField::new(FiniteRing::gf(p).unwrap(), &[1]).unwrap()
}

#[test]
fn groups_from_generators() {
    assert_eq!(field(3).group(), &[1, 2]);
    let z6 = FiniteRing::zmod(6).unwrap();
    assert_eq!(PartialField::new(z6.clone(), &[5]).unwrap().group(), &[1, 5]);
    assert_eq!(
        PartialField::new(z6.clone(), &[2]).unwrap_err(),
        RingError::NotUnit("2".into())
    );
    let g2 = field(2);
    assert_eq!(g2.group(), &[1]);
    assert_eq!(g2.carrier().epsilon(), g2.carrier().one());
    let g7 = PartialField::new(FiniteRing::gf(7).unwrap(), &[2]).unwrap();
    assert_eq!(g7.group(), &[1, 2, 3, 4, 5, 6]);
}

#[test]
fn pasture_and_embedding_examples() {
    let g3 = field(3);
    let c3 = g3.carrier().clone();
    assert!(g3.pasture_null(&c3.parse_terms(&["1", "1", "1"]).unwrap()).unwrap());
    assert!(g3.pasture_null(&c3.parse_terms(&["1", "2"]).unwrap()).unwrap());
    let g2 = field(2);
    let c2 = g2.carrier().clone();
    assert!(!g2.pasture_null(&c2.parse_terms(&["1", "1", "1"]).unwrap()).unwrap());

    let t2 = g2.tract_embedding();
    assert!(t2.is_null(&c2.parse_terms(&["1", "1", "1", "1"]).unwrap()).unwrap());
    assert!(t2.is_null(&c2.empty_sum()).unwrap());
    let t3 = g3.tract_embedding();
    assert!(!t3.is_null(&c3.parse_terms(&["1", "1", "2"]).unwrap()).unwrap());
}

#[test]
fn embeddings_satisfy_strong_fusion() {
    for p in [2, 3, 5] {
        assert!(
            check_strong_fusion(&field(p).tract_embedding(), 6).unwrap().holds,
            "GF({p})"
        );
    }
    let z6 = PartialField::all_units(FiniteRing::zmod(6).unwrap()).unwrap();
    assert!(check_strong_fusion(&z6.tract_embedding(), 6).unwrap().holds);
}

#[test]
fn truncation_reproduces_pasture_nullity() {
    for p in [2, 3, 5, 7] {
        let f = field(p);
        let t = truncate3(&f.tract_embedding()).unwrap();
        for s in tractlab_core::space::SumSpace::new(f.carrier(), 3).unwrap().sums() {
            assert_eq!(t.contains(s), f.pasture_null(s).unwrap());
        }
    }
}

#[test]
fn closure_is_sound() {
    for p in [2, 3, 5] {
        let f = field(p);
        let closed = fusion_closure(&f.pasture(), 5).unwrap();
        let t = f.tract_embedding();
        for s in closed.members() {
            assert!(t.is_null(s).unwrap());
        }
        let r = compare_closure_with_embedding(&f, 5).unwrap();
        assert_eq!(r.details["only_first"], 0);
    }
}
