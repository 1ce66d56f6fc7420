//! Independent brute-force counts of generalized (co)vectors, written
//! directly against the nullity rules (sign: empty or both signs present;
//! GF(3): the integer sum vanishes mod 3) rather than through tract oracles.

use tractlab_matroids::fixtures::fixture;
use tractlab_matroids::{gen_covectors, gen_vectors};

/// Formal sums over two units with norm `≤ bound`, as `(count of unit 0, count of unit 1)`.
fn two_unit_sums(bound: u32) -> Vec<(u32, u32)> {
    (0..=bound).flat_map(|t| (0..=t).map(move |a| (a, t - a))).collect()
}

fn tuples(bound: u32, n: usize) -> Vec<Vec<(u32, u32)>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                two_unit_sums(bound).into_iter().map(move |s| {
                    let mut q = p.clone();
                    q.push(s);
                    q
                })
            })
            .collect();
    }
    out
}

fn sign_orthogonal(x: &[(u32, u32)], rep: &[i8]) -> bool {
    let (mut plus, mut minus) = (0, 0);
    for (&(p, n), &r) in x.iter().zip(rep) {
        match r {
            1 => (plus, minus) = (plus + p, minus + n),
            -1 => (plus, minus) = (plus + n, minus + p),
            _ => {}
        }
    }
    (plus == 0 && minus == 0) || (plus > 0 && minus > 0)
}

fn gf3_orthogonal(x: &[(u32, u32)], rep: &[u32]) -> bool {
    x.iter()
        .zip(rep)
        .map(|(&(one, two), &r)| (one + 2 * two) * r)
        .sum::<u32>()
        % 3
        == 0
}

fn count<R>(bound: u32, reps: &[R], ortho: impl Fn(&[(u32, u32)], &R) -> bool, n: usize) -> usize {
    tuples(bound, n)
        .iter()
        .filter(|x| reps.iter().all(|r| ortho(x, r)))
        .count()
}

type SignedFixture = (&'static str, Vec<Vec<i8>>, Vec<Vec<i8>>);

#[test]
fn sign_counts_match_brute_force() {
    let cases: [SignedFixture; 3] = [
        ("U12/S", vec![vec![1, -1]], vec![vec![1, 1]]),
        (
            "U23/S",
            vec![vec![1, -1, -1]],
            vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, -1]],
        ),
        (
            "U24/S",
            vec![
                vec![1, -1, -1, 0],
                vec![1, -1, 0, 1],
                vec![1, 0, -1, -1],
                vec![0, 1, -1, -1],
            ],
            vec![vec![1, 1, 1, 0], vec![1, 1, 0, 1], vec![1, 0, 1, -1], vec![0, 1, -1, 1]],
        ),
    ];
    for (name, circuits, cocircuits) in cases {
        let fm = fixture(name).unwrap();
        let n = fm.len();
        for b in 1..=2 {
            let vecs = count(b, &cocircuits, |x, r| sign_orthogonal(x, r), n);
            let covs = count(b, &circuits, |x, r| sign_orthogonal(x, r), n);
            assert_eq!(gen_vectors(&fm, b).unwrap().len(), vecs, "{name} vectors at {b}");
            assert_eq!(gen_covectors(&fm, b).unwrap().len(), covs, "{name} covectors at {b}");
        }
    }
}

#[test]
fn gf3_counts_match_brute_force() {
    let fm = fixture("U23/GF3").unwrap();
    let circuits = vec![vec![1, 2, 2]];
    let cocircuits = vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 2]];
    for b in 1..=2 {
        assert_eq!(
            gen_vectors(&fm, b).unwrap().len(),
            count(b, &cocircuits, |x, r| gf3_orthogonal(x, r), 3)
        );
        assert_eq!(
            gen_covectors(&fm, b).unwrap().len(),
            count(b, &circuits, |x, r| gf3_orthogonal(x, r), 3)
        );
    }
}

#[test]
fn frozen_counts() {
    // (fixture, coord bound, |vectors|, |covectors|), cross-checked by the brute force above.
    let expected = [
        ("U12/S", 2, 20, 20),
        ("U23/S", 2, 60, 164),
        ("U24/S", 2, 656, 656),
        ("U23/GF3", 2, 24, 72),
        ("U12/GF2", 2, 5, 5),
        ("U24/GF3", 2, 144, 144),
    ];
    for (name, b, v, cv) in expected {
        let fm = fixture(name).unwrap();
        assert_eq!(gen_vectors(&fm, b).unwrap().len(), v, "{name}");
        assert_eq!(gen_covectors(&fm, b).unwrap().len(), cv, "{name}");
    }
}

#[test]
fn enumeration_order_is_norm_lex_per_coordinate() {
    let fm = fixture("U12/S").unwrap();
    let covs = gen_covectors(&fm, 2).unwrap();
    let keys: Vec<_> = covs.iter().map(|v| v.entries().to_vec()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}
