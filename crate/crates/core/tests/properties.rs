use proptest::prelude::*;

use hochschild_core::decomposition::{decompose, DecomposeOptions};
use hochschild_core::hochschild::{hc, hh, sc_hh, ScAlgebra};
use hochschild_core::linalg::{Field, SparseMatrix};
use hochschild_core::quiver::algebra::all_paths_of_length;
use hochschild_core::quiver::cycles::canonical_rotation;
use hochschild_core::quiver::{cycle_orbits, proper_cycle_orbits, MonomialAlgebra, Quiver};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mobius(mut n: usize) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        -sign
    } else {
        sign
    }
}

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// A small quiver with paths of length 3 killed and some length-2 relations.
fn monomial_algebra() -> impl Strategy<Value = MonomialAlgebra> {
    (1usize..=3)
        .prop_flat_map(|v| (Just(v), prop::collection::vec((0..v, 0..v), 1..=3)))
        .prop_flat_map(|(v, arrows)| {
            let q = Quiver::from_indices(v, &arrows);
            let twos = all_paths_of_length(&q, 2);
            let picks = prop::collection::vec(any::<bool>(), twos.len());
            (Just(q), Just(twos), picks)
        })
        .prop_map(|(q, twos, picks)| {
            let mut rels = all_paths_of_length(&q, 3);
            rels.extend(
                twos.into_iter()
                    .zip(picks)
                    .filter(|(_, keep)| *keep)
                    .map(|(p, _)| p),
            );
            MonomialAlgebra::new(q, rels, Field::Rational).expect("finite by construction")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rotation_canonicalization(word in prop::collection::vec(0usize..3, 1..8), k in 0usize..8) {
        let k = k % word.len();
        let mut rotated = word[k..].to_vec();
        rotated.extend_from_slice(&word[..k]);
        prop_assert_eq!(canonical_rotation(&word), canonical_rotation(&rotated));
        let c = canonical_rotation(&word);
        prop_assert_eq!(canonical_rotation(&c), c);
    }

    #[test]
    fn two_loop_necklaces(q in 1usize..=8) {
        let two_loops = Quiver::from_indices(1, &[(0, 0), (0, 0)]);
        let burnside: usize = (0..q).map(|k| 1usize << gcd(k, q)).sum::<usize>() / q;
        prop_assert_eq!(cycle_orbits(&two_loops, q).count(), burnside);
        let lyndon: i64 = (1..=q).filter(|d| q % d == 0).map(|d| mobius(d) * (1i64 << (q / d))).sum::<i64>() / q as i64;
        prop_assert_eq!(proper_cycle_orbits(&two_loops, q).count() as i64, lyndon);
    }

    #[test]
    fn proper_orbits_bounded(v in 1usize..=3, arrows in prop::collection::vec((0usize..3, 0usize..3), 1..=4), r in 1usize..=5) {
        let arrows: Vec<_> = arrows.into_iter().map(|(s, t)| (s % v, t % v)).collect();
        let q = Quiver::from_indices(v, &arrows);
        prop_assert!(proper_cycle_orbits(&q, r).count() <= cycle_orbits(&q, r).count());
    }

    #[test]
    fn rank_of_transpose(rows in matrix(6)) {
        for field in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
            let m = SparseMatrix::from_dense(&rows, field);
            prop_assert_eq!(m.rank(field), m.transpose().rank(field));
        }
    }

    #[test]
    fn rational_rank_dominates(rows in matrix(6)) {
        let q = SparseMatrix::from_dense(&rows, Field::Rational).rank(Field::Rational);
        for p in [2, 3, 5] {
            let field = Field::Prime(p);
            prop_assert!(SparseMatrix::from_dense(&rows, field).rank(field) <= q);
        }
    }

    #[test]
    fn rank_permutation_invariant((rows, rp, cp) in matrix(6).prop_flat_map(|m| {
        let (r, c) = (m.len(), m[0].len());
        (Just(m), permutation(r), permutation(c))
    })) {
        let m = SparseMatrix::from_dense(&rows, Field::Rational);
        prop_assert_eq!(m.permute(&rp, &cp).rank(Field::Rational), m.rank(Field::Rational));
    }

    #[test]
    fn routes_agree(a in monomial_algebra()) {
        let direct = hh(&a, 2).unwrap().total;
        let opts = DecomposeOptions { use_formula: false, ..DecomposeOptions::default() };
        let dec = decompose(&a, 2, &opts).unwrap();
        prop_assert_eq!(&direct[1..], &dec.hh[1..]);
        let direct_hc = hc(&a, 2).unwrap().total;
        prop_assert_eq!(&direct_hc[1..], &dec.hc().unwrap()[1..]);
        prop_assert_eq!(&sc_hh(&ScAlgebra::from_monomial(&a), 2).unwrap(), &direct);
    }
}
