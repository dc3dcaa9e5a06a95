use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use tverberg::chessboard::{act_row_permutation, build_chessboard, orient, ChessboardSpec, RowPermutation};
use tverberg::constraints::{constrain_complex, is_unavoidable, Multiset};
use tverberg::geometry::{hulls_intersect, verify_certificate, Point, PointConfig, Rational};
use tverberg::maps::{collapse_spec, degree_by_counting_at, degree_formula, CollapseTheta};
use tverberg::simplicial::{build_complex, link, Complex, Simplex};

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn caps_strategy(max_total: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=3usize, 1..=4).prop_filter("total too large", move |c| c.iter().sum::<usize>() <= max_total)
}

fn complex_strategy(n: usize) -> impl Strategy<Value = Complex> {
    prop::collection::vec(prop::collection::btree_set(0..n, 1..=n), 1..=5)
        .prop_map(move |fs| build_complex(0..n, fs.into_iter().map(|f| f.into_iter().collect::<Vec<_>>())).unwrap())
}

fn all_faces(k: &Complex) -> Vec<Simplex> {
    k.faces_by_dim().into_iter().flatten().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn link_faces_are_exactly_the_complements(k in complex_strategy(6)) {
        let faces: BTreeSet<Simplex> = all_faces(&k).into_iter().collect();
        for s in faces.iter().filter(|s| !s.is_empty()) {
            let l = link(&k, s).unwrap();
            for t in all_faces(&l) {
                prop_assert!(t.is_disjoint(s));
                prop_assert!(faces.contains(&t.union(s)));
            }
            for f in &faces {
                if s.is_subset_of(f) {
                    prop_assert!(l.contains_face(&f.difference(s)));
                }
            }
        }
    }

    #[test]
    fn pseudomanifold_facet_count(caps in caps_strategy(6)) {
        let spec = ChessboardSpec::pseudomanifold(caps.clone()).unwrap();
        let denom: u128 = caps.iter().map(|&l| factorial(l)).product();
        prop_assert_eq!(build_chessboard(&spec).facets().len() as u128, factorial(spec.n()) / denom);
    }

    #[test]
    fn row_permutations_act_by_their_sign(caps in caps_strategy(5), seed in any::<u64>()) {
        let spec = ChessboardSpec::pseudomanifold(caps).unwrap();
        let n = spec.n();
        let mut images: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            images.swap(i, (state >> 33) as usize % (i + 1));
        }
        let g = RowPermutation::from_images(images).unwrap();
        let k = build_chessboard(&spec);
        let tau = orient(&spec).unwrap();
        prop_assert_eq!(act_row_permutation(&k, &spec, &g, &tau).unwrap().sign, g.sign());
    }

    #[test]
    fn degree_is_independent_of_target_facet(
        caps in caps_strategy(6),
        assignment in prop::collection::vec(0..3usize, 4),
        pick in any::<prop::sample::Index>(),
    ) {
        let raw = &assignment[..caps.len()];
        let mut relabel = Vec::new();
        let rgs: Vec<usize> = raw
            .iter()
            .map(|x| relabel.iter().position(|y| y == x).unwrap_or_else(|| {
                relabel.push(*x);
                relabel.len() - 1
            }))
            .collect();
        let theta = CollapseTheta::new(rgs).unwrap();
        let source = ChessboardSpec::pseudomanifold(caps.clone()).unwrap();
        let target = build_chessboard(&collapse_spec(&theta, &source).unwrap());
        let facet = pick.get(target.facets());
        let counted = degree_by_counting_at(&theta, &source, facet).unwrap();
        prop_assert_eq!(counted, BigInt::from(degree_formula(&caps, &theta).unwrap()));
    }

    #[test]
    fn unavoidability_is_monotone(k in complex_strategy(5), extra in prop::collection::btree_set(0..5usize, 1..=5),
                                  weights in prop::collection::vec(1..=2usize, 5), r in 2..=3usize) {
        let v = Multiset::from_weights(&weights).unwrap();
        let mut facets: Vec<Vec<usize>> = k.facets().iter().map(|f| f.vertices().to_vec()).collect();
        facets.push(extra.into_iter().collect());
        let bigger = build_complex(0..5, facets).unwrap();
        if is_unavoidable(&k, r, &v).unwrap().unavoidable {
            prop_assert!(is_unavoidable(&bigger, r, &v).unwrap().unavoidable);
        }
    }

    #[test]
    fn constraining_composes(k in complex_strategy(7), split in 1..6usize, a_size in 1..3usize, b_size in 1..3usize) {
        let a = Simplex::new((split.saturating_sub(a_size)..split).collect());
        let b = Simplex::new((split..(split + b_size).min(7)).collect());
        let once = constrain_complex(&k, &[a.clone(), b.clone()]).unwrap();
        let twice = constrain_complex(&constrain_complex(&k, &[a]).unwrap(), &[b]).unwrap();
        let key = |c: &Complex| (c.universe().clone(), c.facets().iter().cloned().collect::<BTreeSet<_>>());
        prop_assert_eq!(key(&once), key(&twice));
    }

    #[test]
    fn reported_intersections_carry_valid_certificates(
        coords in prop::collection::vec((-4i64..=4, -4i64..=4), 6),
        sizes in prop::collection::vec(1..=3usize, 2..=3),
    ) {
        let points = coords
            .iter()
            .map(|&(x, y)| Point::new(vec![Rational::integer(x), Rational::integer(y)], 0, 1))
            .collect();
        let config = PointConfig::new(2, points).unwrap();
        let mut next = 0;
        let faces: Vec<Simplex> = sizes
            .iter()
            .map(|&s| {
                let f = Simplex::new((next..next + s).map(|i| i % 6).collect());
                next += s;
                f
            })
            .collect();
        if let Some(hit) = hulls_intersect(&config, &faces) {
            prop_assert!(verify_certificate(&config, &faces, &hit.witness, &hit.certificates));
            let mut moved = hit.witness.clone();
            moved[0] = Rational(&moved[0].0 + num_rational::BigRational::from_integer(100.into()));
            prop_assert!(!verify_certificate(&config, &faces, &moved, &hit.certificates));
        }
    }
}
