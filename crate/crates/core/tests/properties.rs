use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lkb::action::{lkb_word, BraidWord};
use lkb::arrangement::{build_facets, build_salvetti, random_arrangement, salvetti_h1, sign_less, signs_at, Point};
use lkb::linalg::RingMatrix;
use lkb::ring::LaurentPoly;
use lkb::verify::integral_round_trips;

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -3i64..=3, -3i64..=3), 0..5).prop_map(LaurentPoly::from_terms)
}

fn arb_word(n: usize) -> impl Strategy<Value = BraidWord> {
    let k = n as i64 - 1;
    prop::collection::vec((1..=k, any::<bool>()), 0..6)
        .prop_map(move |v| BraidWord::new(n, v.into_iter().map(|(g, s)| if s { g } else { -g }).collect()).unwrap())
}

fn midpoint(p: &Point, q: &Point) -> Point {
    let two = BigRational::from_integer(2.into());
    ((&p.0 + &q.0) / &two, (&p.1 + &q.1) / &two)
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        if let Ok(q) = (&a * &b).try_div_exact(&b) {
            prop_assert_eq!(q, Some(a));
        }
    }

    #[test]
    fn json_round_trip(a in arb_poly()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn word_times_inverse_is_identity(w in arb_word(4)) {
        let m = lkb_word(&w).unwrap();
        let inv = lkb_word(&w.inverse()).unwrap();
        prop_assert!(m.mul(&inv).unwrap().same_entries(&RingMatrix::identity(6)));
    }

    #[test]
    fn word_is_homomorphic(u in arb_word(3), v in arb_word(3)) {
        let mut uv = u.letters.clone();
        uv.extend(&v.letters);
        let joined = lkb_word(&BraidWord::new(3, uv).unwrap()).unwrap();
        prop_assert!(joined.same_entries(&lkb_word(&u).unwrap().mul(&lkb_word(&v).unwrap()).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// If `F < G` then the open segment from the representative of `F` to
    /// that of `G` lies in `G`; checked at the midpoint.
    #[test]
    fn closure_segments(seed in any::<u64>()) {
        let lines = random_arrangement(&mut ChaCha8Rng::seed_from_u64(seed), 5);
        let fc = build_facets(&lines).unwrap();
        fc.check().unwrap();
        for v in &fc.vertices {
            for e in fc.edges.iter().filter(|e| sign_less(&v.signs, &e.signs)) {
                prop_assert_eq!(&signs_at(&fc.lines, &midpoint(&v.point, &e.point)), &e.signs);
            }
        }
        for e in &fc.edges {
            for c in fc.chambers.iter().filter(|c| sign_less(&e.signs, &c.signs)) {
                prop_assert_eq!(&signs_at(&fc.lines, &midpoint(&e.point, &c.point)), &c.signs);
            }
            let (c, d) = e.chambers;
            prop_assert!(sign_less(&e.signs, &fc.chambers[c].signs) && sign_less(&e.signs, &fc.chambers[d].signs));
        }
        let sc = build_salvetti(&fc).unwrap();
        sc.check_counts().unwrap();
        prop_assert!(salvetti_h1(&sc).unwrap().passed(lines.len()));
    }

    #[test]
    fn integral_reduction(seed in any::<u64>()) {
        let failures = integral_round_trips(4, 2, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert!(failures.is_empty());
    }
}
