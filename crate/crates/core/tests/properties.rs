mod common;

use std::collections::HashSet;

use asmlat_core::enumerate::{genfun_stat_over, Universe};
use asmlat_core::oracle;
use asmlat_core::poset::{self, compare, covers_down, covers_up, PosetOrdering};
use asmlat_core::stats::{self, local_weak_contribution};
use asmlat_core::{
    count_formula, from_corner_sum, genfun_stat, Asm, CornerSumMatrix, Permutation, Stat,
    DEFAULT_GUARD,
};
use common::{all, walk_up};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

#[test]
fn corner_sum_round_trip_and_invariants() {
    for n in 1..=5 {
        for a in all(n) {
            let c = a.corner_sum();
            assert_eq!(CornerSumMatrix::new(&c.to_rows()).as_ref(), Ok(&c));
            assert_eq!(from_corner_sum(&c).unwrap(), a);
        }
    }
}

#[test]
fn transpose_and_dual_are_involutions() {
    for n in 1..=5 {
        for a in all(n) {
            let (t, d) = (a.transpose(), a.dual());
            assert_eq!(Asm::from_flat(n, t.entries()).as_ref(), Ok(&t));
            assert_eq!(Asm::from_flat(n, d.entries()).as_ref(), Ok(&d));
            assert_eq!(t.transpose(), a);
            assert_eq!(d.dual(), a);
            assert_eq!(t.minus_count(), a.minus_count());
            assert_eq!(d.minus_count(), a.minus_count());
        }
    }
}

#[test]
fn permutation_matrices_validate() {
    for n in 1..=6 {
        for w in Permutation::all(n) {
            let a = Asm::from_permutation(&w);
            assert_eq!(Asm::validate(&a.to_rows()).as_ref(), Ok(&a));
            assert_eq!(a.to_permutation().unwrap(), w);
        }
    }
}

#[test]
fn dual_inversions_are_inversions_of_the_dual() {
    for n in 1..=5 {
        for a in all(n) {
            assert_eq!(
                stats::dual_inversion_number(&a),
                stats::inversion_number(&a.dual())
            );
        }
    }
}

#[test]
fn local_contributions_sum_to_weak_inversion() {
    for n in 1..=5 {
        for a in all(n) {
            let mut quarters = 0;
            for p in 1..=n {
                for q in 1..=n {
                    quarters += local_weak_contribution(&a, p, q).unwrap().quarters();
                }
            }
            assert_eq!(quarters, 2 * stats::weak_inversion(&a).halves());
        }
    }
}

#[test]
fn inversion_bounded_by_beta() {
    for n in 1..=6 {
        for a in all(n) {
            let r = stats::stat_record(&a);
            assert!(r.inv <= r.beta);
            assert!(r.weak2 >= 0);
        }
    }
}

#[test]
fn permutation_beta_matches_double_loop() {
    for n in 1..=7 {
        for w in Permutation::all(n) {
            let a = Asm::from_permutation(&w);
            assert_eq!(stats::beta_weighted(&a), oracle::permutation_beta(&w));
            assert_eq!(stats::inversion_number(&a), w.inversions() as i64);
        }
    }
}

#[test]
fn three_beta_formulas_on_random_permutations() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=50);
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(&mut rng);
        let w = Permutation::new(images).unwrap();
        let a = Asm::from_permutation(&w);
        let b = stats::beta_corner(&a);
        assert_eq!(stats::beta_weighted(&a), b);
        assert_eq!(stats::beta_row_weighted(&a), b);
        assert_eq!(oracle::permutation_beta(&w), b);
    }
}

#[test]
fn rank_by_chain_equals_beta() {
    for n in 1..=5 {
        for a in all(n) {
            assert_eq!(poset::rank_by_chain(&a), stats::beta(&a));
        }
    }
}

#[test]
fn dual_reverses_order() {
    for n in 1..=4 {
        let xs = all(n);
        for a in &xs {
            for b in &xs {
                let forward = compare(a, b).unwrap() == PosetOrdering::Less;
                let back = compare(&b.dual(), &a.dual()).unwrap() == PosetOrdering::Less;
                assert_eq!(forward, back);
            }
        }
    }
}

#[test]
fn transpose_preserves_order() {
    for n in 1..=4 {
        let xs = all(n);
        for a in &xs {
            for b in &xs {
                assert_eq!(
                    compare(a, b).unwrap(),
                    compare(&a.transpose(), &b.transpose()).unwrap()
                );
            }
        }
    }
}

#[test]
fn compare_is_antisymmetric() {
    let xs = all(4);
    for a in &xs {
        for b in &xs {
            let ab = compare(a, b).unwrap();
            let ba = compare(b, a).unwrap();
            let flipped = match ab {
                PosetOrdering::Less => PosetOrdering::Greater,
                PosetOrdering::Greater => PosetOrdering::Less,
                other => other,
            };
            assert_eq!(ba, flipped);
            assert_eq!(ab == PosetOrdering::Equal, a == b);
        }
    }
}

#[test]
fn cover_types_dualize() {
    for n in 2..=4 {
        for a in all(n) {
            for e in covers_up(&a) {
                let dual = poset::try_cover(&e.upper.dual(), &e.lower.dual()).unwrap();
                assert_eq!(dual.cover_type, e.cover_type.dual());
                assert_eq!(dual.r, n - e.r);
                assert_eq!(dual.s, e.s);
                // H(B*) - H(A*) = -(H(B) - H(A)) along the reversed pair.
                let h = |x: &Asm| stats::weak_inversion(x).halves();
                assert_eq!(
                    h(&e.upper.dual()) - h(&e.lower.dual()),
                    -(h(&e.upper) - h(&e.lower))
                );
                assert_eq!(dual.deltas().d_weak2, e.deltas().d_weak2);
            }
        }
    }
}

#[test]
fn covers_up_and_down_agree() {
    for n in 1..=5 {
        let xs = all(n);
        let mut up = HashSet::new();
        let mut down = HashSet::new();
        for a in &xs {
            for e in covers_up(a) {
                up.insert((e.lower.clone(), e.upper.clone(), e.r, e.s, e.cover_type));
            }
            for e in covers_down(a) {
                down.insert((e.lower.clone(), e.upper.clone(), e.r, e.s, e.cover_type));
            }
        }
        assert_eq!(up, down);
    }
}

#[test]
fn beta_generating_function_is_palindromic() {
    for n in 1..=6 {
        let p = genfun_stat(n, Stat::Beta, DEFAULT_GUARD).unwrap();
        assert!(p.is_palindromic(), "n={n}: {p}");
        assert_eq!(p.eval_at_one(), BigInt::from(count_formula(n)));
    }
}

#[test]
fn inversion_generating_function_is_not_palindromic_at_three() {
    let p = genfun_stat(3, Stat::Inversions, DEFAULT_GUARD).unwrap();
    assert!(!p.is_palindromic());
}

#[test]
fn permutation_inversions_generating_function() {
    for n in 1..=7 {
        let p = genfun_stat_over(n, Stat::Inversions, Universe::Perm, DEFAULT_GUARD).unwrap();
        assert_eq!(p, oracle::inversion_product(n));
    }
}

#[test]
fn generating_functions_evaluate_to_counts() {
    for n in 1..=6 {
        for stat in [Stat::Inversions, Stat::Weak, Stat::Beta] {
            let p = genfun_stat(n, stat, DEFAULT_GUARD).unwrap();
            assert_eq!(p.eval_at_one(), BigInt::from(count_formula(n)));
        }
    }
}

proptest! {
    #[test]
    fn random_asms_satisfy_identities(n in 1usize..9, picks in proptest::collection::vec(0usize..16, 0..40)) {
        let a = walk_up(n, &picks);
        let r = stats::stat_record(&a);
        prop_assert_eq!(from_corner_sum(&a.corner_sum()).unwrap(), a.clone());
        prop_assert_eq!(r.inv + r.dual_inv - r.minus, (n * (n - 1) / 2) as i64);
        prop_assert_eq!(stats::beta_weighted(&a), r.beta);
        prop_assert_eq!(stats::beta_row_weighted(&a), r.beta);
        prop_assert_eq!(stats::beta(&a.transpose()), r.beta);
        prop_assert_eq!(poset::rank_by_chain(&a), r.beta);
        prop_assert!(r.inv <= r.beta);
        prop_assert!(r.weak2 >= 0);
    }

    #[test]
    fn join_and_meet_bound_their_arguments(n in 1usize..7,
        p in proptest::collection::vec(0usize..16, 0..30),
        q in proptest::collection::vec(0usize..16, 0..30)) {
        let a = walk_up(n, &p);
        let b = walk_up(n, &q);
        let j = poset::join(&a, &b).unwrap();
        let m = poset::meet(&a, &b).unwrap();
        prop_assert!(poset::le(&a, &j).unwrap() && poset::le(&b, &j).unwrap());
        prop_assert!(poset::le(&m, &a).unwrap() && poset::le(&m, &b).unwrap());
        prop_assert_eq!(poset::join(&a, &m).unwrap(), a.clone());
        prop_assert_eq!(poset::meet(&a, &j).unwrap(), a);
    }
}
