//! Structural laws of complexes, reduction, homology and tensor products,
//! checked on small random inputs.

mod common;

use std::collections::BTreeMap;

use cfk::complex::{a0_minus, mirror, truncate, validate, validate_flevel, validate_with, FreeUComplex};
use cfk::invariants::{alexander_from_complex, d1, graded_homology, tau, HomologySummary};
use cfk::reduction::{class_profile, reduce, reduce_level, reduce_level_random, tower_profile, ReduceOptions};
use cfk::staircase::{staircase_complex, staircase_from_alexander, Staircase};
use cfk::tensor::tensor_free;
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn knot(index: usize, seed: u64) -> FreeUComplex {
    let knots = small_knots();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    scramble(&knots[index % knots.len()], 5, &mut rng)
}

fn steps() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=4, 0..=5)
}

/// F₂-dimension of the module described by `h` in grading `m`.
fn predicted_dim(h: &HomologySummary, m: i64) -> usize {
    let towers = h.free_towers.iter().filter(|&&t| t >= m && (t - m) % 2 == 0).count();
    let torsion = h.torsion.iter().filter(|&&(t, k)| t >= m && (t - m) % 2 == 0 && (t - m) / 2 < k as i64).count();
    towers + torsion
}

fn check_against_brute(c: &FreeUComplex, h: &HomologySummary, keep: impl Fn(usize, u32) -> bool + Copy) {
    const DEPTH: u32 = 12;
    let top = c.generators().iter().map(|g| g.maslov).max().unwrap_or(0);
    for m in (top - 2 * DEPTH as i64 + 2)..=top {
        assert_eq!(brute_homology(c, DEPTH, m, keep), predicted_dim(h, m), "grading {m} of {c:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scrambled_complexes_stay_valid(i in 0usize..64, seed in any::<u64>()) {
        let c = knot(i, seed);
        prop_assert!(validate(&c).passes(), "{}", validate(&c));
        prop_assert_eq!(c.differential().checked_mul(c.differential()).unwrap().nnz(), 0);
        prop_assert_eq!(mirror(&mirror(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn reduction_is_a_valid_order_independent_retract(i in 0usize..64, seed in any::<u64>()) {
        let c = knot(i, seed);
        prop_assert!(c.len() <= 12);
        let depth = 4 * c.max_alexander().max(0) as u32 + 6;
        let t = truncate(&c, depth);
        let canonical = reduce_level(t.clone());
        let report = validate_flevel(&canonical);
        prop_assert!(report.passes(), "{}", report);
        prop_assert!(canonical.horizontal_arrows().is_empty());

        // Cancellation removes pairs at a single Alexander level.
        let mut drop: BTreeMap<i64, i64> = BTreeMap::new();
        for (&(a, _), &n) in &t.graded_ranks() {
            *drop.entry(a).or_default() += n as i64;
        }
        for (&(a, _), &n) in &canonical.graded_ranks() {
            *drop.entry(a).or_default() -= n as i64;
        }
        prop_assert!(drop.values().all(|d| d % 2 == 0 && *d >= 0));

        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let w = canonical.stable_window();
        let clip = |p: Vec<(i64, i64)>| p.into_iter().take_while(|&(a, _)| a >= w).collect::<Vec<_>>();
        for _ in 0..3 {
            let other = reduce_level_random(t.clone(), &mut rng);
            prop_assert!(validate_flevel(&other).passes());
            prop_assert!(other.horizontal_arrows().is_empty());
            prop_assert_eq!(other.graded_ranks(), canonical.graded_ranks());
            prop_assert_eq!(clip(class_profile(&other).unwrap()), clip(class_profile(&canonical).unwrap()));
        }
    }

    #[test]
    fn tower_matches_staircase_levels(steps in steps()) {
        let s = Staircase::new(steps.clone()).unwrap();
        let r = reduce(&staircase_complex(&s, false), &ReduceOptions::default()).unwrap();
        let profile: BTreeMap<i64, i64> = tower_profile(&r).unwrap().into_iter().map(|(a, m)| (m, a)).collect();
        let n = steps.len();
        let alpha = |j: usize| steps[j - 1] as i64;
        let tau = s.genus();
        let mut checked = 0;
        for i in 0..=n {
            let run = if i < n { alpha(i + 1) } else { 2 * r.depth() as i64 };
            let prefix: i64 = (1..=i).map(alpha).sum();
            let both: i64 = (1..=i).map(|j| alpha(j) + alpha(n + 1 - j)).sum();
            for k in 0..run {
                if let Some(&a) = profile.get(&(-2 * (k + prefix))) {
                    prop_assert_eq!(a, tau - k - both, "i = {}, k = {}", i, k);
                    checked += 1;
                }
            }
        }
        prop_assert_eq!(checked, profile.len());
    }

    #[test]
    fn alexander_round_trip(steps in prop::collection::vec(1u32..=8, 0..=10)) {
        prop_assume!(steps.iter().sum::<u32>() <= 40);
        let s = Staircase::new(steps).unwrap();
        let delta = alexander_from_complex(&staircase_complex(&s, false));
        prop_assert_eq!(&delta, &s.alexander());
        prop_assert_eq!(staircase_from_alexander(&delta).unwrap(), s);
    }

    #[test]
    fn homology_matches_brute_force(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_module(&mut rng, 8);
        let h = graded_homology(&c).unwrap();
        check_against_brute(&c, &h, |_, _| true);
    }

    #[test]
    fn a0_homology_matches_brute_force(i in 0usize..64, seed in any::<u64>()) {
        let c = knot(i, seed);
        prop_assume!(c.len() <= 8);
        let a0 = a0_minus(&c).unwrap();
        prop_assert!(validate_with(&a0, false).passes());
        let h = graded_homology(&a0).unwrap();
        prop_assert_eq!(h.free_towers.len(), 1);
        let g = c.generators();
        check_against_brute(&c, &h, |x, n| g[x].alexander - n as i64 <= 0);
    }

    #[test]
    fn tensor_gradings_and_tau_add(i in 0usize..64, j in 0usize..64, seed in any::<u64>()) {
        let (a, b) = (knot(i, seed), knot(j, seed.rotate_left(7)));
        prop_assume!(a.len() * b.len() <= 60);
        let ab = tensor_free(&a, &b).unwrap();
        prop_assert!(validate(&ab).passes());
        prop_assert_eq!(alexander_from_complex(&ab), alexander_from_complex(&a).mul(&alexander_from_complex(&b)));
        prop_assert_eq!(tau(&ab).unwrap(), tau(&a).unwrap() + tau(&b).unwrap());
        let d = d1(&ab).unwrap();
        prop_assert!(d <= 0 && d % 2 == 0);
    }

    #[test]
    fn knot_minus_itself_is_slice_like(i in 0usize..64, seed in any::<u64>()) {
        let c = knot(i, seed);
        let s = tensor_free(&c, &mirror(&c).unwrap()).unwrap();
        prop_assert_eq!(tau(&s).unwrap(), 0);
        prop_assert_eq!(d1(&s).unwrap(), 0);
    }
}

#[test]
fn alexander_round_trip_exhaustive_to_genus_12() {
    for g in 0..=12 {
        for s in Staircase::all_of_genus(g) {
            let delta = alexander_from_complex(&staircase_complex(&s, false));
            assert_eq!(staircase_from_alexander(&delta).unwrap(), s);
        }
    }
}

#[test]
fn tensor_is_associative_up_to_invariants() {
    let t = stair(&[1]);
    let f = stair(&[1, 1]);
    let m = mirror(&stair(&[1, 2])).unwrap();
    let left = tensor_free(&tensor_free(&t, &f).unwrap(), &m).unwrap();
    let right = tensor_free(&t, &tensor_free(&f, &m).unwrap()).unwrap();
    assert_eq!(alexander_from_complex(&left), alexander_from_complex(&right));
    assert_eq!(d1(&left).unwrap(), d1(&right).unwrap());
    assert_eq!(tau(&left).unwrap(), tau(&right).unwrap());
    assert_eq!(graded_homology(&left).unwrap(), graded_homology(&right).unwrap());
}
