//! Seeded sampling of the structural laws: validity of complexes and of
//! their reductions, order independence of cancellation, tower levels of
//! staircases, the Alexander round trip and homology against a dense F₂
//! computation.

use std::collections::BTreeMap;

use cfk::complex::{a0_minus, change_basis, mirror, validate, validate_flevel, Arrow, FreeUComplex, Generator};
use cfk::invariants::{alexander_from_complex, graded_homology, HomologySummary};
use cfk::reduction::{class_profile, reduce, reduce_level, reduce_level_random, tower_profile, ReduceOptions};
use cfk::staircase::{staircase_complex, staircase_from_alexander, Staircase};
use cfk::tensor::tensor_free;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check, core, CheckResult};
use crate::formulas::staircase_tower;

const SAMPLES: usize = 200;
const ORACLE_DEPTH: u32 = 12;

pub(super) fn run(seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = small_knots()?;
    let mut tally = BTreeMap::new();
    for _ in 0..SAMPLES {
        let c = scramble(base.choose(&mut rng).expect("nonempty"), 5, &mut rng)?;
        complex_laws(&c)?;
        reduction_laws(&c, &mut rng)?;
        *tally.entry("complexes").or_insert(0) += 1;

        let steps: Vec<u32> = (0..rng.gen_range(0..=5)).map(|_| rng.gen_range(1..=4)).collect();
        tower_law(&steps)?;
        *tally.entry("towers").or_insert(0) += 1;

        let steps: Vec<u32> = (0..rng.gen_range(0..=10)).map(|_| rng.gen_range(1..=8)).collect();
        if steps.iter().sum::<u32>() <= 40 {
            round_trip(&steps)?;
            *tally.entry("round trips").or_insert(0) += 1;
        }

        let m = random_module(&mut rng, 8)?;
        homology_law(&m, &core(graded_homology(&m))?, |_, _| true)?;
        if c.len() <= 8 {
            let a0 = core(a0_minus(&c))?;
            let g = c.generators();
            homology_law(&c, &core(graded_homology(&a0))?, |x, n| g[x].alexander - n as i64 <= 0)?;
            *tally.entry("A0 oracles").or_insert(0) += 1;
        }
        *tally.entry("homology oracles").or_insert(0) += 1;
    }
    for g in 0..=10 {
        for s in Staircase::all_of_genus(g) {
            round_trip(&s.steps)?;
        }
    }
    let parts: Vec<String> = tally.iter().map(|(k, v)| format!("{v} {k}")).collect();
    Ok(format!("seed {seed}: {}", parts.join(", ")))
}

fn stair(steps: &[u32]) -> Result<FreeUComplex, String> {
    Ok(staircase_complex(&core(Staircase::new(steps.to_vec()))?, false))
}

/// Knot complexes with at most twelve generators.
fn small_knots() -> Result<Vec<FreeUComplex>, String> {
    let mut out = Vec::new();
    for s in [&[][..], &[1], &[2], &[1, 1], &[1, 2], &[2, 1], &[3], &[1, 1, 1], &[2, 1, 1, 2], &[1, 1, 1, 1, 1]] {
        let c = stair(s)?;
        out.push(core(mirror(&c))?);
        out.push(c);
    }
    let t = stair(&[1])?;
    out.push(core(tensor_free(&t, &t))?);
    out.push(core(tensor_free(&t, &core(mirror(&t))?))?);
    out.push(core(tensor_free(&stair(&[2])?, &core(mirror(&t))?))?);
    Ok(out)
}

fn basis_moves(c: &FreeUComplex) -> Vec<(usize, usize, u32)> {
    let g = c.generators();
    let mut out = Vec::new();
    for t in 0..g.len() {
        for s in 0..g.len() {
            let gap = g[s].maslov - g[t].maslov;
            if t != s && (0..=6).contains(&gap) && gap % 2 == 0 && g[s].alexander - gap / 2 <= g[t].alexander {
                out.push((t, s, (gap / 2) as u32));
            }
        }
    }
    out
}

fn scramble<R: Rng>(c: &FreeUComplex, moves: usize, rng: &mut R) -> Result<FreeUComplex, String> {
    let mut c = c.clone();
    for _ in 0..moves {
        let Some(&(t, s, k)) = basis_moves(&c).choose(rng) else { break };
        c = core(change_basis(&c, t, s, k))?;
    }
    Ok(c)
}

/// Direct sums of `F[U]` and `F[U] → U^k F[U]`, mixed by basis changes.
fn random_module<R: Rng>(rng: &mut R, max_gens: usize) -> Result<FreeUComplex, String> {
    let mut gens = Vec::new();
    let mut arrows = Vec::new();
    while gens.len() < max_gens {
        let m = rng.gen_range(-3..=3);
        let n = gens.len();
        if n + 2 <= max_gens && rng.gen_bool(0.6) {
            let k = rng.gen_range(0..=3u32);
            gens.push(Generator::new(format!("a{n}"), 0, m));
            gens.push(Generator::new(format!("b{n}"), 0, m - 1 + 2 * k as i64));
            arrows.push(Arrow { from: n, to: n + 1, upower: k });
        } else {
            gens.push(Generator::new(format!("f{n}"), 0, m));
        }
        if rng.gen_bool(0.25) {
            break;
        }
    }
    scramble(&core(FreeUComplex::from_arrows(gens, &arrows))?, 6, rng)
}

fn complex_laws(c: &FreeUComplex) -> Result<(), String> {
    let report = validate(c);
    check(report.passes(), || format!("invalid complex: {report}"))?;
    let square = core(c.differential().checked_mul(c.differential()).map_err(cfk::Error::from))?;
    check(square.is_zero(), || "differential does not square to zero".into())
}

fn reduction_laws<R: Rng>(c: &FreeUComplex, rng: &mut R) -> Result<(), String> {
    let depth = 4 * c.max_alexander().max(0) as u32 + 6;
    let t = cfk::complex::truncate(c, depth);
    let canonical = reduce_level(t.clone());
    let w = canonical.stable_window();
    let clip = |p: Vec<(i64, i64)>| p.into_iter().take_while(|&(a, _)| a >= w).collect::<Vec<_>>();
    let profile = clip(core(class_profile(&canonical))?);
    for r in [canonical.clone(), reduce_level_random(t.clone(), rng), reduce_level_random(t, rng)] {
        let report = validate_flevel(&r);
        check(report.passes(), || format!("reduced complex breaks a law: {report}"))?;
        check(r.horizontal_arrows().is_empty(), || "horizontal arrow survives reduction".into())?;
        check(r.graded_ranks() == canonical.graded_ranks(), || "graded ranks depend on cancellation order".into())?;
        check(clip(core(class_profile(&r))?) == profile, || "tower depends on cancellation order".into())?;
    }
    Ok(())
}

fn tower_law(steps: &[u32]) -> Result<(), String> {
    let r = core(reduce(&stair(steps)?, &ReduceOptions::default()))?;
    let profile = core(tower_profile(&r))?;
    let expected = staircase_tower(steps, profile.len());
    check(profile == expected, || format!("tower of {steps:?} is {profile:?}, expected {expected:?}"))
}

fn round_trip(steps: &[u32]) -> Result<(), String> {
    let s = core(Staircase::new(steps.to_vec()))?;
    let delta = alexander_from_complex(&staircase_complex(&s, false));
    check(delta == s.alexander(), || format!("Euler characteristic of {s} is {delta}"))?;
    let back = core(staircase_from_alexander(&delta))?;
    check(back == s, || format!("{s} comes back as {back}"))
}

fn f2_rank(mut rows: Vec<u128>) -> usize {
    let mut rank = 0;
    for bit in 0..128 {
        let mask = 1u128 << bit;
        let Some(p) = (rank..rows.len()).find(|&i| rows[i] & mask != 0) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (i, r) in rows.iter_mut().enumerate() {
            if i != rank && *r & mask != 0 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// Dense F₂ homology in grading `m` of the span of those `U^n x` with
/// `n ≤ ORACLE_DEPTH` and `keep(x, n)`, modulo higher powers of `U`.
fn brute_homology(c: &FreeUComplex, m: i64, keep: impl Fn(usize, u32) -> bool) -> usize {
    let g = c.generators();
    let arrows = c.arrows();
    let basis = |grading: i64| -> Vec<(usize, u32)> {
        g.iter()
            .enumerate()
            .filter_map(|(x, gen)| {
                let diff = gen.maslov - grading;
                let n = (diff / 2) as u32;
                (diff >= 0 && diff % 2 == 0 && n <= ORACLE_DEPTH && keep(x, n)).then_some((x, n))
            })
            .collect()
    };
    let matrix = |from: i64| -> Vec<u128> {
        let targets = basis(from - 1);
        basis(from)
            .into_iter()
            .map(|(x, n)| {
                arrows.iter().filter(|a| a.from == x).fold(0u128, |row, a| {
                    match targets.iter().position(|&t| t == (a.to, n + a.upower)) {
                        Some(i) => row ^ (1 << i),
                        None => row,
                    }
                })
            })
            .collect()
    };
    basis(m).len() - f2_rank(matrix(m)) - f2_rank(matrix(m + 1))
}

fn homology_law(c: &FreeUComplex, h: &HomologySummary, keep: impl Fn(usize, u32) -> bool + Copy) -> Result<(), String> {
    let top = c.generators().iter().map(|g| g.maslov).max().unwrap_or(0);
    for m in (top - 2 * ORACLE_DEPTH as i64 + 2)..=top {
        let towers = h.free_towers.iter().filter(|&&t| t >= m && (t - m) % 2 == 0).count();
        let torsion = h.torsion.iter().filter(|&&(t, k)| t >= m && (t - m) % 2 == 0 && (t - m) / 2 < k as i64).count();
        let brute = brute_homology(c, m, keep);
        check(brute == towers + torsion, || {
            format!("homology in grading {m}: dense count {brute}, module summary {h:?}")
        })?;
    }
    Ok(())
}
