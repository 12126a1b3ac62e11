#![allow(dead_code)]

use cfk::complex::{change_basis, mirror, FreeUComplex, Generator};
use cfk::staircase::{staircase_complex, Staircase};
use cfk::tensor::tensor_free;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn stair(steps: &[u32]) -> FreeUComplex {
    staircase_complex(&Staircase::new(steps.to_vec()).unwrap(), false)
}

/// Small knot complexes, none with more than twelve generators.
pub fn small_knots() -> Vec<FreeUComplex> {
    let mut out = Vec::new();
    for s in [&[][..], &[1], &[2], &[1, 1], &[1, 2], &[2, 1], &[3], &[1, 1, 1], &[2, 1, 1, 2], &[1, 1, 1, 1, 1]] {
        let c = stair(s);
        out.push(mirror(&c).unwrap());
        out.push(c);
    }
    let t = stair(&[1]);
    out.push(tensor_free(&t, &t).unwrap());
    out.push(tensor_free(&t, &mirror(&t).unwrap()).unwrap());
    out.push(tensor_free(&stair(&[2]), &mirror(&t).unwrap()).unwrap());
    out
}

/// Every admissible elementary change of basis with `U`-power at most 3.
pub fn basis_moves(c: &FreeUComplex) -> Vec<(usize, usize, u32)> {
    let g = c.generators();
    let mut out = Vec::new();
    for t in 0..g.len() {
        for s in 0..g.len() {
            let gap = g[s].maslov - g[t].maslov;
            if t == s || gap < 0 || gap % 2 != 0 || gap > 6 {
                continue;
            }
            let k = (gap / 2) as u32;
            if g[s].alexander - k as i64 <= g[t].alexander {
                out.push((t, s, k));
            }
        }
    }
    out
}

/// Applies `moves` random filtered changes of basis.
pub fn scramble<R: Rng>(c: &FreeUComplex, moves: usize, rng: &mut R) -> FreeUComplex {
    let mut c = c.clone();
    for _ in 0..moves {
        let Some(&(t, s, k)) = basis_moves(&c).choose(rng) else { break };
        c = change_basis(&c, t, s, k).unwrap();
    }
    c
}

/// A free complex with all Alexander gradings zero built from direct
/// summands `F[U]`, `F[U] → U^k F[U]` and then mixed by basis changes.
pub fn random_module<R: Rng>(rng: &mut R, max_gens: usize) -> FreeUComplex {
    let mut gens = Vec::new();
    let mut arrows = Vec::new();
    while gens.len() < max_gens {
        let m = rng.gen_range(-3..=3);
        let n = gens.len();
        if n + 2 <= max_gens && rng.gen_bool(0.6) {
            let k = rng.gen_range(0..=3u32);
            gens.push(Generator::new(format!("a{n}"), 0, m));
            gens.push(Generator::new(format!("b{n}"), 0, m - 1 + 2 * k as i64));
            arrows.push(cfk::complex::Arrow { from: n, to: n + 1, upower: k });
        } else {
            gens.push(Generator::new(format!("f{n}"), 0, m));
        }
        if rng.gen_bool(0.25) {
            break;
        }
    }
    let c = FreeUComplex::from_arrows(gens, &arrows).unwrap();
    scramble(&c, 6, rng)
}

/// Rank of a dense F₂ matrix given as row bitmasks.
pub fn f2_rank(mut rows: Vec<u128>) -> usize {
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

/// F₂-dimension of the homology in grading `m` of the span of the `U^n x`
/// with `n ≤ depth` and `keep(x, n)`, quotiented by everything of `U`-power
/// above `depth`. Dense and slow on purpose.
pub fn brute_homology(c: &FreeUComplex, depth: u32, m: i64, keep: impl Fn(usize, u32) -> bool) -> usize {
    let g = c.generators();
    let basis = |grading: i64| -> Vec<(usize, u32)> {
        let mut out = Vec::new();
        for (x, gen) in g.iter().enumerate() {
            let diff = gen.maslov - grading;
            if diff >= 0 && diff % 2 == 0 && diff / 2 <= depth as i64 && keep(x, (diff / 2) as u32) {
                out.push((x, (diff / 2) as u32));
            }
        }
        out
    };
    // Matrix of ∂ from grading `from` to `from − 1`, one row per source.
    let matrix = |from: i64| -> Vec<u128> {
        let targets = basis(from - 1);
        assert!(targets.len() <= 128);
        basis(from)
            .into_iter()
            .map(|(x, n)| {
                let mut row = 0u128;
                for a in c.arrows().into_iter().filter(|a| a.from == x) {
                    let power = n + a.upower;
                    if let Some(i) = targets.iter().position(|&t| t == (a.to, power)) {
                        row ^= 1 << i;
                    }
                }
                row
            })
            .collect()
    };
    let dim = basis(m).len();
    dim - f2_rank(matrix(m)) - f2_rank(matrix(m + 1))
}
