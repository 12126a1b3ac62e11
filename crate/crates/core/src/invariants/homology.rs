use serde::{Deserialize, Serialize};

use crate::algebra::smith_pivots;
use crate::complex::{a0_minus, validate, FreeUComplex};
use crate::error::{Error, Result};

/// F₂[U]-module structure of the homology: free towers by the grading of
/// their top, torsion summands `F₂[U]/U^k` by (top grading, k).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummary {
    pub free_towers: Vec<i64>,
    pub torsion: Vec<(i64, u32)>,
}

/// Diagonalizes the differential. Each pivot `U^k` at (row r, col c) kills
/// the source `c` and, for `k > 0`, leaves torsion of order `k` on `r`. The
/// free part is what remains after removing pivot rows and columns.
pub fn graded_homology(c: &FreeUComplex) -> Result<HomologySummary> {
    let gens = c.generators();
    for a in c.arrows() {
        if gens[a.to].maslov - 2 * a.upower as i64 != gens[a.from].maslov - 1 {
            return Err(Error::Homology(format!(
                "arrow {} -> {} does not lower the Maslov grading by one",
                gens[a.from].name, gens[a.to].name
            )));
        }
    }
    let pivots = smith_pivots(c.differential());
    let mut pivot_col = vec![false; c.len()];
    let mut row_gradings = Vec::with_capacity(pivots.len());
    let mut torsion = Vec::new();
    for p in &pivots {
        let k = p
            .exponent()
            .ok_or_else(|| Error::Homology(format!("pivot {} is not a monomial; differential is not graded", p.entry)))?;
        pivot_col[p.col] = true;
        row_gradings.push(gens[p.row].maslov);
        if k > 0 {
            torsion.push((gens[p.row].maslov, k));
        }
    }
    let mut free_towers: Vec<i64> =
        (0..c.len()).filter(|&i| !pivot_col[i]).map(|i| gens[i].maslov).collect();
    for m in row_gradings {
        let at = free_towers
            .iter()
            .position(|&f| f == m)
            .ok_or_else(|| Error::Homology(format!("no free generator in grading {m} to pair with a pivot row")))?;
        free_towers.swap_remove(at);
    }
    free_towers.sort_unstable_by(|a, b| b.cmp(a));
    torsion.sort_unstable_by(|a, b| b.cmp(a));
    Ok(HomologySummary { free_towers, torsion })
}

/// Top grading of the free part of the homology of the subcomplex
/// `{i ≤ 0, j ≤ 0}`.
pub fn d1(c: &FreeUComplex) -> Result<i64> {
    let report = validate(c);
    if !report.passes() {
        return Err(Error::InvalidComplex(report));
    }
    let h = graded_homology(&a0_minus(c)?)?;
    let [d] = h.free_towers[..] else {
        return Err(Error::D1Check(format!("expected one free tower, found {:?}", h.free_towers)));
    };
    if d % 2 != 0 || d > 0 {
        return Err(Error::D1Check(format!("d1 = {d} must be even and non-positive")));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{Arrow, Generator};
    use crate::staircase::{staircase_complex, Staircase};

    #[test]
    fn two_free_towers() {
        let c = FreeUComplex::from_arrows(vec![Generator::new("a", 0, 0), Generator::new("b", 0, -2)], &[]).unwrap();
        assert_eq!(graded_homology(&c).unwrap(), HomologySummary { free_towers: vec![0, -2], torsion: vec![] });
    }

    #[test]
    fn torsion_from_u_arrow() {
        // ∂b = U²a leaves F[U] / U² on a.
        let c = FreeUComplex::from_arrows(
            vec![Generator::new("a", 0, 0), Generator::new("b", 0, -3)],
            &[Arrow { from: 1, to: 0, upower: 2 }],
        )
        .unwrap();
        assert_eq!(graded_homology(&c).unwrap(), HomologySummary { free_towers: vec![], torsion: vec![(0, 2)] });
    }

    #[test]
    fn ungraded_differential_rejected() {
        let c = FreeUComplex::from_arrows(
            vec![Generator::new("a", 0, 0), Generator::new("b", 0, -3)],
            &[Arrow { from: 0, to: 1, upower: 1 }],
        )
        .unwrap();
        assert!(matches!(graded_homology(&c), Err(Error::Homology(_))));
    }

    #[test]
    fn a0_of_trefoil_has_one_tower() {
        let c = staircase_complex(&Staircase::new(vec![1]).unwrap(), false);
        let h = graded_homology(&a0_minus(&c).unwrap()).unwrap();
        assert_eq!(h, HomologySummary { free_towers: vec![-2], torsion: vec![] });
    }

    #[test]
    fn d1_values() {
        assert_eq!(d1(&FreeUComplex::unknot()).unwrap(), 0);
        let t25 = staircase_complex(&Staircase::new(vec![1, 1]).unwrap(), false);
        assert_eq!(graded_homology(&a0_minus(&t25).unwrap()).unwrap().free_towers, vec![-2]);
        assert_eq!(d1(&t25).unwrap(), -2);
    }
}
