//! Diagonalization of sparse matrices over F₂[U] by invertible row and
//! column operations.

use std::collections::{BTreeMap, BTreeSet};

use super::{UMatrix, UPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pivot {
    pub row: usize,
    pub col: usize,
    pub entry: UPoly,
}

impl Pivot {
    /// `k` when the pivot entry is `U^k`; always the case for graded inputs.
    pub fn exponent(&self) -> Option<u32> {
        self.entry.monomial_exponent()
    }
}

/// `row_ops · m · col_ops` is zero except for `entry` at each pivot's
/// `(row, col)`. Pivot rows are distinct, as are pivot columns.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub pivots: Vec<Pivot>,
    pub row_ops: UMatrix,
    pub col_ops: UMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> UMatrix {
        let mut d = UMatrix::zeros(self.row_ops.rows(), self.col_ops.cols());
        for p in &self.pivots {
            d.set(p.row, p.col, p.entry.clone());
        }
        d
    }
}

pub fn smith_reduce(m: &UMatrix) -> SmithForm {
    let mut w = Work::new(m, true);
    let pivots = w.run();
    let (p_rows, q_cols) = w.transforms.expect("transforms were requested");
    let mut row_ops = UMatrix::zeros(m.rows(), m.rows());
    for (r, row) in p_rows.into_iter().enumerate() {
        for (c, v) in row {
            row_ops.set(r, c, v);
        }
    }
    let mut col_ops = UMatrix::zeros(m.cols(), m.cols());
    for (c, col) in q_cols.into_iter().enumerate() {
        for (r, v) in col {
            col_ops.set(r, c, v);
        }
    }
    SmithForm { pivots, row_ops, col_ops }
}

/// Pivots only; skips transform bookkeeping.
pub fn smith_pivots(m: &UMatrix) -> Vec<Pivot> {
    Work::new(m, false).run()
}

type SparseLine = BTreeMap<usize, UPoly>;

struct Work {
    rows: Vec<SparseLine>,
    cols: Vec<BTreeSet<usize>>,
    /// Rows of the accumulated row transform and columns of the column transform.
    transforms: Option<(Vec<SparseLine>, Vec<SparseLine>)>,
}

fn mul(a: &UPoly, b: &UPoly) -> UPoly {
    a.checked_mul_capped(b, u32::MAX).expect("uncapped product")
}

fn add_into(line: &mut SparseLine, key: usize, value: &UPoly) -> bool {
    let entry = line.entry(key).or_default();
    *entry += value;
    if entry.is_zero() {
        line.remove(&key);
        false
    } else {
        true
    }
}

fn unit_lines(n: usize) -> Vec<SparseLine> {
    (0..n).map(|i| BTreeMap::from([(i, UPoly::one())])).collect()
}

impl Work {
    fn new(m: &UMatrix, track: bool) -> Self {
        let mut rows = vec![SparseLine::new(); m.rows()];
        let mut cols = vec![BTreeSet::new(); m.cols()];
        for (r, c, v) in m.iter() {
            rows[r].insert(c, v.clone());
            cols[c].insert(r);
        }
        let transforms = track.then(|| (unit_lines(m.rows()), unit_lines(m.cols())));
        Self { rows, cols, transforms }
    }

    /// row `t` += q · row `s`
    fn row_add(&mut self, t: usize, s: usize, q: &UPoly) {
        let src: Vec<(usize, UPoly)> = self.rows[s].iter().map(|(&c, v)| (c, mul(q, v))).collect();
        for (c, v) in src {
            if add_into(&mut self.rows[t], c, &v) {
                self.cols[c].insert(t);
            } else {
                self.cols[c].remove(&t);
            }
        }
        if let Some((p, _)) = &mut self.transforms {
            let src: Vec<(usize, UPoly)> = p[s].iter().map(|(&c, v)| (c, mul(q, v))).collect();
            for (c, v) in src {
                add_into(&mut p[t], c, &v);
            }
        }
    }

    /// column `t` += q · column `s`
    fn col_add(&mut self, t: usize, s: usize, q: &UPoly) {
        let src: Vec<usize> = self.cols[s].iter().copied().collect();
        for r in src {
            let v = mul(q, &self.rows[r][&s]);
            if add_into(&mut self.rows[r], t, &v) {
                self.cols[t].insert(r);
            } else {
                self.cols[t].remove(&r);
            }
        }
        if let Some((_, qc)) = &mut self.transforms {
            let src: Vec<(usize, UPoly)> = qc[s].iter().map(|(&r, v)| (r, mul(q, v))).collect();
            for (r, v) in src {
                add_into(&mut qc[t], r, &v);
            }
        }
    }

    fn min_entry(&self) -> Option<(usize, usize)> {
        let mut best: Option<(u32, usize, usize)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            for (&c, v) in row {
                let d = v.degree().expect("stored entries are nonzero");
                if best.is_none_or(|b| (d, r, c) < b) {
                    best = Some((d, r, c));
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }

    /// Clears the rest of column `c` and row `r` against the pivot at `(r, c)`.
    /// Returns false when a nonzero remainder appeared.
    fn clear_cross(&mut self, r: usize, c: usize) -> bool {
        let p = self.rows[r][&c].clone();
        let mut exact = true;
        let others: Vec<usize> = self.cols[c].iter().copied().filter(|&x| x != r).collect();
        for t in others {
            let (q, rem) = self.rows[t][&c].div_rem(&p).expect("pivot is nonzero");
            if !q.is_zero() {
                self.row_add(t, r, &q);
            }
            exact &= rem.is_zero();
        }
        if !exact {
            return false;
        }
        let others: Vec<usize> = self.rows[r].keys().copied().filter(|&x| x != c).collect();
        for t in others {
            let (q, rem) = self.rows[r][&t].div_rem(&p).expect("pivot is nonzero");
            if !q.is_zero() {
                self.col_add(t, c, &q);
            }
            exact &= rem.is_zero();
        }
        exact
    }

    fn run(&mut self) -> Vec<Pivot> {
        let mut pivots = Vec::new();
        while let Some((r, c)) = self.min_entry() {
            if !self.clear_cross(r, c) {
                continue;
            }
            let entry = self.rows[r].remove(&c).expect("pivot present");
            debug_assert!(self.rows[r].is_empty());
            self.cols[c].clear();
            pivots.push(Pivot { row: r, col: c, entry });
        }
        pivots.sort_by_key(|p| (p.entry.degree(), p.row, p.col));
        pivots
    }
}
