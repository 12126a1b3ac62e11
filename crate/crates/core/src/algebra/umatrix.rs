use std::collections::BTreeMap;

use super::{AlgebraError, UPoly};

/// Sparse matrix over F₂[U]. Absent entries are zero; stored entries never are.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), UPoly>,
}

impl UMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), UPoly::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&UPoly> {
        self.entries.get(&(r, c))
    }

    pub fn set(&mut self, r: usize, c: usize, value: UPoly) {
        assert!(r < self.rows && c < self.cols, "entry ({r}, {c}) outside {}x{}", self.rows, self.cols);
        if value.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), value);
        }
    }

    /// Adds `value` to entry `(r, c)`.
    pub fn add_at(&mut self, r: usize, c: usize, value: &UPoly) {
        let sum = match self.entries.get(&(r, c)) {
            Some(old) => old + value,
            None => value.clone(),
        };
        self.set(r, c, sum);
    }

    /// Nonzero entries in (row, col) order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &UPoly)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// Nonzero entries of row `r`.
    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, &UPoly)> {
        self.entries.range((r, 0)..(r + 1, 0)).map(|(&(_, c), v)| (c, v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, c, v) in self.iter() {
            t.entries.insert((c, r), v.clone());
        }
        t
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for (r, k, a) in self.iter() {
            for (c, b) in rhs.row(k) {
                out.add_at(r, c, &a.checked_mul(b)?);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(k: u32) -> UPoly {
        UPoly::monomial(k).unwrap()
    }

    #[test]
    fn product_and_cancellation() {
        let mut a = UMatrix::zeros(2, 2);
        a.set(0, 0, u(1));
        a.set(0, 1, u(1));
        let mut b = UMatrix::zeros(2, 1);
        b.set(0, 0, u(2));
        b.set(1, 0, u(2));
        // U·U² + U·U² = 0 in characteristic 2.
        assert!(a.checked_mul(&b).unwrap().is_zero());
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        assert!(UMatrix::zeros(2, 3).checked_mul(&UMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn setting_zero_removes_entry() {
        let mut a = UMatrix::identity(3);
        a.add_at(1, 1, &UPoly::one());
        assert_eq!(a.nnz(), 2);
        assert_eq!(a.transpose(), a);
    }
}
