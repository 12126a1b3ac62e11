//! Sparse linear algebra over F₂ and filtered homology of graded F₂-complexes.
//!
//! Vectors are sorted, duplicate-free index lists.

use std::collections::{BTreeMap, HashMap};

pub type F2Vec = Vec<usize>;

/// Symmetric difference of two sorted index lists.
pub fn xor(a: &[usize], b: &[usize]) -> F2Vec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Sorts and cancels repeated indices in pairs.
pub fn normalize(mut v: Vec<usize>) -> F2Vec {
    v.sort_unstable();
    let mut out: Vec<usize> = Vec::with_capacity(v.len());
    for x in v {
        if out.last() == Some(&x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Row-echelon basis keyed by each vector's smallest index.
#[derive(Default, Debug, Clone)]
pub struct Echelon {
    pivots: HashMap<usize, F2Vec>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` until its smallest index is not a pivot (or it vanishes).
    pub fn reduce(&self, mut v: F2Vec) -> F2Vec {
        while let Some(p) = v.first().and_then(|l| self.pivots.get(l)) {
            v = xor(&v, p);
        }
        v
    }

    /// Adds `v` to the span; returns false when it was already there.
    pub fn insert(&mut self, v: F2Vec) -> bool {
        let v = self.reduce(v);
        match v.first() {
            Some(&lead) => {
                self.pivots.insert(lead, v);
                true
            }
            None => false,
        }
    }
}

/// Basis of the kernel of the map sending basis vector `i` to `images[i]`,
/// as index combinations.
pub fn kernel(images: &[F2Vec]) -> Vec<F2Vec> {
    let mut pivots: HashMap<usize, (F2Vec, F2Vec)> = HashMap::new();
    let mut out = Vec::new();
    for (i, img) in images.iter().enumerate() {
        let mut v = img.clone();
        let mut combo = vec![i];
        while let Some((pv, pc)) = v.first().and_then(|l| pivots.get(l)) {
            v = xor(&v, pv);
            combo = xor(&combo, pc);
        }
        match v.first() {
            Some(&lead) => {
                pivots.insert(lead, (v, combo));
            }
            None => out.push(combo),
        }
    }
    out
}

/// An F₂-complex whose elements carry Alexander and Maslov gradings.
pub trait GradedF2 {
    fn size(&self) -> usize;
    fn alexander(&self, i: usize) -> i64;
    fn maslov(&self, i: usize) -> i64;
    fn boundary(&self, i: usize) -> &[usize];
}

/// Per-Maslov-grading coordinates in which lower local indices have higher
/// Alexander grading, so a vector's first entry is its filtration level.
pub struct GradedView<'a, C: GradedF2> {
    c: &'a C,
    slots: BTreeMap<i64, Vec<usize>>,
    pos: Vec<usize>,
}

impl<'a, C: GradedF2> GradedView<'a, C> {
    pub fn new(c: &'a C) -> Self {
        let mut slots: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for i in 0..c.size() {
            slots.entry(c.maslov(i)).or_default().push(i);
        }
        let mut pos = vec![0; c.size()];
        for list in slots.values_mut() {
            list.sort_by_key(|&i| (std::cmp::Reverse(c.alexander(i)), i));
            for (k, &i) in list.iter().enumerate() {
                pos[i] = k;
            }
        }
        Self { c, slots, pos }
    }

    pub fn gradings(&self) -> impl Iterator<Item = i64> + '_ {
        self.slots.keys().copied()
    }

    pub fn elements(&self, m: i64) -> &[usize] {
        self.slots.get(&m).map_or(&[], |v| v.as_slice())
    }

    pub fn to_local(&self, v: &[usize]) -> F2Vec {
        let mut out: Vec<usize> = v.iter().map(|&i| self.pos[i]).collect();
        out.sort_unstable();
        out
    }

    pub fn to_global(&self, m: i64, v: &[usize]) -> F2Vec {
        let slot = self.elements(m);
        let mut out: Vec<usize> = v.iter().map(|&k| slot[k]).collect();
        out.sort_unstable();
        out
    }

    /// Echelon of the boundaries landing in grading `m`.
    pub fn boundaries(&self, m: i64) -> Echelon {
        let mut e = Echelon::default();
        for &i in self.elements(m + 1) {
            e.insert(self.to_local(self.c.boundary(i)));
        }
        e
    }

    /// Rank of the boundary map out of grading `m`.
    pub fn boundary_rank(&self, m: i64) -> usize {
        self.boundaries(m - 1).rank()
    }

    pub fn homology_dim(&self, m: i64) -> usize {
        self.elements(m).len() - self.boundary_rank(m) - self.boundaries(m).rank()
    }

    /// Cycles in grading `m`, in local coordinates.
    pub fn cycles(&self, m: i64) -> Vec<F2Vec> {
        let images: Vec<F2Vec> =
            self.elements(m).iter().map(|&i| self.to_local(self.c.boundary(i))).collect();
        kernel(&images)
    }

    /// Cycle representatives of a basis of homology in grading `m` (local).
    pub fn homology_basis(&self, m: i64) -> Vec<F2Vec> {
        let mut span = self.boundaries(m);
        self.cycles(m).into_iter().filter(|z| span.insert(z.clone())).collect()
    }

    /// Lowest filtration level over all representatives of the class of the
    /// local cycle `v`; `None` when `v` is a boundary.
    pub fn class_level(&self, m: i64, boundaries: &Echelon, v: F2Vec) -> Option<i64> {
        let r = boundaries.reduce(v);
        r.first().map(|&k| self.c.alexander(self.elements(m)[k]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xor_and_normalize() {
        assert_eq!(xor(&[1, 3, 5], &[3, 4]), vec![1, 4, 5]);
        assert_eq!(normalize(vec![4, 1, 4, 4, 2]), vec![1, 2, 4]);
    }

    #[test]
    fn kernel_of_small_map() {
        // e0 ↦ {0}, e1 ↦ {0}, e2 ↦ {} : kernel spanned by e0+e1 and e2.
        let k = kernel(&[vec![0], vec![0], vec![]]);
        assert_eq!(k, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn echelon_rank() {
        let mut e = Echelon::default();
        assert!(e.insert(vec![0, 1]));
        assert!(e.insert(vec![1, 2]));
        assert!(!e.insert(vec![0, 2]));
        assert_eq!(e.rank(), 2);
    }
}
