use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{Element, FLevelComplex};
use crate::error::{Error, Result};

use super::Cancellation;

/// Mutable copy of an F₂-level complex with row indices for fast updates.
pub(super) struct Workspace {
    elements: Vec<Element>,
    alive: Vec<bool>,
    bd: Vec<BTreeSet<usize>>,
    bd_rows: Vec<BTreeSet<usize>>,
    um: Vec<BTreeSet<usize>>,
    um_rows: Vec<BTreeSet<usize>>,
    depth: u32,
    window: i64,
    log: Vec<Cancellation>,
}

fn transpose(cols: &[BTreeSet<usize>]) -> Vec<BTreeSet<usize>> {
    let mut rows = vec![BTreeSet::new(); cols.len()];
    for (j, col) in cols.iter().enumerate() {
        for &i in col {
            rows[i].insert(j);
        }
    }
    rows
}

fn set_column(cols: &mut [BTreeSet<usize>], rows: &mut [BTreeSet<usize>], x: usize, v: BTreeSet<usize>) {
    for &i in cols[x].difference(&v) {
        rows[i].remove(&x);
    }
    for &i in v.difference(&cols[x]) {
        rows[i].insert(x);
    }
    cols[x] = v;
}

fn toggle(set: &mut BTreeSet<usize>, x: usize) {
    if !set.remove(&x) {
        set.insert(x);
    }
}

fn sym_diff(a: &mut BTreeSet<usize>, b: &BTreeSet<usize>) {
    for &x in b {
        toggle(a, x);
    }
}

impl Workspace {
    pub(super) fn new(c: FLevelComplex) -> Self {
        let (elements, boundary, umap, depth, window) = c.into_parts();
        let bd: Vec<BTreeSet<usize>> = boundary.into_iter().map(|v| v.into_iter().collect()).collect();
        let um: Vec<BTreeSet<usize>> = umap.into_iter().map(|v| v.into_iter().collect()).collect();
        Self {
            alive: vec![true; elements.len()],
            bd_rows: transpose(&bd),
            um_rows: transpose(&um),
            elements,
            bd,
            um,
            depth,
            window,
            log: Vec::new(),
        }
    }

    pub(super) fn alexander(&self, i: usize) -> i64 {
        self.elements[i].alexander
    }

    pub(super) fn len(&self) -> usize {
        self.elements.len()
    }

    /// The lowest-index horizontal target of `b`, if any.
    pub(super) fn horizontal_target(&self, b: usize) -> Option<usize> {
        let a = self.alexander(b);
        self.bd[b].iter().copied().find(|&c| self.alexander(c) == a)
    }

    /// Cancels the horizontal arrow `b → c`, replacing ∂ by π(∂ + ∂h∂) and U
    /// by f∘U∘g with h the inverse of the arrow.
    pub(super) fn cancel(&mut self, b: usize, c: usize) -> Result<()> {
        if !(self.alive.get(b).copied().unwrap_or(false) && self.alive.get(c).copied().unwrap_or(false)) {
            let missing = if self.alive.get(b).copied().unwrap_or(false) { c } else { b };
            return Err(Error::MissingElement(format!("#{missing}")));
        }
        if !self.bd[b].contains(&c) || self.alexander(b) != self.alexander(c) {
            return Err(Error::NotHorizontal {
                source_label: self.elements[b].label(),
                target: self.elements[c].label(),
            });
        }

        // U'x = π(Ux + [c∈∂x]·Ub + [c ∈ that sum]·∂b)
        let hits_c: BTreeSet<usize> = self.bd_rows[c].iter().copied().filter(|&x| x != b).collect();
        let mut affected: BTreeSet<usize> = self.um_rows[c].union(&self.um_rows[b]).copied().collect();
        affected.extend(hits_c.iter().copied());
        affected.remove(&b);
        affected.remove(&c);
        let ub = self.um[b].clone();
        let db = self.bd[b].clone();
        for x in affected {
            let mut v = self.um[x].clone();
            if hits_c.contains(&x) {
                sym_diff(&mut v, &ub);
            }
            if v.contains(&c) {
                sym_diff(&mut v, &db);
            }
            v.remove(&b);
            v.remove(&c);
            set_column(&mut self.um, &mut self.um_rows, x, v);
        }

        // ∂'x = π(∂x + [c∈∂x]·∂b)
        for &x in &hits_c {
            let mut v = self.bd[x].clone();
            sym_diff(&mut v, &db);
            v.remove(&b);
            set_column(&mut self.bd, &mut self.bd_rows, x, v);
        }
        let still_hit_b: Vec<usize> = self.bd_rows[b].iter().copied().collect();
        for x in still_hit_b {
            let mut v = self.bd[x].clone();
            v.remove(&b);
            set_column(&mut self.bd, &mut self.bd_rows, x, v);
        }

        for dead in [b, c] {
            set_column(&mut self.bd, &mut self.bd_rows, dead, BTreeSet::new());
            set_column(&mut self.um, &mut self.um_rows, dead, BTreeSet::new());
            self.alive[dead] = false;
        }
        debug_assert!(self.bd_rows[b].is_empty() && self.bd_rows[c].is_empty());
        debug_assert!(self.um_rows[b].is_empty() && self.um_rows[c].is_empty());

        self.log.push(Cancellation {
            source: self.elements[b].label(),
            target: self.elements[c].label(),
            alexander: self.alexander(b),
            order: self.log.len(),
        });
        Ok(())
    }

    /// One pass by decreasing Alexander grading. Cancelling at level `a` only
    /// creates arrows into lower levels, so no horizontal arrow survives.
    pub(super) fn cancel_all(&mut self) {
        let mut order: Vec<usize> = (0..self.len()).filter(|&i| self.alive[i]).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(self.alexander(i)), i));
        for b in order {
            if !self.alive[b] {
                continue;
            }
            if let Some(c) = self.horizontal_target(b) {
                self.cancel(b, c).expect("horizontal arrow between live elements");
            }
        }
    }

    pub(super) fn cancel_all_random<R: Rng + ?Sized>(&mut self, rng: &mut R) {
        loop {
            let mut arrows = Vec::new();
            for b in (0..self.len()).filter(|&b| self.alive[b]) {
                let a = self.alexander(b);
                arrows.extend(self.bd[b].iter().filter(|&&c| self.alexander(c) == a).map(|&c| (b, c)));
            }
            let Some(&(b, c)) = arrows.choose(rng) else { break };
            self.cancel(b, c).expect("horizontal arrow between live elements");
        }
    }

    /// Drops cancelled elements, keeping the survivors' relative order.
    pub(super) fn finish(self) -> (FLevelComplex, Vec<Cancellation>) {
        let mut new_index = vec![usize::MAX; self.len()];
        let mut elements = Vec::new();
        for (i, e) in self.elements.iter().enumerate() {
            if self.alive[i] {
                new_index[i] = elements.len();
                elements.push(e.clone());
            }
        }
        let remap = |v: &BTreeSet<usize>| -> Vec<usize> { v.iter().map(|&i| new_index[i]).collect() };
        let mut boundary = Vec::with_capacity(elements.len());
        let mut umap = Vec::with_capacity(elements.len());
        for i in (0..self.len()).filter(|&i| self.alive[i]) {
            boundary.push(remap(&self.bd[i]));
            umap.push(remap(&self.um[i]));
        }
        let c = FLevelComplex::from_parts_unchecked(elements, boundary, umap, self.depth, self.window);
        (c, self.log)
    }
}
