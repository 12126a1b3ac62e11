use crate::error::{Error, Result};
use crate::f2::{normalize, F2Vec, GradedF2};

use super::{shift_label, FreeUComplex};

/// A basis element `U^depth · name` of an F₂-level complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub name: String,
    pub depth: u32,
    pub alexander: i64,
    pub maslov: i64,
}

impl Element {
    pub fn label(&self) -> String {
        shift_label(&self.name, self.depth)
    }
}

/// A finite F₂-complex with an F₂-linear `U` action.
///
/// Elements with Alexander grading at least `stable_window` are unaffected
/// by the truncation at `depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FLevelComplex {
    elements: Vec<Element>,
    boundary: Vec<F2Vec>,
    umap: Vec<F2Vec>,
    depth: u32,
    stable_window: i64,
}

impl FLevelComplex {
    /// Image lists are normalized; indices must be in range.
    pub fn from_parts(
        elements: Vec<Element>,
        boundary: Vec<Vec<usize>>,
        umap: Vec<Vec<usize>>,
        depth: u32,
        stable_window: i64,
    ) -> Result<Self> {
        let n = elements.len();
        if boundary.len() != n || umap.len() != n {
            return Err(Error::Malformed("boundary/umap length differs from element count".into()));
        }
        let check = |maps: Vec<Vec<usize>>| -> Result<Vec<F2Vec>> {
            maps.into_iter()
                .map(|v| {
                    if v.iter().any(|&i| i >= n) {
                        Err(Error::Malformed("image refers to a missing element".into()))
                    } else {
                        Ok(normalize(v))
                    }
                })
                .collect()
        };
        Ok(Self { elements, boundary: check(boundary)?, umap: check(umap)?, depth, stable_window })
    }

    pub(crate) fn from_parts_unchecked(
        elements: Vec<Element>,
        boundary: Vec<F2Vec>,
        umap: Vec<F2Vec>,
        depth: u32,
        stable_window: i64,
    ) -> Self {
        debug_assert!(boundary.iter().chain(&umap).all(|v| v.windows(2).all(|w| w[0] < w[1])));
        Self { elements, boundary, umap, depth, stable_window }
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn boundary_of(&self, i: usize) -> &[usize] {
        &self.boundary[i]
    }

    pub fn umap_of(&self, i: usize) -> &[usize] {
        &self.umap[i]
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn stable_window(&self) -> i64 {
        self.stable_window
    }

    pub fn in_window(&self, i: usize) -> bool {
        self.elements[i].alexander >= self.stable_window
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e.label() == label)
    }

    pub fn max_alexander(&self) -> Option<i64> {
        self.elements.iter().map(|e| e.alexander).max()
    }

    /// Boundary entries between elements of equal Alexander grading.
    pub fn horizontal_arrows(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (b, img) in self.boundary.iter().enumerate() {
            for &c in img {
                if self.elements[c].alexander == self.elements[b].alexander {
                    out.push((b, c));
                }
            }
        }
        out
    }

    /// Applies the F₂-linear boundary to a vector.
    pub fn apply_boundary(&self, v: &[usize]) -> F2Vec {
        normalize(v.iter().flat_map(|&i| self.boundary[i].iter().copied()).collect())
    }

    pub fn apply_umap(&self, v: &[usize]) -> F2Vec {
        normalize(v.iter().flat_map(|&i| self.umap[i].iter().copied()).collect())
    }

    /// Element counts per (Alexander, Maslov) for elements inside the window.
    pub fn graded_ranks(&self) -> std::collections::BTreeMap<(i64, i64), usize> {
        let mut out = std::collections::BTreeMap::new();
        for e in self.elements.iter().filter(|e| e.alexander >= self.stable_window) {
            *out.entry((e.alexander, e.maslov)).or_insert(0) += 1;
        }
        out
    }

    pub(crate) fn into_parts(self) -> (Vec<Element>, Vec<F2Vec>, Vec<F2Vec>, u32, i64) {
        (self.elements, self.boundary, self.umap, self.depth, self.stable_window)
    }
}

impl GradedF2 for FLevelComplex {
    fn size(&self) -> usize {
        self.elements.len()
    }
    fn alexander(&self, i: usize) -> i64 {
        self.elements[i].alexander
    }
    fn maslov(&self, i: usize) -> i64 {
        self.elements[i].maslov
    }
    fn boundary(&self, i: usize) -> &[usize] {
        &self.boundary[i]
    }
}

/// The quotient `C / U^{depth+1} C` as an F₂-complex.
///
/// Element `(x, n)` sits at index `x·(depth+1) + n`.
pub fn truncate(c: &FreeUComplex, depth: u32) -> FLevelComplex {
    let layers = depth as usize + 1;
    let mut elements = Vec::with_capacity(c.len() * layers);
    for g in c.generators() {
        for n in 0..=depth {
            elements.push(Element {
                name: g.name.clone(),
                depth: n,
                alexander: g.alexander - n as i64,
                maslov: g.maslov - 2 * n as i64,
            });
        }
    }
    let mut images: Vec<Vec<(usize, u32)>> = vec![Vec::new(); c.len()];
    for arrow in c.arrows() {
        images[arrow.from].push((arrow.to, arrow.upower));
    }
    let mut boundary = Vec::with_capacity(elements.len());
    let mut umap = Vec::with_capacity(elements.len());
    for (y, targets) in images.iter().enumerate() {
        for n in 0..=depth {
            let img = targets
                .iter()
                .filter(|(_, k)| n + k <= depth)
                .map(|&(x, k)| x * layers + (n + k) as usize)
                .collect();
            boundary.push(normalize(img));
            umap.push(if n < depth { vec![y * layers + n as usize + 1] } else { vec![] });
        }
    }
    let window = c.max_alexander() - depth as i64;
    FLevelComplex::from_parts_unchecked(elements, boundary, umap, depth, window)
}

/// `C / U C`: the U⁰ part of the differential. Every element is meaningful,
/// so the window is the lowest Alexander grading present.
pub fn hat_complex(c: &FreeUComplex) -> FLevelComplex {
    let t = truncate(c, 0);
    let window = c.generators().iter().map(|g| g.alexander).min().unwrap_or(0);
    let (elements, boundary, umap, depth, _) = t.into_parts();
    FLevelComplex::from_parts_unchecked(elements, boundary, umap, depth, window)
}
