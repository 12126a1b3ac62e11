//! Cancellation of horizontal arrows in F₂-level complexes.

mod cancel;
mod tower;

use std::ops::Deref;

use rand::Rng;

use crate::complex::{truncate, validate, FLevelComplex, FreeUComplex};
use crate::error::{Error, Result};
use crate::invariants::{d1_from_reduced, tau_from_reduced};

use cancel::Workspace;
pub use tower::{class_profile, top_class, tower_profile};

/// One cancelled pair, in the order it was removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cancellation {
    pub source: String,
    pub target: String,
    pub alexander: i64,
    pub order: usize,
}

/// An F₂-level complex with no boundary entry between elements of equal
/// Alexander grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedComplex {
    complex: FLevelComplex,
    reduced: bool,
    provenance: Vec<Cancellation>,
}

impl ReducedComplex {
    pub fn complex(&self) -> &FLevelComplex {
        &self.complex
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn provenance(&self) -> &[Cancellation] {
        &self.provenance
    }

    pub fn into_complex(self) -> FLevelComplex {
        self.complex
    }
}

impl Deref for ReducedComplex {
    type Target = FLevelComplex;
    fn deref(&self) -> &FLevelComplex {
        &self.complex
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Truncation depth; `None` picks [`default_depth`].
    pub depth: Option<u32>,
    /// Re-run at twice the depth and compare the results inside the window.
    pub verify: bool,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        Self { depth: None, verify: true }
    }
}

/// Depth used when none is given: four times the summed top Alexander
/// gradings, plus eight.
pub fn default_depth(top_alexander: i64) -> u32 {
    (4 * top_alexander.max(0) + 8) as u32
}

/// Depth for the stability re-run.
pub(crate) fn doubled(depth: u32) -> u32 {
    (2 * depth).max(depth + 1)
}

/// Cancels the single horizontal arrow `b → ch`.
pub fn cancel_arrow(c: &FLevelComplex, b: usize, ch: usize) -> Result<FLevelComplex> {
    let mut w = Workspace::new(c.clone());
    w.cancel(b, ch)?;
    Ok(w.finish().0)
}

/// Cancels every horizontal arrow, by decreasing Alexander grading with ties
/// broken by element order.
pub fn reduce_level(c: FLevelComplex) -> ReducedComplex {
    let mut w = Workspace::new(c);
    w.cancel_all();
    let (complex, provenance) = w.finish();
    debug_assert!(complex.horizontal_arrows().is_empty());
    ReducedComplex { complex, reduced: true, provenance }
}

/// As [`reduce_level`], picking each cancelled arrow uniformly at random.
pub fn reduce_level_random<R: Rng + ?Sized>(c: FLevelComplex, rng: &mut R) -> ReducedComplex {
    let mut w = Workspace::new(c);
    w.cancel_all_random(rng);
    let (complex, provenance) = w.finish();
    ReducedComplex { complex, reduced: true, provenance }
}

pub fn reduce(c: &FreeUComplex, opts: &ReduceOptions) -> Result<ReducedComplex> {
    let report = validate(c);
    if !report.passes() {
        return Err(Error::InvalidComplex(report));
    }
    let depth = opts.depth.unwrap_or_else(|| default_depth(c.max_alexander()));
    let r = reduce_level(truncate(c, depth));
    if opts.verify {
        let deeper = reduce_level(truncate(c, doubled(depth)));
        check_stable(&r, &deeper)?;
    }
    Ok(r)
}

/// Compares graded ranks, tower profile, d₁ and τ of `r` with those of a
/// deeper reduction of the same complex, inside `r`'s window.
pub fn check_stable(r: &ReducedComplex, deeper: &ReducedComplex) -> Result<()> {
    let w = r.stable_window();
    let fail = |detail: String| Err(Error::Unstable { depth: r.depth(), detail });
    let mut deep_ranks = deeper.graded_ranks();
    deep_ranks.retain(|&(a, _), _| a >= w);
    if r.graded_ranks() != deep_ranks {
        return fail("graded ranks change with depth".into());
    }
    let clip = |p: Result<Vec<(i64, i64)>>| {
        p.ok().map(|v| v.into_iter().take_while(|&(a, _)| a >= w).collect::<Vec<_>>())
    };
    if clip(tower_profile(r)) != clip(tower_profile(deeper)) {
        return fail("tower profile changes with depth".into());
    }
    if d1_from_reduced(r).ok() != d1_from_reduced(deeper).ok() {
        return fail("d1 changes with depth".into());
    }
    if tau_from_reduced(r).ok() != tau_from_reduced(deeper).ok() {
        return fail("tau changes with depth".into());
    }
    Ok(())
}
