use crate::complex::FLevelComplex;
use crate::error::{Error, Result};
use crate::f2::{F2Vec, GradedView};

use super::ReducedComplex;

/// A cycle representing the unique homology class in Maslov grading 0.
pub fn top_class(c: &FLevelComplex) -> Result<F2Vec> {
    let view = GradedView::new(c);
    let basis = view.homology_basis(0);
    match basis.as_slice() {
        [v] => Ok(view.to_global(0, v)),
        _ => Err(Error::Tower(format!("expected one class in Maslov grading 0, found {}", basis.len()))),
    }
}

/// (level, Maslov) of the classes `U^i·top` for as long as the level stays
/// inside the window. The level of a class is the lowest Alexander grading
/// of any representative.
pub fn class_profile(c: &FLevelComplex) -> Result<Vec<(i64, i64)>> {
    let view = GradedView::new(c);
    let mut v = top_class(c)?;
    let mut out = Vec::new();
    for i in 0.. {
        let m = -2 * i as i64;
        let level = view.class_level(m, &view.boundaries(m), view.to_local(&v));
        match level {
            Some(a) if a >= c.stable_window() => out.push((a, m)),
            _ => break,
        }
        v = c.apply_umap(&v);
    }
    Ok(out)
}

pub fn tower_profile(r: &ReducedComplex) -> Result<Vec<(i64, i64)>> {
    if !r.is_reduced() {
        return Err(Error::Tower("complex is not reduced".into()));
    }
    class_profile(r)
}
