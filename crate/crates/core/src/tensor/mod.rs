//! Connected sums as tensor products over F₂[U].

use crate::algebra::UMatrix;
use crate::complex::{truncate, validate, Element, FLevelComplex, FreeUComplex, Generator};
use crate::error::{Error, Result};
use crate::f2::{normalize, F2Vec};
use crate::reduction::{check_stable, default_depth, doubled, reduce_level, ReduceOptions, ReducedComplex};

fn require_valid(c: &FreeUComplex) -> Result<()> {
    let report = validate(c);
    if report.passes() {
        Ok(())
    } else {
        Err(Error::InvalidComplex(report))
    }
}

fn pair_name(a: &str, b: &str) -> String {
    format!("{a}|{b}")
}

/// `c1 ⊗ c2` with the Leibniz differential; generator `(i, j)` sits at
/// index `i·|c2| + j`.
pub fn tensor_free(c1: &FreeUComplex, c2: &FreeUComplex) -> Result<FreeUComplex> {
    require_valid(c1)?;
    require_valid(c2)?;
    let (n1, n2) = (c1.len(), c2.len());
    let mut generators = Vec::with_capacity(n1 * n2);
    for x in c1.generators() {
        for y in c2.generators() {
            generators.push(Generator::new(
                pair_name(&x.name, &y.name),
                x.alexander + y.alexander,
                x.maslov + y.maslov,
            ));
        }
    }
    let mut d = UMatrix::zeros(n1 * n2, n1 * n2);
    for (to, from, p) in c1.differential().iter() {
        for j in 0..n2 {
            d.add_at(to * n2 + j, from * n2 + j, p);
        }
    }
    for (to, from, p) in c2.differential().iter() {
        for i in 0..n1 {
            d.add_at(i * n2 + to, i * n2 + from, p);
        }
    }
    FreeUComplex::new(generators, d)
}

/// `r ⊗ c2` where every U-power in `c2`'s differential acts on `r` through
/// its transported U map. Element `(e, y)` sits at index `e·|c2| + y`.
pub fn tensor_reduced_free(r: &ReducedComplex, c2: &FreeUComplex) -> Result<FLevelComplex> {
    if !r.is_reduced() {
        return Err(Error::Malformed("left factor is not reduced".into()));
    }
    require_valid(c2)?;
    let kmax = c2.max_upower();
    if kmax > r.depth() {
        return Err(Error::WindowTooSmall(format!(
            "right factor uses U^{kmax} but the left factor is truncated at depth {}",
            r.depth()
        )));
    }
    let n2 = c2.len();
    // orbit[k][e] = U'^k e
    let mut orbit: Vec<Vec<F2Vec>> = vec![(0..r.len()).map(|e| vec![e]).collect()];
    for k in 1..=kmax as usize {
        let next = orbit[k - 1].iter().map(|v| r.apply_umap(v)).collect();
        orbit.push(next);
    }
    let mut targets: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n2];
    for (to, from, p) in c2.differential().iter() {
        for k in p.exponents() {
            targets[from].push((to, k));
        }
    }

    let mut elements = Vec::with_capacity(r.len() * n2);
    let mut boundary = Vec::with_capacity(r.len() * n2);
    let mut umap = Vec::with_capacity(r.len() * n2);
    for (ei, e) in r.elements().iter().enumerate() {
        for (yi, y) in c2.generators().iter().enumerate() {
            elements.push(Element {
                name: pair_name(&e.name, &y.name),
                depth: e.depth,
                alexander: e.alexander + y.alexander,
                maslov: e.maslov + y.maslov,
            });
            let mut img: Vec<usize> = r.boundary_of(ei).iter().map(|&t| t * n2 + yi).collect();
            for &(to, k) in &targets[yi] {
                img.extend(orbit[k as usize][ei].iter().map(|&t| t * n2 + to));
            }
            boundary.push(normalize(img));
            umap.push(r.umap_of(ei).iter().map(|&t| t * n2 + yi).collect());
        }
    }
    let window = r.stable_window() + c2.max_alexander();
    FLevelComplex::from_parts(elements, boundary, umap, r.depth(), window)
}

fn fold_sum(complexes: &[FreeUComplex], depth: u32) -> Result<ReducedComplex> {
    let mut acc = reduce_level(truncate(&complexes[0], depth));
    for c in &complexes[1..] {
        acc = reduce_level(tensor_reduced_free(&acc, c)?);
    }
    Ok(acc)
}

/// Reduces the first factor, then alternately tensors with the next factor
/// and reduces again.
pub fn sum_knot(complexes: &[FreeUComplex], opts: &ReduceOptions) -> Result<ReducedComplex> {
    if complexes.is_empty() {
        return Err(Error::Malformed("a sum needs at least one summand".into()));
    }
    for c in complexes {
        require_valid(c)?;
    }
    let depth = opts.depth.unwrap_or_else(|| default_depth(complexes.iter().map(|c| c.max_alexander()).sum()));
    let r = fold_sum(complexes, depth)?;
    if opts.verify {
        check_stable(&r, &fold_sum(complexes, doubled(depth))?)?;
    }
    Ok(r)
}

/// Iterated [`tensor_free`] over all factors, the reference pipeline for
/// [`sum_knot`].
pub fn sum_via_free(complexes: &[FreeUComplex]) -> Result<FreeUComplex> {
    let (first, rest) = complexes.split_first().ok_or_else(|| Error::Malformed("empty sum".into()))?;
    rest.iter().try_fold(first.clone(), |acc, c| tensor_free(&acc, c))
}
