//! τ, d₁ and the quantities derived from them.

mod homology;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::complex::{hat_complex, Element, FLevelComplex, FreeUComplex};
use crate::error::{Error, Result};
use crate::f2::GradedView;
use crate::reduction::{top_class, ReducedComplex};
use crate::staircase::LaurentPoly;

pub use homology::{d1, graded_homology, HomologySummary};

/// Filtration level of the unique homology class in Maslov grading 0.
fn level_of_top_class(c: &FLevelComplex) -> Result<i64> {
    let view = GradedView::new(c);
    let basis = view.homology_basis(0);
    let [v] = &basis[..] else {
        return Err(Error::Homology(format!("expected one class in grading 0, found {}", basis.len())));
    };
    let level = view.class_level(0, &view.boundaries(0), v.clone()).expect("basis vectors are not boundaries");
    if level < c.stable_window() {
        return Err(Error::WindowTooSmall(format!("grading-0 class sits at level {level}, below the window")));
    }
    Ok(level)
}

/// Lowest filtration level at which the grading-0 class of the hat complex
/// appears.
pub fn tau(c: &FreeUComplex) -> Result<i64> {
    level_of_top_class(&hat_complex(c))
}

/// τ from a reduced complex, via the mapping cone of its U map (which is
/// filtered equivalent to the hat complex).
pub fn tau_from_reduced(r: &ReducedComplex) -> Result<i64> {
    let n = r.len();
    let mut elements: Vec<Element> = r.elements().to_vec();
    let mut boundary: Vec<Vec<usize>> = (0..n).map(|i| r.boundary_of(i).to_vec()).collect();
    for (i, e) in r.elements().iter().enumerate() {
        elements.push(Element {
            name: format!("{}'", e.name),
            depth: e.depth,
            alexander: e.alexander - 1,
            maslov: e.maslov - 1,
        });
        let mut img: Vec<usize> = r.boundary_of(i).iter().map(|&t| t + n).collect();
        img.extend_from_slice(r.umap_of(i));
        boundary.push(img);
    }
    let cone = FLevelComplex::from_parts(elements, boundary, vec![vec![]; 2 * n], r.depth(), r.stable_window())?;
    level_of_top_class(&cone)
}

/// `−2i` for the first `i` with the class `U^i·top` at level ≤ 0.
pub fn d1_from_reduced(r: &ReducedComplex) -> Result<i64> {
    if r.stable_window() > 0 {
        return Err(Error::WindowTooSmall(format!("window starts at {} > 0", r.stable_window())));
    }
    let view = GradedView::new(r.complex());
    let mut v = top_class(r)?;
    for i in 0.. {
        let m = -2 * i as i64;
        match view.class_level(m, &view.boundaries(m), view.to_local(&v)) {
            Some(a) if a <= 0 => return Ok(m),
            Some(_) => v = r.apply_umap(&v),
            None => return Err(Error::Homology(format!("U-tower dies in grading {m}"))),
        }
    }
    unreachable!()
}

fn ratio_string<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurgeryD {
    #[serde(rename = "N")]
    pub n: i64,
    #[serde(serialize_with = "ratio_string")]
    pub d_large: Ratio<i64>,
    #[serde(serialize_with = "ratio_string")]
    pub d_half_zero: Ratio<i64>,
}

pub fn surgery_d_from_d1(d1: i64, n: i64) -> Result<SurgeryD> {
    if n < 1 {
        return Err(Error::Parameters(format!("surgery coefficient {n} must be positive")));
    }
    Ok(SurgeryD {
        n,
        d_large: Ratio::from_integer(d1) + Ratio::new(n - 1, 4),
        d_half_zero: Ratio::from_integer(d1) + Ratio::new(1, 2),
    })
}

/// `d(S³_N(K), s₀)` and `d_{1/2}(S³₀(K))`.
pub fn surgery_d(c: &FreeUComplex, n: i64) -> Result<SurgeryD> {
    surgery_d_from_d1(d1(c)?, n)
}

/// `Σ_j χ(generators in Alexander grading j) T^j`.
pub fn alexander_from_complex(c: &FreeUComplex) -> LaurentPoly {
    LaurentPoly::from_terms(
        c.generators().iter().map(|g| (g.alexander, if g.maslov.rem_euclid(2) == 0 { 1 } else { -1 })),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StrongerBound {
    Tau,
    D1,
    Equal,
}

/// Lower bounds on the smooth four-genus from `|τ|` and `⌈−d₁/2⌉`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusBounds {
    pub tau: i64,
    pub d1: i64,
    pub bound_tau: i64,
    pub bound_d1: i64,
    pub stronger: StrongerBound,
    /// `|d₁| > 2|τ|`: the d₁ bound beats τ.
    pub d1_exceeds_tau: bool,
}

pub fn genus_bounds(tau: i64, d1: i64) -> GenusBounds {
    let bound_tau = tau.abs();
    let bound_d1 = (-d1 + 1).div_euclid(2).max(0);
    let stronger = match bound_d1.cmp(&bound_tau) {
        std::cmp::Ordering::Greater => StrongerBound::D1,
        std::cmp::Ordering::Less => StrongerBound::Tau,
        std::cmp::Ordering::Equal => StrongerBound::Equal,
    };
    GenusBounds { tau, d1, bound_tau, bound_d1, stronger, d1_exceeds_tau: d1.abs() > 2 * tau.abs() }
}

pub fn genus_bounds_report(c: &FreeUComplex) -> Result<GenusBounds> {
    Ok(genus_bounds(tau(c)?, d1(c)?))
}

/// The summary printed for a knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub knot: String,
    pub tau: i64,
    pub d1: i64,
    pub d_large: DLarge,
    #[serde(serialize_with = "ratio_string")]
    pub d_half_zero: Ratio<i64>,
    pub bounds: GenusBounds,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DLarge {
    #[serde(rename = "N")]
    pub n: i64,
    #[serde(serialize_with = "ratio_string")]
    pub value: Ratio<i64>,
}

impl InvariantReport {
    pub fn new(knot: impl Into<String>, tau: i64, d1: i64, n: i64) -> Result<Self> {
        let s = surgery_d_from_d1(d1, n)?;
        Ok(Self {
            knot: knot.into(),
            tau,
            d1,
            d_large: DLarge { n, value: s.d_large },
            d_half_zero: s.d_half_zero,
            bounds: genus_bounds(tau, d1),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::mirror;
    use crate::reduction::{reduce, ReduceOptions};
    use crate::staircase::{staircase_complex, torus_knot_alexander, Staircase};

    fn sc(steps: &[u32]) -> FreeUComplex {
        staircase_complex(&Staircase::new(steps.to_vec()).unwrap(), false)
    }

    #[test]
    fn tau_of_torus_staircases() {
        assert_eq!(tau(&sc(&[1])).unwrap(), 1);
        assert_eq!(tau(&sc(&[1, 2])).unwrap(), 3);
        assert_eq!(tau(&FreeUComplex::unknot()).unwrap(), 0);
        assert_eq!(tau(&mirror(&sc(&[1, 2])).unwrap()).unwrap(), -3);
    }

    #[test]
    fn tau_agrees_through_the_cone() {
        for s in [vec![1], vec![1, 2], vec![2, 1, 1]] {
            let c = sc(&s);
            let r = reduce(&c, &ReduceOptions::default()).unwrap();
            assert_eq!(tau_from_reduced(&r).unwrap(), tau(&c).unwrap());
            let m = mirror(&c).unwrap();
            let rm = reduce(&m, &ReduceOptions::default()).unwrap();
            assert_eq!(tau_from_reduced(&rm).unwrap(), tau(&m).unwrap());
        }
    }

    #[test]
    fn d1_agrees_through_reduction() {
        for s in [vec![1], vec![1, 1], vec![1, 2], vec![1, 1, 1]] {
            let c = sc(&s);
            let r = reduce(&c, &ReduceOptions::default()).unwrap();
            assert_eq!(d1_from_reduced(&r).unwrap(), d1(&c).unwrap());
        }
    }

    #[test]
    fn surgery_values() {
        let u = surgery_d(&FreeUComplex::unknot(), 5).unwrap();
        assert_eq!(u.d_large, Ratio::from_integer(1));
        assert_eq!(u.d_half_zero, Ratio::new(1, 2));
        let t25 = sc(&[1, 1]);
        assert_eq!(surgery_d(&t25, 1).unwrap().d_large, Ratio::from_integer(-2));
        assert_eq!(surgery_d(&t25, 9).unwrap().d_large, Ratio::from_integer(0));
        assert!(surgery_d(&t25, 0).is_err());
    }

    #[test]
    fn alexander_recovered_from_gradings() {
        assert_eq!(alexander_from_complex(&sc(&[1])), torus_knot_alexander(2, 3).unwrap());
        assert_eq!(alexander_from_complex(&FreeUComplex::unknot()), LaurentPoly::one());
        assert_eq!(alexander_from_complex(&sc(&[1, 2])), torus_knot_alexander(3, 4).unwrap());
    }

    #[test]
    fn bounds() {
        let t34 = genus_bounds_report(&sc(&[1, 2])).unwrap();
        assert_eq!((t34.tau, t34.d1, t34.bound_tau, t34.bound_d1), (3, -2, 3, 1));
        assert_eq!(t34.stronger, StrongerBound::Tau);
        let u = genus_bounds_report(&FreeUComplex::unknot()).unwrap();
        assert_eq!((u.tau, u.d1, u.bound_tau, u.bound_d1), (0, 0, 0, 0));
        let k = genus_bounds(0, -6);
        assert_eq!((k.bound_d1, k.stronger, k.d1_exceeds_tau), (3, StrongerBound::D1, true));
    }

    #[test]
    fn report_json_shape() {
        let r = InvariantReport::new("torus(2,5)", 2, -2, 1).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["d_large"]["N"], 1);
        assert_eq!(v["d_large"]["value"], "-2");
        assert_eq!(v["d_half_zero"], "-3/2");
        let text = serde_json::to_string(&r).unwrap();
        let at = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
        assert!(at("knot") < at("tau") && at("tau") < at("d1") && at("d1") < at("d_large"));
        assert!(at("d_large") < at("d_half_zero") && at("d_half_zero") < at("bounds"));
    }
}
