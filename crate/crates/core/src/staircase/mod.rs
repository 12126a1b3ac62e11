//! L-space knot models: staircases, their complexes, and Alexander polynomials.

mod laurent;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{mirror, Arrow, FreeUComplex, Generator};
use crate::error::{Error, Result};
use crate::invariants::d1;
use crate::reduction::{tower_profile, ReducedComplex};
use crate::tensor::tensor_free;

pub use laurent::{cable_alexander, torus_knot_alexander, LaurentJson, LaurentPoly, TermRecord};

/// Step lengths `[α₁, …, αₙ]`; the genus is their sum.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Staircase {
    pub steps: Vec<u32>,
}

impl Staircase {
    pub fn new(steps: Vec<u32>) -> Result<Self> {
        if steps.contains(&0) {
            return Err(Error::Staircase("steps must be positive".into()));
        }
        Ok(Self { steps })
    }

    pub fn unknot() -> Self {
        Self::default()
    }

    pub fn genus(&self) -> i64 {
        self.steps.iter().map(|&a| a as i64).sum()
    }

    /// Alexander gradings of the generators from the top corner down.
    pub fn alexander_gradings(&self) -> Vec<i64> {
        let n = self.steps.len();
        let mut a = self.genus();
        let mut out = vec![a];
        for j in 0..n {
            a -= self.steps[j] as i64;
            out.push(a);
            a -= self.steps[n - 1 - j] as i64;
            out.push(a);
        }
        out
    }

    /// `Σ (−1)^k T^{A(x_k)}` over the generators.
    pub fn alexander(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.alexander_gradings().into_iter().enumerate().map(|(k, a)| (a, if k % 2 == 0 { 1 } else { -1 })),
        )
    }

    /// All staircases of genus `g`, i.e. the compositions of `g`.
    pub fn all_of_genus(g: u32) -> Vec<Staircase> {
        if g == 0 {
            return vec![Self::unknot()];
        }
        (0u64..1 << (g - 1))
            .map(|cuts| {
                let mut steps = Vec::new();
                let mut run = 1;
                for i in 0..g - 1 {
                    if cuts >> i & 1 == 1 {
                        steps.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                steps.push(run);
                Staircase { steps }
            })
            .collect()
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Inverts [`Staircase::alexander`] for L-space knot polynomials.
pub fn staircase_from_alexander(d: &LaurentPoly) -> Result<Staircase> {
    let terms: Vec<(i64, i64)> = d.terms_desc().collect();
    if terms.is_empty() {
        return Err(Error::NotLSpacePolynomial("zero polynomial".into()));
    }
    if !d.is_symmetric() {
        return Err(Error::NotLSpacePolynomial(format!("{d} is not symmetric")));
    }
    for (k, &(e, c)) in terms.iter().enumerate() {
        let expected = if k % 2 == 0 { 1 } else { -1 };
        if c != expected {
            return Err(Error::NotLSpacePolynomial(format!("coefficient {c} at T^{e} breaks the +1/-1 alternation")));
        }
    }
    let n = (terms.len() - 1) / 2;
    let steps = (0..n).map(|j| (terms[2 * j].0 - terms[2 * j + 1].0) as u32).collect();
    Staircase::new(steps)
}

/// Generator names follow `x_n, …, x_{−n}` from the top corner down.
pub fn staircase_complex(s: &Staircase, mirrored: bool) -> FreeUComplex {
    let n = s.steps.len();
    let gradings = s.alexander_gradings();
    let mut generators = Vec::with_capacity(2 * n + 1);
    let mut maslov = 0;
    for (k, &a) in gradings.iter().enumerate() {
        if k > 0 {
            maslov += if k % 2 == 1 { 1 - 2 * s.steps[(k - 1) / 2] as i64 } else { -1 };
        }
        generators.push(Generator::new(format!("x{}", n as i64 - k as i64), a, maslov));
    }
    let arrows: Vec<Arrow> = (1..=n)
        .flat_map(|j| {
            let odd = 2 * j - 1;
            [
                Arrow { from: odd, to: odd - 1, upower: s.steps[j - 1] },
                Arrow { from: odd, to: odd + 1, upower: 0 },
            ]
        })
        .collect();
    let c = FreeUComplex::from_arrows(generators, &arrows).expect("staircase data is well formed");
    if mirrored {
        mirror(&c).expect("staircase complexes are valid")
    } else {
        c
    }
}

/// Reads step lengths off the tower profile of a reduced sum of positive
/// staircases.
pub fn representative_staircase(r: &ReducedComplex) -> Result<Staircase> {
    let profile = tower_profile(r)?;
    if profile.iter().any(|&(_, m)| m % 2 != 0) {
        return Err(Error::Tower("odd grading on the tower".into()));
    }
    let levels: Vec<i64> = profile.iter().map(|&(a, _)| a).collect();
    let genus = *levels.first().ok_or_else(|| Error::Tower("empty tower profile".into()))?;
    if genus < 0 {
        return Err(Error::Tower(format!("top level {genus} is negative")));
    }
    let mut steps: Vec<i64> = Vec::new();
    let mut drops = Vec::new();
    let mut run = 1;
    let mut tail_start = if genus == 0 { Some(0) } else { None };
    for t in 1..levels.len() {
        if tail_start.is_some() {
            break;
        }
        let drop = levels[t - 1] - levels[t];
        if drop == 1 {
            run += 1;
        } else if drop >= 2 {
            steps.push(run);
            drops.push(drop);
            run = 1;
        } else {
            return Err(Error::Tower(format!("level rises or stalls at step {t}")));
        }
        let total: i64 = steps.iter().sum();
        if total == genus {
            tail_start = Some(t);
        } else if total + run > genus {
            return Err(Error::Tower("a block runs past the genus".into()));
        }
    }
    let tail_start = tail_start.ok_or_else(|| Error::WindowTooSmall("tower ends before the staircase closes".into()))?;
    let n = steps.len();
    for (i, &drop) in drops.iter().enumerate() {
        if drop != 1 + steps[n - 1 - i] {
            return Err(Error::Tower(format!("jump {drop} after block {} does not match the blocks", i + 1)));
        }
    }
    if levels[tail_start] != -genus || levels[tail_start..].windows(2).any(|w| w[0] - w[1] != 1) {
        return Err(Error::Tower("tail is not linear from minus the genus".into()));
    }
    Staircase::new(steps.into_iter().map(|s| s as u32).collect())
}

/// Inside the window: one element in each grading 0, −2, −4, …, nothing
/// else, and U mapping each to the next.
pub fn is_lspace_form(r: &ReducedComplex) -> bool {
    let inside: Vec<usize> = (0..r.len()).filter(|&i| r.in_window(i)).collect();
    let mut by_grading: Vec<Option<usize>> = vec![None; inside.len()];
    for &i in &inside {
        let m = r.element(i).maslov;
        if m > 0 || m % 2 != 0 || (-m / 2) as usize >= inside.len() {
            return false;
        }
        let slot = &mut by_grading[(-m / 2) as usize];
        if slot.replace(i).is_some() {
            return false;
        }
    }
    let chain: Vec<usize> = by_grading.into_iter().map(|s| s.expect("counts match")).collect();
    chain.iter().enumerate().all(|(k, &i)| {
        let image: Vec<usize> = r.umap_of(i).iter().copied().filter(|&t| r.in_window(t)).collect();
        match chain.get(k + 1) {
            Some(&next) => image == [next],
            None => image.is_empty(),
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConcordanceVerdict {
    pub d1_pos: i64,
    pub d1_neg: i64,
    pub alexander_equal: bool,
}

/// d₁ of `K₁ # −K₂` and `−K₁ # K₂`, computed from full tensor products.
pub fn concordance_verdict(s1: &Staircase, s2: &Staircase) -> Result<ConcordanceVerdict> {
    let (c1, c2) = (staircase_complex(s1, false), staircase_complex(s2, false));
    let d1_pos = d1(&tensor_free(&c1, &mirror(&c2)?)?)?;
    let d1_neg = d1(&tensor_free(&mirror(&c1)?, &c2)?)?;
    let alexander_equal = s1 == s2;
    if (d1_pos == 0 && d1_neg == 0) != alexander_equal {
        return Err(Error::Concordance(format!(
            "{s1} vs {s2}: d1 values ({d1_pos}, {d1_neg}) disagree with staircase equality"
        )));
    }
    Ok(ConcordanceVerdict { d1_pos, d1_neg, alexander_equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::validate;
    use crate::reduction::{reduce, ReduceOptions};

    fn st(steps: &[u32]) -> Staircase {
        Staircase::new(steps.to_vec()).unwrap()
    }

    #[test]
    fn trefoil_complex_matches_hand_model() {
        let c = staircase_complex(&st(&[1]), false);
        let gens: Vec<_> = c.generators().iter().map(|g| (g.name.as_str(), g.alexander, g.maslov)).collect();
        assert_eq!(gens, [("x1", 1, 0), ("x0", 0, -1), ("x-1", -1, -2)]);
        assert_eq!(c, crate::complex::fixtures::trefoil().with_names(|n| match n {
            "x" => "x1".into(),
            "y" => "x0".into(),
            _ => "x-1".into(),
        }).unwrap());
    }

    #[test]
    fn t27_and_unknot_complexes() {
        let c = staircase_complex(&st(&[1, 1, 1]), false);
        let a: Vec<_> = c.generators().iter().map(|g| g.alexander).collect();
        assert_eq!(a, [3, 2, 1, 0, -1, -2, -3]);
        assert_eq!(staircase_complex(&Staircase::unknot(), false).len(), 1);
    }

    #[test]
    fn staircase_complexes_validate() {
        for g in 0..=6 {
            for s in Staircase::all_of_genus(g) {
                assert!(validate(&staircase_complex(&s, false)).passes(), "{s}");
                assert!(validate(&staircase_complex(&s, true)).passes(), "{s} mirrored");
            }
        }
    }

    #[test]
    fn compositions_are_counted() {
        assert_eq!(Staircase::all_of_genus(0).len(), 1);
        assert_eq!(Staircase::all_of_genus(5).len(), 16);
        assert!(Staircase::all_of_genus(3).contains(&st(&[1, 2])));
    }

    #[test]
    fn staircases_from_torus_polynomials() {
        assert_eq!(staircase_from_alexander(&torus_knot_alexander(3, 4).unwrap()).unwrap(), st(&[1, 2]));
        for q in [3, 5, 7, 9, 11] {
            let s = staircase_from_alexander(&torus_knot_alexander(2, q).unwrap()).unwrap();
            assert_eq!(s.steps, vec![1; (q as usize - 1) / 2]);
        }
        for p in 2..=8 {
            let s = staircase_from_alexander(&torus_knot_alexander(p, p + 1).unwrap()).unwrap();
            assert_eq!(s.steps, (1..p as u32).collect::<Vec<_>>());
        }
    }

    #[test]
    fn non_lspace_polynomials_rejected() {
        let fig8 = LaurentPoly::from_terms([(1, -1), (0, 3), (-1, -1)]);
        assert!(staircase_from_alexander(&fig8).is_err());
        let lopsided = LaurentPoly::from_terms([(2, 1), (0, -1), (-1, 1)]);
        assert!(staircase_from_alexander(&lopsided).is_err());
    }

    #[test]
    fn lspace_form_of_reduced_staircases() {
        let opts = ReduceOptions::default();
        for s in [st(&[1, 2]), Staircase::unknot(), st(&[1, 1, 1]), st(&[2, 1, 3])] {
            let r = reduce(&staircase_complex(&s, false), &opts).unwrap();
            assert!(is_lspace_form(&r), "{s}");
            assert_eq!(representative_staircase(&r).unwrap(), s);
        }
    }

    #[test]
    fn self_verdict_is_zero() {
        let s = st(&[1, 2]);
        let v = concordance_verdict(&s, &s).unwrap();
        assert_eq!(v, ConcordanceVerdict { d1_pos: 0, d1_neg: 0, alexander_equal: true });
    }
}
