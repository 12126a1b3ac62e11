use std::collections::HashSet;
use std::fmt;

use crate::f2::GradedView;

use super::{hat_complex, FLevelComplex, FreeUComplex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateName(String),
    NonMonomial { from: String, to: String, entry: String },
    GradingLaw { from: String, to: String, upower: u32 },
    FiltrationLaw { from: String, to: String, upower: u32 },
    BoundarySquared { from: String, to: String },
    HatNormalization { ranks: Vec<(i64, usize)> },
    UmapGrading { from: String, to: String },
    UmapCommutator { element: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DuplicateName(n) => write!(f, "duplicate name {n}"),
            Self::NonMonomial { from, to, entry } => {
                write!(f, "entry {from} -> {to} is {entry}, not a monomial")
            }
            Self::GradingLaw { from, to, upower } => {
                write!(f, "grading law fails on U^{upower} from {from} to {to}")
            }
            Self::FiltrationLaw { from, to, upower } => {
                write!(f, "filtration law fails on U^{upower} from {from} to {to}")
            }
            Self::BoundarySquared { from, to } => write!(f, "boundary squared has entry {from} -> {to}"),
            Self::HatNormalization { ranks } => {
                write!(f, "hat homology ranks by Maslov grading are {ranks:?}, expected one class in grading 0")
            }
            Self::UmapGrading { from, to } => write!(f, "U entry {from} -> {to} has wrong gradings"),
            Self::UmapCommutator { element } => write!(f, "U and the boundary do not commute on {element}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passes() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub fn validate(c: &FreeUComplex) -> ValidationReport {
    validate_with(c, true)
}

/// `hat_normalization = false` waives the grading-0 homology clause, as
/// needed for subcomplexes.
pub fn validate_with(c: &FreeUComplex, hat_normalization: bool) -> ValidationReport {
    let mut violations = Vec::new();
    let gens = c.generators();
    let name = |i: usize| gens[i].name.clone();

    let mut seen = HashSet::new();
    for g in gens {
        if !seen.insert(&g.name) {
            violations.push(Violation::DuplicateName(g.name.clone()));
        }
    }
    for (to, from, p) in c.differential().iter() {
        let Some(k) = p.monomial_exponent() else {
            violations.push(Violation::NonMonomial { from: name(from), to: name(to), entry: p.to_string() });
            continue;
        };
        let (x, y) = (&gens[to], &gens[from]);
        if x.maslov - 2 * k as i64 != y.maslov - 1 {
            violations.push(Violation::GradingLaw { from: name(from), to: name(to), upower: k });
        }
        if x.alexander - k as i64 > y.alexander {
            violations.push(Violation::FiltrationLaw { from: name(from), to: name(to), upower: k });
        }
    }
    match c.differential().checked_mul(c.differential()) {
        Ok(sq) => {
            for (to, from, _) in sq.iter() {
                violations.push(Violation::BoundarySquared { from: name(from), to: name(to) });
            }
        }
        Err(e) => violations.push(Violation::NonMonomial {
            from: String::new(),
            to: String::new(),
            entry: e.to_string(),
        }),
    }
    if hat_normalization && violations.is_empty() {
        let hat = hat_complex(c);
        let view = GradedView::new(&hat);
        let ranks: Vec<(i64, usize)> = view
            .gradings()
            .map(|m| (m, view.homology_dim(m)))
            .filter(|&(_, d)| d > 0)
            .collect();
        if ranks != [(0, 1)] {
            violations.push(Violation::HatNormalization { ranks });
        }
    }
    ValidationReport { violations }
}

pub fn validate_flevel(c: &FLevelComplex) -> ValidationReport {
    let mut violations = Vec::new();
    let label = |i: usize| c.element(i).label();
    for i in 0..c.len() {
        let e = c.element(i);
        for &t in c.boundary_of(i) {
            let f = c.element(t);
            if f.maslov != e.maslov - 1 {
                violations.push(Violation::GradingLaw { from: label(i), to: label(t), upower: 0 });
            }
            if f.alexander > e.alexander {
                violations.push(Violation::FiltrationLaw { from: label(i), to: label(t), upower: 0 });
            }
        }
        for t in c.apply_boundary(c.boundary_of(i)) {
            violations.push(Violation::BoundarySquared { from: label(i), to: label(t) });
        }
        for &t in c.umap_of(i) {
            let f = c.element(t);
            if f.maslov != e.maslov - 2 || f.alexander > e.alexander - 1 {
                violations.push(Violation::UmapGrading { from: label(i), to: label(t) });
            }
        }
        if c.apply_boundary(c.umap_of(i)) != c.apply_umap(c.boundary_of(i)) {
            violations.push(Violation::UmapCommutator { element: label(i) });
        }
    }
    ValidationReport { violations }
}
