//! Free F₂[U]-complexes with Alexander and Maslov gradings, and their
//! F₂-level truncations.

mod flevel;
mod json;
mod ops;
mod validate;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{UMatrix, UPoly};
use crate::error::{Error, Result};

pub use flevel::{hat_complex, truncate, Element, FLevelComplex};
pub use json::{ArrowRecord, ComplexJson, GeneratorRecord, UmapRecord};
pub use ops::{a0_minus, change_basis, mirror, shift_label};
pub use validate::{validate, validate_flevel, validate_with, ValidationReport, Violation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub alexander: i64,
    pub maslov: i64,
}

impl Generator {
    pub fn new(name: impl Into<String>, alexander: i64, maslov: i64) -> Self {
        Self { name: name.into(), alexander, maslov }
    }
}

/// A differential term: `∂(from)` contains `U^upower · to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub upower: u32,
}

/// The differential is stored with rows indexing targets and columns sources.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeUComplex {
    generators: Vec<Generator>,
    differential: UMatrix,
}

impl FreeUComplex {
    pub fn new(generators: Vec<Generator>, differential: UMatrix) -> Result<Self> {
        let n = generators.len();
        if differential.rows() != n || differential.cols() != n {
            return Err(Error::Malformed(format!(
                "differential is {}x{} for {n} generators",
                differential.rows(),
                differential.cols()
            )));
        }
        let mut seen = HashMap::new();
        for g in &generators {
            if seen.insert(g.name.as_str(), ()).is_some() {
                return Err(Error::Malformed(format!("duplicate generator name {}", g.name)));
            }
        }
        Ok(Self { generators, differential })
    }

    /// Repeated arrows between the same pair with the same power cancel.
    pub fn from_arrows(generators: Vec<Generator>, arrows: &[Arrow]) -> Result<Self> {
        let n = generators.len();
        let mut d = UMatrix::zeros(n, n);
        for a in arrows {
            if a.from >= n || a.to >= n {
                return Err(Error::Malformed(format!("arrow {a:?} refers to a missing generator")));
            }
            d.add_at(a.to, a.from, &UPoly::monomial(a.upower)?);
        }
        Self::new(generators, d)
    }

    /// One generator in bidegree (0, 0) with zero differential.
    pub fn unknot() -> Self {
        Self { generators: vec![Generator::new("x0", 0, 0)], differential: UMatrix::zeros(1, 1) }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn differential(&self) -> &UMatrix {
        &self.differential
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Differential terms, one per monomial, ordered by (from, to, upower).
    pub fn arrows(&self) -> Vec<Arrow> {
        let mut out: Vec<Arrow> = self
            .differential
            .iter()
            .flat_map(|(to, from, p)| p.exponents().map(move |upower| Arrow { from, to, upower }))
            .collect();
        out.sort();
        out
    }

    pub fn max_alexander(&self) -> i64 {
        self.generators.iter().map(|g| g.alexander).max().unwrap_or(0)
    }

    pub fn max_upower(&self) -> u32 {
        self.differential.iter().filter_map(|(_, _, p)| p.degree()).max().unwrap_or(0)
    }

    pub fn with_names(&self, mut rename: impl FnMut(&str) -> String) -> Result<Self> {
        let generators = self
            .generators
            .iter()
            .map(|g| Generator { name: rename(&g.name), ..g.clone() })
            .collect();
        Self::new(generators, self.differential.clone())
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// x(1,0), y(0,−1), z(−1,−2) with ∂y = Ux + z.
    pub fn trefoil() -> FreeUComplex {
        FreeUComplex::from_arrows(
            vec![Generator::new("x", 1, 0), Generator::new("y", 0, -1), Generator::new("z", -1, -2)],
            &[Arrow { from: 1, to: 0, upower: 1 }, Arrow { from: 1, to: 2, upower: 0 }],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_names_rejected() {
        let gens = vec![Generator::new("a", 0, 0), Generator::new("a", 0, 0)];
        assert!(FreeUComplex::from_arrows(gens, &[]).is_err());
    }

    #[test]
    fn repeated_arrows_cancel() {
        let gens = vec![Generator::new("a", 0, 0), Generator::new("b", 0, -1)];
        let arrow = Arrow { from: 0, to: 1, upower: 0 };
        let c = FreeUComplex::from_arrows(gens, &[arrow, arrow]).unwrap();
        assert!(c.arrows().is_empty());
    }

    #[test]
    fn trefoil_arrows() {
        let c = fixtures::trefoil();
        assert_eq!(c.arrows().len(), 2);
        assert_eq!(c.max_upower(), 1);
        assert_eq!(c.max_alexander(), 1);
    }
}
