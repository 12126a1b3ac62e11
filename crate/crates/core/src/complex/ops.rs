use crate::algebra::{UMatrix, UPoly};
use crate::error::{Error, Result};

use super::{validate, FreeUComplex, Generator};

/// Label of `U^n · name`.
pub fn shift_label(name: &str, n: u32) -> String {
    match n {
        0 => name.to_string(),
        1 => format!("U {name}"),
        _ => format!("U^{n} {name}"),
    }
}

fn dual_name(name: &str) -> String {
    match name.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{name}*"),
    }
}

/// Dual complex: gradings negated and every arrow reversed.
pub fn mirror(c: &FreeUComplex) -> Result<FreeUComplex> {
    let report = validate(c);
    if !report.passes() {
        return Err(Error::InvalidComplex(report));
    }
    let generators = c
        .generators()
        .iter()
        .map(|g| Generator::new(dual_name(&g.name), -g.alexander, -g.maslov))
        .collect();
    FreeUComplex::new(generators, c.differential().transpose())
}

/// The subcomplex spanned by `U^n x` with `n ≥ 0` and `A(x) − n ≤ 0`,
/// as a free complex on `U^{max(0, A(x))} x`.
pub fn a0_minus(c: &FreeUComplex) -> Result<FreeUComplex> {
    let shift: Vec<u32> = c.generators().iter().map(|g| g.alexander.max(0) as u32).collect();
    let generators = c
        .generators()
        .iter()
        .zip(&shift)
        .map(|(g, &m)| {
            Generator::new(shift_label(&g.name, m), g.alexander - m as i64, g.maslov - 2 * m as i64)
        })
        .collect();
    let n = c.len();
    let mut d = UMatrix::zeros(n, n);
    for a in c.arrows() {
        let k = shift[a.from] as i64 + a.upower as i64 - shift[a.to] as i64;
        if k < 0 {
            return Err(Error::NegativeExponent {
                from: c.generators()[a.from].name.clone(),
                to: c.generators()[a.to].name.clone(),
                upower: k,
            });
        }
        d.add_at(a.to, a.from, &UPoly::monomial(k as u32)?);
    }
    FreeUComplex::new(generators, d)
}

/// Replaces generator `target` by `target + U^upower·source`, a filtered
/// graded change of basis; the differential is conjugated accordingly.
pub fn change_basis(c: &FreeUComplex, target: usize, source: usize, upower: u32) -> Result<FreeUComplex> {
    let gens = c.generators();
    if target == source || target >= c.len() || source >= c.len() {
        return Err(Error::Parameters(format!("cannot add generator {source} to generator {target}")));
    }
    let (t, s) = (&gens[target], &gens[source]);
    if t.maslov != s.maslov - 2 * upower as i64 || s.alexander - (upower as i64) > t.alexander {
        return Err(Error::Parameters(format!(
            "U^{upower}·{} is not homogeneous with {} in a filtration-preserving way",
            s.name, t.name
        )));
    }
    // E = I + U^k e_{source,target} is its own inverse over F₂.
    let mut e = UMatrix::identity(c.len());
    e.set(source, target, UPoly::monomial(upower)?);
    let d = e.checked_mul(c.differential())?.checked_mul(&e)?;
    FreeUComplex::new(gens.to_vec(), d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::trefoil;
    use crate::complex::{validate_with, Arrow};

    #[test]
    fn mirror_trefoil() {
        let m = mirror(&trefoil()).unwrap();
        let names: Vec<_> = m.generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["x*", "y*", "z*"]);
        assert_eq!(m.generators()[0], Generator::new("x*", -1, 0));
        assert_eq!(m.generators()[2], Generator::new("z*", 1, 2));
        // ∂y = Ux + z dualizes to ∂x* = U y*, ∂z* = y*.
        assert_eq!(m.arrows(), vec![Arrow { from: 0, to: 1, upower: 1 }, Arrow { from: 2, to: 1, upower: 0 }]);
        assert!(validate(&m).passes());
        assert_eq!(mirror(&m).unwrap(), trefoil());
    }

    #[test]
    fn unknot_is_self_dual_up_to_names() {
        let u = FreeUComplex::unknot();
        let m = mirror(&u).unwrap();
        assert_eq!(m.generators()[0].alexander, 0);
        assert_eq!(m.generators()[0].maslov, 0);
        assert!(m.arrows().is_empty());
    }

    #[test]
    fn a0_of_trefoil() {
        let a = a0_minus(&trefoil()).unwrap();
        let gens: Vec<_> = a.generators().iter().map(|g| (g.name.as_str(), g.alexander, g.maslov)).collect();
        assert_eq!(gens, [("U x", 0, -2), ("y", 0, -1), ("z", -1, -2)]);
        assert_eq!(a.arrows(), vec![Arrow { from: 1, to: 0, upower: 0 }, Arrow { from: 1, to: 2, upower: 0 }]);
        assert!(validate_with(&a, false).passes());
    }

    #[test]
    fn a0_rejects_filtration_violation() {
        // ∂y = x with A(x) > A(y) breaks the filtration law.
        let c = FreeUComplex::from_arrows(
            vec![Generator::new("x", 2, 0), Generator::new("y", 0, 1)],
            &[Arrow { from: 1, to: 0, upower: 0 }],
        )
        .unwrap();
        assert!(matches!(a0_minus(&c), Err(Error::NegativeExponent { .. })));
    }

    #[test]
    fn basis_change_keeps_validity() {
        // x|z and z|x share bidegree (0, −2) in trefoil ⊗ trefoil.
        let c = crate::tensor::tensor_free(&trefoil(), &trefoil()).unwrap();
        let (t, s) = (c.index_of("x|z").unwrap(), c.index_of("z|x").unwrap());
        let d = change_basis(&c, t, s, 0).unwrap();
        assert!(validate(&d).passes());
        assert_ne!(d.differential(), c.differential());
        assert_eq!(change_basis(&d, t, s, 0).unwrap(), c);
        // U·x|x sits at A = 1 above z|x.
        assert!(change_basis(&c, s, c.index_of("x|x").unwrap(), 1).is_err());
    }
}
