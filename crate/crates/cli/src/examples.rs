//! Reproduction of the worked examples by tag, each value compared with
//! its closed form where one is known.

use cfk::complex::{a0_minus, mirror, ComplexJson};
use cfk::invariants::{d1, d1_from_reduced, tau, tau_from_reduced};
use cfk::reduction::{reduce, tower_profile, ReduceOptions};
use cfk::staircase::{is_lspace_form, representative_staircase, Staircase};
use cfk::tensor::{sum_knot, sum_via_free, tensor_reduced_free};
use clap::ValueEnum;
use serde::Serialize;

use crate::checks::{alexander_of, cross_d1, summands};
use crate::expr::KnotExpr;
use crate::formulas::{j_p_plus_steps, k_p_d1, staircase_tower, torus_tau};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Tag {
    Trefoil,
    T27,
    T34,
    D1t25,
    #[value(name = "d_gt_0")]
    DGt0,
    #[value(name = "k_p")]
    KP,
    #[value(name = "j_p")]
    JP,
    Cables,
}

#[derive(Clone, Debug, Serialize)]
pub struct Figure {
    pub title: String,
    pub complex: ComplexJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleValue {
    pub what: String,
    pub value: String,
    /// `None` for values shown without a closed form to compare against.
    pub expected: Option<String>,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleReport {
    pub tag: String,
    pub figures: Vec<Figure>,
    pub values: Vec<ExampleValue>,
}

impl ExampleReport {
    pub fn success(&self) -> bool {
        self.values.iter().all(|v| v.ok)
    }

    fn figure(&mut self, title: impl Into<String>, complex: ComplexJson) {
        self.figures.push(Figure { title: title.into(), complex });
    }

    fn compare<T: ToString + PartialEq>(&mut self, what: impl Into<String>, value: T, expected: T) {
        let ok = value == expected;
        self.values.push(ExampleValue {
            what: what.into(),
            value: value.to_string(),
            expected: Some(expected.to_string()),
            ok,
        });
    }

    fn info(&mut self, what: impl Into<String>, value: impl ToString) {
        self.values.push(ExampleValue { what: what.into(), value: value.to_string(), expected: None, ok: true });
    }
}

fn err(e: String) -> CliError {
    CliError::Elaboration(e)
}

fn one(text: &str) -> Result<cfk::complex::FreeUComplex, CliError> {
    Ok(summands(text).map_err(err)?.remove(0))
}

fn profile_text(p: &[(i64, i64)]) -> String {
    let parts: Vec<String> = p.iter().map(|(a, m)| format!("({a},{m})")).collect();
    parts.join(" ")
}

/// A reduction shallow enough to print, unless a depth was given.
fn display_opts(opts: &ReduceOptions, genus: i64) -> ReduceOptions {
    ReduceOptions { depth: Some(opts.depth.unwrap_or(2 * genus as u32 + 2)), verify: false }
}

fn torus_example(rep: &mut ExampleReport, p: i64, q: i64, opts: &ReduceOptions) -> Result<(), CliError> {
    let name = format!("T({p},{q})");
    let c = one(&format!("torus({p},{q})"))?;
    let g = torus_tau(p, q);
    rep.figure(format!("CFK^-({name})"), c.to_json());
    rep.figure(format!("reduced CFK^-({name})"), reduce(&c, &display_opts(opts, g))?.to_json());
    rep.compare(format!("tau({name})"), tau(&c)?, g);
    let r = reduce(&c, opts)?;
    rep.compare(format!("reduced {name} in L-space form"), is_lspace_form(&r), true);
    let tower = tower_profile(&r)?;
    let steps = KnotExpr::Torus(p, q).lspace_staircase()?;
    let shown = tower.len().min(8);
    rep.compare(
        format!("tower levels (A,M) of {name}"),
        profile_text(&tower[..shown]),
        profile_text(&staircase_tower(&steps.steps, shown)),
    );
    rep.info(format!("d1({name})"), d1(&c)?);
    Ok(())
}

pub fn run_example(tag: Tag, p: Option<i64>, opts: &ReduceOptions) -> Result<ExampleReport, CliError> {
    let name = tag.to_possible_value().expect("no skipped variants").get_name().to_string();
    let mut rep = ExampleReport { tag: name, figures: Vec::new(), values: Vec::new() };
    match tag {
        Tag::Trefoil => torus_example(&mut rep, 2, 3, opts)?,
        Tag::T27 => torus_example(&mut rep, 2, 7, opts)?,
        Tag::T34 => {
            torus_example(&mut rep, 3, 4, opts)?;
            rep.figure("CFK^-(-T(3,4))", mirror(&one("torus(3,4)")?)?.to_json());
        }
        Tag::D1t25 => {
            let c = one("torus(2,5)")?;
            rep.figure("A_0 subcomplex of CFK^-(T(2,5))", a0_minus(&c)?.to_json());
            rep.compare("d1(T(2,5))", d1(&c)?, -2);
        }
        Tag::DGt0 => {
            let parts = summands("sum(torus(2,7), mirror(torus(3,4)))").map_err(err)?;
            let shallow = reduce(&parts[0], &display_opts(opts, 3))?;
            rep.figure("reduced CFK^-(T(2,7)) tensor CFK^-(-T(3,4))", tensor_reduced_free(&shallow, &parts[1])?.to_json());
            let full = sum_via_free(&parts)?;
            let r = sum_knot(&parts, opts)?;
            rep.compare("d1(T(2,7) # -T(3,4)), full tensor", d1(&full)?, -2);
            rep.compare("d1(T(2,7) # -T(3,4)), reduce-first", d1_from_reduced(&r)?, -2);
            rep.compare("tau(T(2,7) # -T(3,4))", tau_from_reduced(&r)?, torus_tau(2, 7) - torus_tau(3, 4));
        }
        Tag::KP => {
            let range = match p {
                Some(p) if p < 2 => return Err(CliError::Usage(format!("K_p needs p >= 2, got {p}"))),
                Some(p) => p..=p,
                None => 2..=7,
            };
            for p in range {
                let parts = summands(&format!("sum(torus(2,{}), mirror(torus({p},{})))", p * (p - 1) + 1, p + 1))
                    .map_err(err)?;
                let r = sum_knot(&parts, opts)?;
                rep.compare(format!("d1(K_{p})"), d1_from_reduced(&r)?, k_p_d1(p));
                rep.compare(format!("tau(K_{p})"), tau_from_reduced(&r)?, 0);
            }
        }
        Tag::JP => {
            let p = p.unwrap_or(2);
            if p < 1 {
                return Err(CliError::Usage(format!("J_p needs p >= 1, got {p}")));
            }
            let plus = format!("sum(torus(2,{}), torus({},{}))", 8 * p + 1, 4 * p, 4 * p + 1);
            let rep_stair = representative_staircase(&sum_knot(&summands(&plus).map_err(err)?, opts)?)?;
            rep.compare(
                format!("representative staircase of J_{p}+"),
                rep_stair,
                Staircase::new(j_p_plus_steps(p as u32))?,
            );
            let all = summands(&format!("sum({plus}, mirror(torus({},{})))", 4 * p + 1, 4 * p + 2)).map_err(err)?;
            let r = sum_knot(&all, opts)?;
            rep.compare(format!("d1(J_{p})"), d1_from_reduced(&r)?, -2 * p);
            rep.compare(format!("tau(J_{p})"), tau_from_reduced(&r)?, 0);
        }
        Tag::Cables => {
            let k1 = "sum(cable(torus(2,3),2,3), torus(2,5))";
            let k2 = "sum(cable(torus(2,3),2,5), torus(2,3))";
            let (a1, a2) = (alexander_of(k1).map_err(err)?, alexander_of(k2).map_err(err)?);
            rep.info("Alexander polynomial of K1", &a1);
            rep.compare("Alexander polynomials of K1 and K2 agree", a1 == a2, true);
            let (pos, neg) = cross_d1(k1, k2).map_err(err)?;
            rep.info("d1(K1 # -K2)", pos);
            rep.info("d1(-K1 # K2)", neg);
            rep.compare("d1 separates K1 and K2", pos != 0 || neg != 0, true);
            let k3 = "sum(cable(torus(2,3),2,13), torus(2,15))";
            let k4 = "sum(cable(torus(2,3),2,15), torus(2,13))";
            let (pos, neg) = cross_d1(k3, k4).map_err(err)?;
            rep.compare("d1(K3 # -K4)", pos, 0);
            rep.compare("d1(-K3 # K4)", neg, 0);
        }
    }
    Ok(rep)
}
