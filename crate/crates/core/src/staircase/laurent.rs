use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer Laurent polynomial in `T`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exp: i64,
    pub coef: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub coeffs: Vec<TermRecord>,
}

impl LaurentPoly {
    pub fn one() -> Self {
        Self::from_terms([(0, 1)])
    }

    /// Sums the given `(exponent, coefficient)` terms.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: i64, c: i64) {
        let entry = self.coeffs.entry(e).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: i64) -> i64 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Nonzero terms by descending exponent.
    pub fn terms_desc(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().rev().map(|(&e, &c)| (e, c))
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&e, &c)| self.coeff(-e) == c)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&a, &x) in &self.coeffs {
            for (&b, &y) in &other.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    /// `T ↦ T^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(&e, &c)| (e * k, c)))
    }

    pub fn to_json(&self) -> LaurentJson {
        LaurentJson { coeffs: self.terms_desc().map(|(exp, coef)| TermRecord { exp, coef }).collect() }
    }

    pub fn from_json(json: &LaurentJson) -> Self {
        Self::from_terms(json.coeffs.iter().map(|t| (t.exp, t.coef)))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms_desc().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match i {
                0 if c < 0 => f.write_str("-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            let var = match e {
                0 => String::new(),
                1 => "T".into(),
                _ => format!("T^{e}"),
            };
            match (mag, var.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (1, false) => f.write_str(&var)?,
                _ => write!(f, "{mag}{var}")?,
            }
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Dense `t^k − 1`.
fn t_pow_minus_one(k: usize) -> Vec<i64> {
    let mut v = vec![0; k + 1];
    v[0] = -1;
    v[k] = 1;
    v
}

fn dense_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial; `None` if a remainder is left.
fn dense_div_exact(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    let mut q = vec![0; num.len().saturating_sub(dd).max(1)];
    for i in (dd..num.len()).rev() {
        let c = rem[i];
        if c != 0 {
            q[i - dd] = c;
            for (j, d) in den.iter().enumerate() {
                rem[i - dd + j] -= c * d;
            }
        }
    }
    rem.iter().all(|&c| c == 0).then_some(q)
}

/// Symmetrized Alexander polynomial of `T(p, q)` for coprime positive
/// parameters in either order; `1` when either is 1.
pub(crate) fn torus_alexander_any(p: u64, q: u64) -> Result<LaurentPoly> {
    if p == 0 || q == 0 || gcd(p, q) != 1 {
        return Err(Error::Parameters(format!("T({p},{q}) needs coprime positive parameters")));
    }
    if p == 1 || q == 1 {
        return Ok(LaurentPoly::one());
    }
    let (p, q) = (p as usize, q as usize);
    let num = dense_mul(&t_pow_minus_one(p * q), &t_pow_minus_one(1));
    let den = dense_mul(&t_pow_minus_one(p), &t_pow_minus_one(q));
    let quotient = dense_div_exact(&num, &den).expect("torus knot quotient is exact");
    let shift = ((p - 1) * (q - 1) / 2) as i64;
    Ok(LaurentPoly::from_terms(quotient.into_iter().enumerate().map(|(k, c)| (k as i64 - shift, c))))
}

pub fn torus_knot_alexander(p: i64, q: i64) -> Result<LaurentPoly> {
    if !(2 <= p && p < q) {
        return Err(Error::Parameters(format!("torus knot T({p},{q}) needs 2 <= p < q")));
    }
    torus_alexander_any(p as u64, q as u64)
}

/// `Δ(T^p) · Δ_{T(p,q)}(T)`: the Alexander polynomial of the `(p, q)`-cable.
pub fn cable_alexander(d: &LaurentPoly, p: i64, q: i64) -> Result<LaurentPoly> {
    if p < 2 || q == 0 || gcd(p as u64, q.unsigned_abs()) != 1 {
        return Err(Error::Parameters(format!("cable ({p},{q}) needs p >= 2 and gcd(p, q) = 1")));
    }
    Ok(d.substitute_power(p).mul(&torus_alexander_any(p as u64, q.unsigned_abs())?))
}
