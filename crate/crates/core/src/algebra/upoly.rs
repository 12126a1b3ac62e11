use std::fmt;
use std::ops::{Add, AddAssign};

use super::AlgebraError;

/// Largest U-exponent accepted by default.
pub const DEFAULT_EXPONENT_CAP: u32 = 1 << 16;

/// A polynomial in `U` over F₂, stored as a little-endian bitmask.
///
/// Trailing zero words are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UPoly {
    words: Vec<u64>,
}

impl UPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { words: vec![1] }
    }

    /// `U^k`, rejecting exponents above the default cap.
    pub fn monomial(k: u32) -> Result<Self, AlgebraError> {
        Self::monomial_capped(k, DEFAULT_EXPONENT_CAP)
    }

    pub fn monomial_capped(k: u32, cap: u32) -> Result<Self, AlgebraError> {
        if k > cap {
            return Err(AlgebraError::ExponentOverflow { exponent: k as u64, cap });
        }
        let mut words = vec![0u64; (k / 64) as usize + 1];
        words[(k / 64) as usize] = 1u64 << (k % 64);
        Ok(Self { words })
    }

    /// Builds a polynomial from a list of exponents; repeated exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = u32>>(exps: I) -> Result<Self, AlgebraError> {
        let mut p = Self::zero();
        for k in exps {
            p += &Self::monomial(k)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    pub fn degree(&self) -> Option<u32> {
        let top = *self.words.last()?;
        Some((self.words.len() as u32 - 1) * 64 + 63 - top.leading_zeros())
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i as u32 * 64 + w.trailing_zeros())
    }

    pub fn coeff(&self, k: u32) -> bool {
        self.words
            .get((k / 64) as usize)
            .is_some_and(|w| (w >> (k % 64)) & 1 == 1)
    }

    /// The exponent `k` when `self == U^k`.
    pub fn monomial_exponent(&self) -> Option<u32> {
        let d = self.degree()?;
        (self.valuation() == Some(d)).then_some(d)
    }

    /// Exponents with coefficient 1, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros();
                    w &= w - 1;
                    i as u32 * 64 + b
                })
            })
        })
    }

    /// Multiplication by `U^k`.
    pub fn shifted(&self, k: u32) -> Result<Self, AlgebraError> {
        self.shifted_capped(k, DEFAULT_EXPONENT_CAP)
    }

    fn shifted_capped(&self, k: u32, cap: u32) -> Result<Self, AlgebraError> {
        let Some(d) = self.degree() else {
            return Ok(Self::zero());
        };
        if d as u64 + k as u64 > cap as u64 {
            return Err(AlgebraError::ExponentOverflow { exponent: d as u64 + k as u64, cap });
        }
        let (wshift, bshift) = ((k / 64) as usize, k % 64);
        let mut words = vec![0u64; wshift + self.words.len() + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + wshift] ^= w << bshift;
            if bshift > 0 {
                words[i + wshift + 1] ^= w >> (64 - bshift);
            }
        }
        Ok(Self::trimmed(words))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_mul_capped(other, DEFAULT_EXPONENT_CAP)
    }

    pub fn checked_mul_capped(&self, other: &Self, cap: u32) -> Result<Self, AlgebraError> {
        let mut acc = Self::zero();
        for k in self.exponents() {
            acc += &other.shifted_capped(k, cap)?;
        }
        Ok(acc)
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), AlgebraError> {
        let dd = d.degree().ok_or(AlgebraError::DivisionByZero)?;
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let s = rd - dd;
            q += &Self::monomial_capped(s, u32::MAX)?;
            r += &d.shifted_capped(s, u32::MAX)?;
        }
        Ok((q, r))
    }

    fn trimmed(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Self { words }
    }
}

impl AddAssign<&UPoly> for UPoly {
    fn add_assign(&mut self, rhs: &UPoly) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl Add<&UPoly> for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut exps: Vec<u32> = self.exponents().collect();
        exps.reverse();
        for (i, k) in exps.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match k {
                0 => f.write_str("1")?,
                1 => f.write_str("U")?,
                _ => write!(f, "U^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(exps: &[u32]) -> UPoly {
        UPoly::from_exponents(exps.iter().copied()).unwrap()
    }

    #[test]
    fn characteristic_two() {
        assert!((&p(&[1, 0]) + &p(&[1, 0])).is_zero());
    }

    #[test]
    fn frobenius_square() {
        assert_eq!(p(&[1, 0]).checked_mul(&p(&[1, 0])).unwrap(), p(&[2, 0]));
    }

    #[test]
    fn hand_product() {
        assert_eq!(p(&[3]).checked_mul(&p(&[2, 1])).unwrap(), p(&[5, 4]));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(UPoly::monomial(DEFAULT_EXPONENT_CAP + 1).is_err());
        let big = UPoly::monomial(DEFAULT_EXPONENT_CAP).unwrap();
        assert!(big.checked_mul(&p(&[1])).is_err());
        assert!(UPoly::monomial_capped(5, 4).is_err());
    }

    #[test]
    fn display_and_degree() {
        assert_eq!(p(&[0, 1, 70]).to_string(), "U^70 + U + 1");
        assert_eq!(p(&[0, 1, 70]).degree(), Some(70));
        assert_eq!(p(&[70]).monomial_exponent(), Some(70));
        assert_eq!(p(&[3, 70]).monomial_exponent(), None);
        assert_eq!(UPoly::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = UPoly> {
        prop::collection::vec(0u32..150, 0..8).prop_map(|v| UPoly::from_exponents(v).unwrap())
    }

    // Naive coefficient-list multiplication as an independent reference.
    fn naive_mul(a: &UPoly, b: &UPoly) -> UPoly {
        let mut coeffs = vec![false; 400];
        for i in a.exponents() {
            for j in b.exponents() {
                coeffs[(i + j) as usize] ^= true;
            }
        }
        UPoly::from_exponents(
            coeffs.iter().enumerate().filter(|(_, c)| **c).map(|(k, _)| k as u32),
        )
        .unwrap()
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let ab = a.checked_mul(&b).unwrap();
            prop_assert_eq!(&ab, &b.checked_mul(&a).unwrap());
            prop_assert_eq!(&ab, &naive_mul(&a, &b));
            let lhs = a.checked_mul(&(&b + &c)).unwrap();
            let rhs = &ab + &a.checked_mul(&c).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(
                ab.checked_mul(&c).unwrap(),
                a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn division_identity(a in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            let (q, r) = a.div_rem(&d).unwrap();
            prop_assert!(r.degree().is_none_or(|rd| rd < d.degree().unwrap()));
            prop_assert_eq!(&q.checked_mul(&d).unwrap() + &r, a);
        }
    }
}
