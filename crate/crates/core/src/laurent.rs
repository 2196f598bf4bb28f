//! Integer Laurent polynomials in `v`.
//!
//! These carry every graded dimension, graded rank and Hecke coefficient in
//! the crate. Coefficients are arbitrary precision.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of `Z[v, v^-1]`, stored as exponent -> nonzero coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * v^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Returns the constant coefficient when the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_selfdual(&self) -> bool {
        self.coeffs.iter().all(|(e, c)| self.coeffs.get(&-e) == Some(c))
    }

    pub fn is_nonneg(&self) -> bool {
        self.coeffs.values().all(|c| c.is_positive())
    }

    /// Terms with exponent `> 0`.
    pub fn positive_part(&self) -> Self {
        Self {
            coeffs: self.coeffs.range(1..).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    /// Evaluation at an integer point `v = x`; only meaningful for `x = ±1`
    /// unless the polynomial has no negative exponents.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical form: `1*v^-2 + 3*v^0`, ascending exponents, `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if first {
                write!(f, "{c}*v^{e}")?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}*v^{e}", -c)?;
            } else {
                write!(f, " + {c}*v^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed Laurent polynomial {0:?}")]
pub struct ParseLaurentError(pub String);

impl FromStr for LaurentPoly {
    type Err = ParseLaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseLaurentError(s.to_string());
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        // Normalise " - " into " + -" so every term splits on " + ".
        let normalised = s.replace(" - ", " + -");
        let mut p = Self::zero();
        for term in normalised.split(" + ") {
            let (c, e) = parse_term(term.trim()).ok_or_else(err)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// `c*v^e`, `c*v`, `c`, `v^e`, `v`, each with an optional leading `-`.
fn parse_term(term: &str) -> Option<(BigInt, i32)> {
    let (neg, body) = match term.strip_prefix('-') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, term),
    };
    let (c, vpart) = match body.split_once('*') {
        Some((c, v)) => (c.trim().parse::<BigInt>().ok()?, Some(v.trim())),
        None if body.starts_with('v') => (BigInt::from(1), Some(body)),
        None => (body.parse::<BigInt>().ok()?, None),
    };
    let e = match vpart {
        None => 0,
        Some("v") => 1,
        Some(v) => v.strip_prefix("v^")?.parse().ok()?,
    };
    Some((if neg { -c } else { c }, e))
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn ring_examples() {
        let v = LaurentPoly::v();
        assert_eq!(&v * &v.bar(), LaurentPoly::one());
        let a = p(&[(1, 1), (0, 1)]);
        let b = p(&[(1, 1), (0, -1)]);
        assert_eq!(&a * &b, p(&[(2, 1), (0, -1)]));
        let c = p(&[(-1, 1), (1, 1)]);
        assert_eq!(&c * &c, p(&[(-2, 1), (0, 2), (2, 1)]));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentPoly::v().bar(), LaurentPoly::monomial(1, -1));
        assert_eq!(LaurentPoly::one().bar(), LaurentPoly::one());
        assert_eq!(p(&[(2, 1), (-1, 3)]).bar(), p(&[(-2, 1), (1, 3)]));
    }

    #[test]
    fn predicates() {
        assert!(p(&[(1, 1), (-1, 1)]).is_selfdual());
        assert!(!LaurentPoly::v().is_selfdual());
        assert!(!p(&[(2, 1), (0, -1)]).is_nonneg());
        assert!(LaurentPoly::zero().is_selfdual());
    }

    #[test]
    fn canonical_text() {
        let a = p(&[(0, 3), (-2, 1)]);
        assert_eq!(a.to_string(), "1*v^-2 + 3*v^0");
        assert_eq!(p(&[(1, -2), (0, 1)]).to_string(), "1*v^0 - 2*v^1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!("1*v^-2 + 3*v^0".parse::<LaurentPoly>().unwrap(), a);
        assert_eq!("-4*v^3".parse::<LaurentPoly>().unwrap(), p(&[(3, -4)]));
        assert_eq!("v^2 - 2 + -v^-1".parse::<LaurentPoly>().unwrap(), p(&[(2, 1), (0, -2), (-1, -1)]));
        assert_eq!("3*v".parse::<LaurentPoly>().unwrap(), p(&[(1, 3)]));
        assert!("v^x".parse::<LaurentPoly>().is_err());
        assert!("2v".parse::<LaurentPoly>().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-4i32..=4, -5i64..=5), 0..6).prop_map(|t| p(&t))
    }

    proptest! {
        #[test]
        fn bar_is_ring_automorphism(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
            prop_assert_eq!(a.bar().bar(), a);
        }

        #[test]
        fn multiplication_commutes_and_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn text_roundtrip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }
    }
}
