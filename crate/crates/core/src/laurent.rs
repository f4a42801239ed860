//! Sparse Laurent polynomials in one variable `q` with arbitrary-precision
//! integer coefficients.
//!
//! The canonical text form lists terms by ascending exponent, for example
//! `q^-2 + 3 + 2*q^4`. The JSON form is an object mapping decimal exponent
//! strings to decimal coefficient strings.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Laurent polynomial `sum_d f_d q^d` over the integers.
///
/// No zero coefficient is ever stored, so the zero polynomial is the empty
/// map and structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `q`
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `coeff * q^exp`
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Iterates over `(exponent, coefficient)` by ascending exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    pub fn mindeg(&self) -> Result<i64> {
        self.terms
            .keys()
            .next()
            .copied()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn maxdeg(&self) -> Result<i64> {
        self.terms
            .keys()
            .next_back()
            .copied()
            .ok_or(Error::ZeroPolynomial)
    }

    /// `(mindeg, maxdeg)` of a nonzero polynomial.
    pub fn degree_extrema(&self) -> Result<(i64, i64)> {
        Ok((self.mindeg()?, self.maxdeg()?))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Value at `q = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// True when the polynomial lies in `q N[q]`.
    pub fn in_q_nat_q(&self) -> bool {
        self.has_nonnegative_coeffs() && self.terms.keys().all(|&e| e > 0)
    }

    /// True when the polynomial lies in `q^-1 N[q^-1]`.
    pub fn in_qinv_nat_qinv(&self) -> bool {
        self.has_nonnegative_coeffs() && self.terms.keys().all(|&e| e < 0)
    }

    /// A single nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Renders the polynomial the way the LaTeX tables do: descending
    /// exponents, `q^{k}` exponents, no multiplication sign.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i > 0 {
                out.push(if negative { '-' } else { '+' });
            } else if negative {
                out.push('-');
            }
            let abs = c.abs();
            let unit = abs.is_one();
            if *e == 0 {
                out.push_str(&abs.to_string());
                continue;
            }
            if !unit {
                out.push_str(&abs.to_string());
            }
            if *e == 1 {
                out.push('q');
            } else {
                out.push_str(&format!("q^{{{e}}}"));
            }
        }
        out
    }

    /// Parses the LaTeX rendering produced by [`LaurentPoly::to_latex`].
    /// A lone `.` denotes zero.
    pub fn from_latex(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "." || s.is_empty() {
            return Ok(Self::zero());
        }
        let plain = s.replace(['{', '}'], "");
        plain.parse()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if *e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            if *e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

fn parse_term(term: &str) -> Result<(i64, BigInt)> {
    let bad = || Error::Parse(format!("bad Laurent term {term:?}"));
    let (sign, body) = match term.as_bytes().first() {
        Some(b'-') => (-1, &term[1..]),
        Some(b'+') => (1, &term[1..]),
        _ => (1, term),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let (coeff, exp) = match body.find('q') {
        None => (body.parse::<BigInt>().map_err(|_| bad())?, 0),
        Some(pos) => {
            let c = body[..pos].trim_end_matches('*');
            let coeff = if c.is_empty() {
                BigInt::one()
            } else {
                c.parse::<BigInt>().map_err(|_| bad())?
            };
            let rest = &body[pos + 1..];
            let exp = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse::<i64>()
                    .map_err(|_| bad())?
            };
            (coeff, exp)
        }
    };
    Ok((exp, coeff * sign))
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty Laurent polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut p = Self::zero();
        for t in terms {
            let (e, c) = parse_term(t)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, String> = self
            .terms
            .iter()
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, String>::deserialize(deserializer)?;
        let mut p = Self::zero();
        for (e, c) in map {
            let e: i64 = e.parse().map_err(D::Error::custom)?;
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
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
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
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
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
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

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ring_identities() {
        assert_eq!(p("q + 1") * p("q - 1"), p("q^2 - 1"));
        let f = p("q^-2 + 3 + 2*q^4");
        assert_eq!(&f + &LaurentPoly::zero(), f);
        let g = p("q^2 + 1") - p("q^2 + 1");
        assert!(g.is_zero());
        assert_eq!(g.len(), 0);
    }

    #[test]
    fn bar_examples() {
        assert_eq!(p("q^2 + 1").bar(), p("q^-2 + 1"));
        assert_eq!(p("q + q^-1").bar(), p("q + q^-1"));
        assert!(p("q + q^-1").is_bar_invariant());
        assert!(!p("q").is_bar_invariant());
        assert!(LaurentPoly::zero().bar().is_zero());
    }

    #[test]
    fn extrema() {
        assert_eq!(p("q^2 + 1").degree_extrema(), Ok((0, 2)));
        assert_eq!(p("q^-3").degree_extrema(), Ok((-3, -3)));
        assert_eq!(p("q + q^-1").degree_extrema(), Ok((-1, 1)));
        assert_eq!(
            LaurentPoly::zero().degree_extrema(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn canonical_text() {
        let f = LaurentPoly::from_terms([(4, 2), (-2, 1), (0, 3)]);
        assert_eq!(f.to_string(), "q^-2 + 3 + 2*q^4");
        assert_eq!(p("-q - 2*q^3").to_string(), "-q - 2*q^3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("0"), LaurentPoly::zero());
    }

    #[test]
    fn latex_form() {
        assert_eq!(p("q + q^3").to_latex(), "q^{3}+q");
        assert_eq!(p("1").to_latex(), "1");
        assert_eq!(p("2*q^2 - q^-1").to_latex(), "2q^{2}-q^{-1}");
        assert_eq!(LaurentPoly::from_latex("q^{3}+q").unwrap(), p("q + q^3"));
        assert!(LaurentPoly::from_latex(".").unwrap().is_zero());
    }

    #[test]
    fn json_form() {
        let f = p("q^-2 + 3 + 2*q^4");
        let js = serde_json::to_string(&f).unwrap();
        assert_eq!(js, r#"{"-2":"1","0":"3","4":"2"}"#);
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn big_coefficients_do_not_wrap() {
        let big = LaurentPoly::monomial(i64::MAX, 3);
        let sq = &big * &big;
        let expected: BigInt = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        assert_eq!(sq.coeff(6), expected);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i64..6, -20i64..20), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn bar_is_involution(f in arb_poly()) {
            prop_assert_eq!(f.bar().bar(), f);
        }

        #[test]
        fn bar_reflects_degrees(f in arb_poly()) {
            prop_assume!(!f.is_zero());
            prop_assert_eq!(f.bar().mindeg().unwrap(), -f.maxdeg().unwrap());
        }

        #[test]
        fn bar_is_multiplicative(f in arb_poly(), g in arb_poly()) {
            prop_assert_eq!((&f * &g).bar(), &f.bar() * &g.bar());
        }

        #[test]
        fn eval_at_one_is_ring_hom(f in arb_poly(), g in arb_poly()) {
            prop_assert_eq!((&f * &g).eval_at_one(), f.eval_at_one() * g.eval_at_one());
            prop_assert_eq!((&f + &g).eval_at_one(), f.eval_at_one() + g.eval_at_one());
        }

        #[test]
        fn text_and_json_round_trip(f in arb_poly()) {
            prop_assert_eq!(f.to_string().parse::<LaurentPoly>().unwrap(), f.clone());
            let js = serde_json::to_string(&f).unwrap();
            prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&js).unwrap(), f.clone());
            prop_assert_eq!(LaurentPoly::from_latex(&f.to_latex()).unwrap(), f);
        }

        #[test]
        fn bar_invariance_matches_symmetric_support(f in arb_poly()) {
            let sym = &f + &f.bar();
            prop_assert!(sym.is_bar_invariant());
            prop_assert_eq!(f.is_bar_invariant(), f == f.bar());
        }
    }
}
