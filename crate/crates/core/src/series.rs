//! Poincaré and Hilbert series as exact rational functions in `t`.
//!
//! A [`RationalSeries`] is an integer polynomial in `t` over a product of
//! factors `(1 - t^k)`. All exponents are even. Equality is decided by
//! cross-multiplication, never by comparing truncated expansions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Map, Value};

use crate::error::SeriesError;

/// Integer polynomial in `t` supported on even exponents.
///
/// Stored densely in `s = t^2`; index `i` holds the coefficient of `t^(2i)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: Vec<BigInt>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_s_coeffs(vec![BigInt::from(c)])
    }

    pub(crate) fn from_s_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds `sum c * t^e` from `(e, c)` pairs; every `e` must be even.
    pub fn from_terms(terms: &[(u32, i64)]) -> Result<Self, SeriesError> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for &(e, c) in terms {
            if e % 2 != 0 {
                return Err(SeriesError::OddExponent(e));
            }
            let i = (e / 2) as usize;
            if coeffs.len() <= i {
                coeffs.resize(i + 1, BigInt::zero());
            }
            coeffs[i] += c;
        }
        Ok(Self::from_s_coeffs(coeffs))
    }

    /// `c * t^e`
    pub fn monomial(e: u32, c: i64) -> Result<Self, SeriesError> {
        Self::from_terms(&[(e, c)])
    }

    /// `1 - t^k`
    pub fn one_minus(k: u32) -> Result<Self, SeriesError> {
        if k == 0 || !k.is_multiple_of(2) {
            return Err(SeriesError::BadFactor(k));
        }
        Self::from_terms(&[(0, 1), (k, -1)])
    }

    pub fn product_one_minus(factors: &[u32]) -> Result<Self, SeriesError> {
        factors
            .iter()
            .try_fold(Self::one(), |acc, &k| Ok(&acc * &Self::one_minus(k)?))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t`, or `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        (!self.coeffs.is_empty()).then(|| 2 * (self.coeffs.len() as u32 - 1))
    }

    /// Coefficient of `t^e`.
    pub fn coeff(&self, e: u32) -> BigInt {
        if !e.is_multiple_of(2) {
            return BigInt::zero();
        }
        self.coeffs
            .get((e / 2) as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms as `(exponent of t, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (2 * i as u32, c))
    }

    pub(crate) fn s_coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_s_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `t^e * self`
    pub fn shift(&self, e: u32) -> Result<Self, SeriesError> {
        if !e.is_multiple_of(2) {
            return Err(SeriesError::OddExponent(e));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![BigInt::zero(); (e / 2) as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        Ok(Self::from_s_coeffs(coeffs))
    }

    /// Exact quotient, or `None` if a remainder is left or a quotient
    /// coefficient would not be an integer.
    pub fn div_exact(&self, divisor: &TPoly) -> Option<TPoly> {
        let d = &divisor.coeffs;
        let lead = d.last()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < d.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - d.len() + 1;
        let mut q = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in d.iter().enumerate() {
                rem[i + j] -= &qc * dj;
            }
            q[i] = qc;
        }
        rem.iter()
            .all(Zero::is_zero)
            .then(|| Self::from_s_coeffs(q))
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Sum of all coefficients (the value at `t = 1`).
    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_default();
                let b = rhs.coeffs.get(i).cloned().unwrap_or_default();
                a + b
            })
            .collect();
        TPoly::from_s_coeffs(coeffs)
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        self + &-rhs
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly::from_s_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::from_s_coeffs(out)
    }
}

impl fmt::Display for TPoly {
    /// Ascending powers: `1 + 2*t^2 - t^6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            match e {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    write!(f, "t^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly({self})")
    }
}

/// `numerator / prod (1 - t^k)` for `k` in `denominator`.
#[derive(Clone)]
pub struct RationalSeries {
    numerator: TPoly,
    denominator: Vec<u32>,
}

/// Outcome of [`RationalSeries::structural_checks`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructuralChecks {
    pub is_polynomial: bool,
    pub nonnegative: bool,
    /// `None` when the series is not a polynomial.
    pub palindromic: Option<bool>,
}

impl RationalSeries {
    /// Builds and canonicalizes `numerator / prod (1 - t^k)`.
    pub fn new(numerator: TPoly, denominator: &[u32]) -> Result<Self, SeriesError> {
        for &k in denominator {
            if k == 0 || k % 2 != 0 {
                return Err(SeriesError::BadFactor(k));
            }
        }
        let mut s = Self {
            numerator,
            denominator: denominator.to_vec(),
        };
        s.canonicalize();
        Ok(s)
    }

    pub fn polynomial(p: TPoly) -> Self {
        Self {
            numerator: p,
            denominator: Vec::new(),
        }
    }

    pub fn zero() -> Self {
        Self::polynomial(TPoly::zero())
    }

    pub fn one() -> Self {
        Self::polynomial(TPoly::one())
    }

    /// `prod (1 - t^a) / prod (1 - t^b)`
    pub fn product_ratio(num: &[u32], den: &[u32]) -> Result<Self, SeriesError> {
        Self::new(TPoly::product_one_minus(num)?, den)
    }

    pub fn numerator(&self) -> &TPoly {
        &self.numerator
    }

    /// Sorted exponents `k` of the denominator factors `(1 - t^k)`.
    pub fn denominator(&self) -> &[u32] {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    // Reduce to lowest terms over the cyclotomic factors of the denominator,
    // then cover what is left with (1 - t^k) factors, largest k first. Both
    // steps are deterministic, so equal rational functions get equal forms.
    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.denominator.clear();
            return;
        }
        if self.denominator.is_empty() {
            return;
        }
        let max_half = (*self.denominator.iter().max().expect("nonempty") / 2) as usize;
        let cyclo = cyclotomic_table(max_half);
        let mut mult = vec![0u32; max_half + 1];
        for &k in &self.denominator {
            let half = (k / 2) as usize;
            for d in divisors(half) {
                mult[d] += 1;
            }
        }
        for d in (1..=max_half).rev() {
            while mult[d] > 0 {
                match self.numerator.div_exact(&cyclo[d]) {
                    Some(q) => {
                        self.numerator = q;
                        mult[d] -= 1;
                    }
                    None => break,
                }
            }
        }
        let mut den = Vec::new();
        while let Some(d) = (1..=max_half).rev().find(|&d| mult[d] > 0) {
            den.push(2 * d as u32);
            for e in divisors(d) {
                if mult[e] > 0 {
                    mult[e] -= 1;
                } else {
                    self.numerator = &self.numerator * &cyclo[e];
                }
            }
        }
        den.sort_unstable();
        self.denominator = den;
    }

    fn den_poly(&self) -> TPoly {
        TPoly::product_one_minus(&self.denominator).expect("validated factors")
    }

    /// Factors of `other`'s denominator not already covered by `self`'s,
    /// as a multiset difference.
    fn missing_factors(&self, other: &[u32]) -> Vec<u32> {
        let mut mine = self.denominator.clone();
        let mut missing = Vec::new();
        for &k in other {
            if let Some(pos) = mine.iter().position(|&x| x == k) {
                mine.swap_remove(pos);
            } else {
                missing.push(k);
            }
        }
        missing
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let extra_self = self.missing_factors(&other.denominator);
        let extra_other = other.missing_factors(&self.denominator);
        let a = &self.numerator * &TPoly::product_one_minus(&extra_self).expect("validated");
        let mut b = &other.numerator * &TPoly::product_one_minus(&extra_other).expect("validated");
        if negate {
            b = -&b;
        }
        let mut den = self.denominator.clone();
        den.extend(extra_self);
        Self::new(&a + &b, &den).expect("validated factors")
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, SeriesError> {
        if other.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        let (sign, exps) = cyclotomic_exponents(&other.numerator)?;
        let mut num = &self.numerator * &other.den_poly();
        let mut den = self.denominator.clone();
        for (k, e) in exps {
            if e > 0 {
                den.extend(std::iter::repeat_n(k, e as usize));
            } else {
                for _ in 0..(-e) {
                    num = &num * &TPoly::one_minus(k)?;
                }
            }
        }
        Self::new(num.scale(&BigInt::from(sign)), &den)
    }

    /// Coefficients of `t^0, t^2, ..., t^order`.
    pub fn expand_to(&self, order: u32) -> Vec<BigInt> {
        let len = (order / 2 + 1) as usize;
        let mut c: Vec<BigInt> = self
            .numerator
            .s_coeffs()
            .iter()
            .take(len)
            .cloned()
            .collect();
        c.resize(len, BigInt::zero());
        for &k in &self.denominator {
            let step = (k / 2) as usize;
            for i in step..len {
                let prev = c[i - step].clone();
                c[i] += prev;
            }
        }
        c
    }

    /// Algebraic equality by cross-multiplication.
    pub fn equals(&self, other: &Self) -> bool {
        let extra_self = self.missing_factors(&other.denominator);
        let extra_other = other.missing_factors(&self.denominator);
        let a = &self.numerator * &TPoly::product_one_minus(&extra_self).expect("validated");
        let b = &other.numerator * &TPoly::product_one_minus(&extra_other).expect("validated");
        a == b
    }

    /// The series as a polynomial, if it is one.
    pub fn as_polynomial(&self) -> Option<TPoly> {
        self.numerator.div_exact(&self.den_poly())
    }

    pub fn structural_checks(&self) -> StructuralChecks {
        match self.as_polynomial() {
            Some(p) => StructuralChecks {
                is_polynomial: true,
                nonnegative: p.terms().all(|(_, c)| !c.is_negative()),
                palindromic: Some(p.is_palindromic()),
            },
            None => {
                // inspect a window long enough to pass the numerator and one
                // full period of every denominator factor
                let window = self.numerator.degree().unwrap_or(0)
                    + self.denominator.iter().sum::<u32>()
                    + self.denominator.iter().max().copied().unwrap_or(0);
                StructuralChecks {
                    is_polynomial: false,
                    nonnegative: self.expand_to(window).iter().all(|c| !c.is_negative()),
                    palindromic: None,
                }
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let mut num = Map::new();
        for (e, c) in self.numerator.terms() {
            let v = match c.to_i64() {
                Some(x) => Value::from(x),
                None => Value::from(c.to_string()),
            };
            num.insert(e.to_string(), v);
        }
        let mut obj = Map::new();
        obj.insert("num".into(), Value::Object(num));
        obj.insert(
            "den".into(),
            Value::Array(self.denominator.iter().map(|&k| Value::from(k)).collect()),
        );
        Value::Object(obj)
    }

    pub fn from_json(value: &Value) -> Result<Self, SeriesError> {
        let bad = |what: &str| SeriesError::Json(what.to_string());
        let obj = value.as_object().ok_or_else(|| bad("expected an object"))?;
        let num = obj
            .get("num")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing \"num\" object"))?;
        let den = obj
            .get("den")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"den\" array"))?;
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (key, v) in num {
            let e: u32 = key
                .parse()
                .map_err(|_| bad("exponent keys must be integers"))?;
            if !e.is_multiple_of(2) {
                return Err(SeriesError::OddExponent(e));
            }
            let c: BigInt = match v {
                Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| bad("coefficients must be integers"))?,
                Value::String(s) => s.parse().map_err(|_| bad("bad integer string"))?,
                _ => return Err(bad("coefficients must be integers")),
            };
            let i = (e / 2) as usize;
            if coeffs.len() <= i {
                coeffs.resize(i + 1, BigInt::zero());
            }
            coeffs[i] += c;
        }
        let den: Vec<u32> = den
            .iter()
            .map(|v| {
                v.as_u64()
                    .and_then(|k| u32::try_from(k).ok())
                    .ok_or_else(|| bad("denominator entries must be positive integers"))
            })
            .collect::<Result<_, _>>()?;
        Self::new(TPoly::from_s_coeffs(coeffs), &den)
    }
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

/// `table[d]` is the d-th cyclotomic polynomial in `s = t^2`, normalized to
/// constant term 1 (so `table[1] = 1 - s`). Index 0 is unused.
fn cyclotomic_table(max: usize) -> Vec<TPoly> {
    let mut table = vec![TPoly::one(); max + 1];
    for d in 1..=max {
        let mut p = TPoly::one_minus(2 * d as u32).expect("positive even exponent");
        for e in divisors(d).filter(|&e| e < d) {
            p = p
                .div_exact(&table[e])
                .expect("cyclotomic factors divide 1 - s^d");
        }
        table[d] = p;
    }
    table
}

/// Writes `p = sign * prod (1 - t^k)^(e_k)` with integer (possibly negative)
/// exponents, or fails if `p` is not of that shape.
fn cyclotomic_exponents(p: &TPoly) -> Result<(i64, Vec<(u32, i64)>), SeriesError> {
    let not_cyclotomic = || SeriesError::NotCyclotomic(p.to_string());
    let coeffs = p.s_coeffs();
    let c0 = coeffs.first().ok_or_else(not_cyclotomic)?;
    let sign: i64 = if c0.is_one() {
        1
    } else if (-c0).is_one() {
        -1
    } else {
        return Err(not_cyclotomic());
    };
    let degree = coeffs.len() - 1;
    // a cyclotomic factor Phi_d(s) of degree phi(d) <= D has d <= 2 D^2
    let bound = (2 * degree * degree).max(degree + 1);
    let mut q: Vec<BigInt> = coeffs.iter().map(|c| c * sign).collect();
    q.resize(bound + 1, BigInt::zero());
    let mut exps = Vec::new();
    for k in 1..=bound {
        let e = -q[k].to_i64().ok_or_else(not_cyclotomic)?;
        if e == 0 {
            continue;
        }
        // divide the truncated series by (1 - s^k)^e
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                for i in k..=bound {
                    let prev = q[i - k].clone();
                    q[i] += prev;
                }
            } else {
                for i in (k..=bound).rev() {
                    let prev = q[i - k].clone();
                    q[i] -= prev;
                }
            }
        }
        exps.push((2 * k as u32, e));
    }
    // confirm the finite product reproduces p exactly
    let mut num = TPoly::constant(sign);
    let mut den = TPoly::one();
    for &(k, e) in &exps {
        let f = TPoly::one_minus(k)?;
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                num = &num * &f;
            } else {
                den = &den * &f;
            }
        }
    }
    if &den * p != num {
        return Err(not_cyclotomic());
    }
    Ok((sign, exps))
}

impl PartialEq for RationalSeries {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for RationalSeries {}

impl Add for &RationalSeries {
    type Output = RationalSeries;
    fn add(self, rhs: &RationalSeries) -> RationalSeries {
        self.combine(rhs, false)
    }
}

impl Sub for &RationalSeries {
    type Output = RationalSeries;
    fn sub(self, rhs: &RationalSeries) -> RationalSeries {
        self.combine(rhs, true)
    }
}

impl Mul for &RationalSeries {
    type Output = RationalSeries;
    fn mul(self, rhs: &RationalSeries) -> RationalSeries {
        let mut den = self.denominator.clone();
        den.extend_from_slice(&rhs.denominator);
        RationalSeries::new(&self.numerator * &rhs.numerator, &den).expect("validated factors")
    }
}

impl Neg for &RationalSeries {
    type Output = RationalSeries;
    fn neg(self) -> RationalSeries {
        RationalSeries {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }
}

impl fmt::Display for RationalSeries {
    /// `(1 + t^4) / ((1 - t^2)^2*(1 - t^6))`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({}) / (", self.numerator)?;
        let mut first = true;
        let mut i = 0;
        while i < self.denominator.len() {
            let k = self.denominator[i];
            let count = self.denominator[i..]
                .iter()
                .take_while(|&&x| x == k)
                .count();
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "(1 - t^{k})")?;
            if count > 1 {
                write!(f, "^{count}")?;
            }
            i += count;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalSeries({self})")
    }
}

impl Serialize for RationalSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = Value::deserialize(deserializer)?;
        Self::from_json(&value).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tp(terms: &[(u32, i64)]) -> TPoly {
        TPoly::from_terms(terms).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cancellation_to_polynomial() {
        let s = RationalSeries::product_ratio(&[4], &[2]).unwrap();
        assert_eq!(s.numerator(), &tp(&[(0, 1), (2, 1)]));
        assert!(s.denominator().is_empty());
    }

    #[test]
    fn self_difference_is_zero() {
        let a = RationalSeries::new(tp(&[(0, 1), (6, -2)]), &[2, 4]).unwrap();
        let z = &a - &a;
        assert!(z.is_zero());
        assert!(z.denominator().is_empty());
    }

    #[test]
    fn bracket_of_degree_three_limit() {
        let a = RationalSeries::new(TPoly::one(), &[6]).unwrap();
        let b = RationalSeries::new(tp(&[(4, 2)]), &[4]).unwrap();
        let sum = &a + &b;
        let expected = RationalSeries::new(tp(&[(0, 1), (4, 1), (10, -2)]), &[6, 4]).unwrap();
        assert_eq!(sum.numerator(), expected.numerator());
        assert_eq!(sum.denominator(), &[4, 6]);
        assert_eq!(sum, expected);
    }

    #[test]
    fn expansions() {
        let geo = RationalSeries::new(TPoly::one(), &[2]).unwrap();
        assert_eq!(geo.expand_to(6), ints(&[1, 1, 1, 1]));
        let p1_cubics = RationalSeries::product_ratio(&[6, 8], &[2, 4]).unwrap();
        assert_eq!(p1_cubics.expand_to(8), ints(&[1, 1, 2, 1, 1]));
        // (1 - t^8)(1 - t^6)(1 - t^4) / ((1 - t^2)^2 (1 - t^4))
        let deg2_n3 = RationalSeries::product_ratio(&[8, 6, 4], &[2, 2, 4]).unwrap();
        assert_eq!(deg2_n3.expand_to(10), ints(&[1, 2, 3, 3, 2, 1]));
    }

    #[test]
    fn equality_examples() {
        let a = RationalSeries::product_ratio(&[4], &[2]).unwrap();
        let b = RationalSeries::polynomial(tp(&[(0, 1), (2, 1)]));
        assert_eq!(a, b);
        let g2 = RationalSeries::new(TPoly::one(), &[2]).unwrap();
        let g4 = RationalSeries::new(TPoly::one(), &[4]).unwrap();
        assert_ne!(g2, g4);
    }

    #[test]
    fn structural_examples() {
        let p2 = RationalSeries::polynomial(tp(&[(0, 1), (2, 1), (4, 1)]));
        assert_eq!(
            p2.structural_checks(),
            StructuralChecks {
                is_polynomial: true,
                nonnegative: true,
                palindromic: Some(true)
            }
        );
        let geo = RationalSeries::new(TPoly::one(), &[2]).unwrap();
        let c = geo.structural_checks();
        assert!(!c.is_polynomial && c.nonnegative && c.palindromic.is_none());
        let lopsided = RationalSeries::polynomial(tp(&[(0, 1), (2, 2)]));
        assert_eq!(lopsided.structural_checks().palindromic, Some(false));
        let neg = RationalSeries::polynomial(tp(&[(0, 1), (2, -1), (4, 1)]));
        assert!(!neg.structural_checks().nonnegative);
    }

    #[test]
    fn odd_exponents_rejected() {
        assert_eq!(
            TPoly::from_terms(&[(3, 1)]),
            Err(SeriesError::OddExponent(3))
        );
        assert!(RationalSeries::new(TPoly::one(), &[3]).is_err());
        assert!(RationalSeries::new(TPoly::one(), &[0]).is_err());
    }

    #[test]
    fn division() {
        // t^2 / (1 + t^2) = t^2 (1 - t^2) / (1 - t^4)
        let t2 = RationalSeries::polynomial(tp(&[(2, 1)]));
        let one_plus = RationalSeries::polynomial(tp(&[(0, 1), (2, 1)]));
        let q = t2.checked_div(&one_plus).unwrap();
        assert_eq!(
            q,
            RationalSeries::new(tp(&[(2, 1), (4, -1)]), &[4]).unwrap()
        );
        assert_eq!(&q * &one_plus, t2);

        let cyc3 = RationalSeries::polynomial(tp(&[(0, 1), (2, 1), (4, 1)]));
        let q = t2.checked_div(&cyc3).unwrap();
        assert_eq!(q.denominator(), &[6]);

        assert_eq!(
            t2.checked_div(&RationalSeries::zero()),
            Err(SeriesError::DivisionByZero)
        );
        let not_cyc = RationalSeries::polynomial(tp(&[(0, 1), (2, 3)]));
        assert!(matches!(
            t2.checked_div(&not_cyc),
            Err(SeriesError::NotCyclotomic(_))
        ));
        assert!(matches!(
            one_plus.checked_div(&t2),
            Err(SeriesError::NotCyclotomic(_))
        ));
    }

    #[test]
    fn display() {
        let s = RationalSeries::new(tp(&[(0, 1), (4, 1), (10, -3)]), &[2, 2, 6]).unwrap();
        assert_eq!(
            s.to_string(),
            "(1 + t^4 - 3*t^10) / ((1 - t^2)^2*(1 - t^6))"
        );
        // a common factor 1 - t^2 cancels
        let c = RationalSeries::new(tp(&[(0, 1), (4, 1), (10, -2)]), &[2, 2, 6]).unwrap();
        assert_eq!(
            c.to_string(),
            "(1 + t^2 + 2*t^4 + 2*t^6 + 2*t^8) / ((1 - t^2)*(1 - t^6))"
        );
        assert_eq!(RationalSeries::zero().to_string(), "0");
    }

    #[test]
    fn json_form() {
        let s = RationalSeries::new(tp(&[(0, 1), (2, 1)]), &[2, 6]).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"num":{"0":1,"2":1},"den":[2,6]}"#);
        let back: RationalSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        // non-canonical input is accepted and reduced: (1+t^2)/((1-t^2)(1-t^4)) = 1/(1-t^2)^2
        let raw: RationalSeries =
            serde_json::from_str(r#"{"num": {"0": 1, "2": 1}, "den": [2, 4]}"#).unwrap();
        assert_eq!(raw.denominator(), &[2, 2]);
        assert_eq!(raw, RationalSeries::product_ratio(&[], &[2, 2]).unwrap());
        assert!(
            RationalSeries::from_json(&serde_json::json!({"num": {"3": 1}, "den": []})).is_err()
        );
    }

    prop_compose! {
        fn arb_series()(num in prop::collection::vec(-3i64..4, 0..5),
                        den in prop::collection::vec(1u32..5, 0..3)) -> RationalSeries {
            let terms: Vec<(u32, i64)> = num.iter().enumerate().map(|(i, &c)| (2 * i as u32, c)).collect();
            let den: Vec<u32> = den.into_iter().map(|k| 2 * k).collect();
            RationalSeries::new(TPoly::from_terms(&terms).unwrap(), &den).unwrap()
        }
    }

    proptest! {
        #[test]
        fn association_order_irrelevant(a in arb_series(), b in arb_series(), c in arb_series()) {
            let left = &(&a + &b) + &c;
            let right = &a + &(&b + &c);
            prop_assert_eq!(left.numerator(), right.numerator());
            prop_assert_eq!(left.denominator(), right.denominator());
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn expansion_prefix_stable(a in arb_series(), k in 0u32..10, extra in 1u32..6) {
            let short = a.expand_to(2 * k);
            let long = a.expand_to(2 * (k + extra));
            prop_assert_eq!(&long[..short.len()], &short[..]);
        }

        #[test]
        fn product_expansion_matches_convolution(a in arb_series(), b in arb_series()) {
            let order = 12;
            let ea = a.expand_to(order);
            let eb = b.expand_to(order);
            let conv: Vec<BigInt> = (0..ea.len())
                .map(|i| (0..=i).map(|j| &ea[j] * &eb[i - j]).sum())
                .collect();
            prop_assert_eq!((&a * &b).expand_to(order), conv);
        }
    }
}
