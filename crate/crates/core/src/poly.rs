//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Besides ring arithmetic this module provides the constructions used to
//! build relation ideals: exact division, splitting a polynomial into its
//! even and odd parts in one generator, rewriting even powers of a weight-`w`
//! generator as powers of a weight-`2w` generator, and substitution.
//!
//! The canonical text form (`Display`) lists terms in decreasing monomial
//! order, e.g. `4*xi^3 + 8*xi*a - 1/2`. It is stable byte-for-byte and is
//! accepted back by [`MultiPoly::parse`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;
use crate::ring::{GradedRing, Monomial};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: GradedRing,
    terms: BTreeMap<Monomial, Rational>,
}

/// Result of [`MultiPoly::degree_info`]. The zero polynomial is homogeneous
/// with no degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeInfo {
    pub is_homogeneous: bool,
    pub weighted_degree: Option<u32>,
}

impl MultiPoly {
    pub fn zero(ring: &GradedRing) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &GradedRing) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &GradedRing, c: Rational) -> Self {
        Self::term(ring, ring.one(), c)
    }

    pub fn term(ring: &GradedRing, m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &GradedRing, name: &str) -> Result<Self, PolyError> {
        Ok(Self::term(ring, ring.variable(name)?, Rational::one()))
    }

    pub fn from_terms(
        ring: &GradedRing,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Rational)> {
        self.terms.pop_last()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.ring.check_same(&other.ring)?;
        let mut out = Self::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// `c * m * self`
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Scale so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn degree_info(&self) -> DegreeInfo {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => DegreeInfo {
                is_homogeneous: true,
                weighted_degree: None,
            },
            Some(d) => {
                let homogeneous = degrees.all(|e| e == d);
                DegreeInfo {
                    is_homogeneous: homogeneous,
                    weighted_degree: homogeneous.then_some(d),
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree_info().is_homogeneous
    }

    /// Weighted degree of the leading term (the top degree), if nonzero.
    pub fn top_degree(&self) -> Option<u32> {
        self.leading_monomial().map(Monomial::degree)
    }

    /// Returns `q` with `q * divisor == self`, or an error if the division
    /// leaves a remainder.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.ring.check_same(&divisor.ring)?;
        let (lm, lc) = divisor.leading_term().ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quotient = Self::zero(&self.ring);
        while let Some((m, c)) = rem.leading_term() {
            let Some(q) = lm.quotient_of(m) else {
                return Err(PolyError::NotDivisible {
                    dividend: self.to_string(),
                    divisor: divisor.to_string(),
                });
            };
            let qc = c / lc;
            rem = &rem - &divisor.mul_term(&q, &qc);
            quotient.add_term(q, qc);
        }
        Ok(quotient)
    }

    /// Splits `self = even + var * odd` where both parts contain only even
    /// powers of `var`.
    pub fn sym_pair(&self, var: &str) -> Result<(Self, Self), PolyError> {
        let i = self.ring.require(var)?;
        let weights = self.ring.weights();
        let mut even = Self::zero(&self.ring);
        let mut odd = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e % 2 == 0 {
                even.add_term(m.clone(), c.clone());
            } else {
                let mut exps = m.exponents().to_vec();
                exps[i] -= 1;
                odd.add_term(Monomial::from_exps(exps, weights), c.clone());
            }
        }
        Ok((even, odd))
    }

    /// Rewrites every `var^(2k)` as `target^k`. The result lives in the ring
    /// with `var` removed; `target` takes the place of `var` unless it is
    /// already a generator, in which case exponents are merged into it.
    pub fn collapse_even(&self, var: &str, target: &str) -> Result<Self, PolyError> {
        let vi = self.ring.require(var)?;
        let vw = self.ring.weights()[vi];
        let existing = self.ring.index_of(target);
        if let Some(ti) = existing {
            let tw = self.ring.weights()[ti];
            if tw != 2 * vw {
                return Err(PolyError::WeightMismatch {
                    name: target.to_string(),
                    expected: 2 * vw,
                    found: tw.to_string(),
                });
            }
        }
        let gens: Vec<(String, u32)> = self
            .ring
            .generators()
            .enumerate()
            .filter_map(|(i, (name, w))| {
                if i != vi {
                    Some((name, w))
                } else if existing.is_none() {
                    Some((target.to_string(), 2 * w))
                } else {
                    None
                }
            })
            .collect();
        let new_ring = GradedRing::new(&gens)?;
        let ti = new_ring.require(target)?;
        let mut out = Self::zero(&new_ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[vi];
            if e % 2 != 0 {
                return Err(PolyError::OddPower(var.to_string()));
            }
            let mut exps: Vec<u32> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != vi || existing.is_none())
                .map(|(i, x)| if i == vi { 0 } else { *x })
                .collect();
            exps[ti] += e / 2;
            out.add_term(Monomial::from_exps(exps, new_ring.weights()), c.clone());
        }
        Ok(out)
    }

    /// Applies the ring homomorphism sending each listed generator to its
    /// image in `target`. Unlisted generators go to the generator of the same
    /// name in `target`.
    pub fn substitute(
        &self,
        target: &GradedRing,
        images: &[(&str, MultiPoly)],
    ) -> Result<Self, PolyError> {
        let mut table: Vec<MultiPoly> = Vec::with_capacity(self.ring.len());
        for (name, weight) in self.ring.generators() {
            let image = match images.iter().find(|(n, _)| *n == name) {
                Some((_, p)) => {
                    target.check_same(&p.ring)?;
                    p.clone()
                }
                None => MultiPoly::var(target, &name)?,
            };
            let info = image.degree_info();
            if !info.is_homogeneous || info.weighted_degree.is_some_and(|d| d != weight) {
                return Err(PolyError::WeightMismatch {
                    name,
                    expected: weight,
                    found: image.to_string(),
                });
            }
            table.push(image);
        }
        for (name, _) in images {
            self.ring.require(name)?;
        }
        let mut powers: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| table[i].pow(e))
                    .clone();
                t = &t * &p;
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Maps into a ring containing every generator of `self`'s ring (by name
    /// and weight).
    pub fn embed(&self, target: &GradedRing) -> Result<Self, PolyError> {
        let mut index = Vec::with_capacity(self.ring.len());
        for (name, weight) in self.ring.generators() {
            let j = target.require(&name)?;
            if target.weights()[j] != weight {
                return Err(PolyError::WeightMismatch {
                    name,
                    expected: weight,
                    found: target.weights()[j].to_string(),
                });
            }
            index.push(j);
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, e) in m.exponents().iter().enumerate() {
                exps[index[i]] = *e;
            }
            out.add_term(Monomial::from_exps(exps, target.weights()), c.clone());
        }
        Ok(out)
    }

    /// Exponent of `var` in the highest power appearing anywhere.
    pub fn degree_in(&self, var: &str) -> Result<u32, PolyError> {
        let i = self.ring.require(var)?;
        Ok(self
            .terms
            .keys()
            .map(|m| m.exponents()[i])
            .max()
            .unwrap_or(0))
    }

    /// Terms with exponent `k` in `var`, with `var^k` stripped.
    pub fn coefficient_of_power(&self, var: &str, k: u32) -> Result<Self, PolyError> {
        let i = self.ring.require(var)?;
        let weights = self.ring.weights();
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            if m.exponents()[i] == k {
                let mut exps = m.exponents().to_vec();
                exps[i] = 0;
                out.add_term(Monomial::from_exps(exps, weights), c.clone());
            }
        }
        Ok(out)
    }

    pub fn parse(ring: &GradedRing, text: &str) -> Result<Self, PolyError> {
        let mut parser = Parser {
            ring,
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let p = parser.expr()?;
        if parser.pos != parser.chars.len() {
            return Err(PolyError::Parse(format!(
                "unexpected {:?} at offset {} in {text:?}",
                parser.chars[parser.pos], parser.pos
            )));
        }
        Ok(p)
    }
}

fn write_rational(c: &Rational, f: &mut impl fmt::Write) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = self.ring.names();
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write_rational(&abs, f)?;
            } else {
                if !abs.is_one() {
                    write_rational(&abs, f)?;
                    f.write_str("*")?;
                }
                m.write_with(names, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self} in {})", self.ring)
    }
}

// Operator forms panic on ring mismatch; use the `checked_*` methods when
// the rings are not known to agree.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$checked(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

struct Parser<'r> {
    ring: &'r GradedRing,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, what: &str) -> PolyError {
        PolyError::Parse(format!("{what} at offset {}", self.pos))
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MultiPoly, PolyError> {
        if self.eat('-') {
            return Ok(-self.power()?);
        }
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.integer()?;
            let e = u32::try_from(&e).map_err(|_| self.error("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("bad integer"))
    }

    fn atom(&mut self) -> Result<MultiPoly, PolyError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let p = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let value = if self.peek() == Some('/')
                    && self
                        .chars
                        .get(self.pos + 1)
                        .is_some_and(|c| c.is_ascii_digit())
                {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    Rational::new(n, d)
                } else {
                    Rational::from_integer(n)
                };
                Ok(MultiPoly::constant(self.ring, value))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                MultiPoly::var(self.ring, &name)
            }
            _ => Err(self.error("expected a number, generator or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn construction_ring() -> GradedRing {
        GradedRing::new(&[("xi", 2), ("alpha", 2), ("rho", 2)]).unwrap()
    }

    fn p(ring: &GradedRing, s: &str) -> MultiPoly {
        MultiPoly::parse(ring, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = construction_ring();
        let prod = &p(&r, "xi + alpha") * &p(&r, "xi - alpha");
        assert_eq!(prod, p(&r, "xi^2 - alpha^2"));
    }

    #[test]
    fn zeroth_power_is_one() {
        let r = construction_ring();
        assert_eq!(p(&r, "xi + 2*alpha").pow(0), MultiPoly::one(&r));
    }

    #[test]
    fn degree_three_factor_at_n_one() {
        let r = construction_ring();
        let prod = &p(&r, "xi + alpha") * &p(&r, "xi + 3*alpha");
        assert_eq!(prod, p(&r, "xi^2 + 4*alpha*xi + 3*alpha^2"));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = construction_ring();
        let s = GradedRing::new(&[("xi", 2)]).unwrap();
        let err = p(&r, "xi").checked_add(&p(&s, "xi")).unwrap_err();
        assert!(matches!(err, PolyError::RingMismatch { .. }));
    }

    #[test]
    fn exact_division_examples() {
        let r = construction_ring();
        let f = &p(&r, "(rho + 2*alpha + xi)^2") - &p(&r, "xi^2");
        let q = f.exact_divide(&p(&r, "rho + 2*alpha")).unwrap();
        assert_eq!(q, p(&r, "rho + 2*alpha + 2*xi"));

        let g = p(&r, "3*xi^2*rho - 1/2*alpha");
        assert_eq!(g.exact_divide(&MultiPoly::one(&r)).unwrap(), g);

        let h = p(&r, "8*alpha*xi").exact_divide(&p(&r, "2*alpha")).unwrap();
        assert_eq!(h, p(&r, "4*xi"));
    }

    #[test]
    fn exact_division_errors() {
        let r = construction_ring();
        let err = p(&r, "xi^2 + 1").exact_divide(&p(&r, "xi")).unwrap_err();
        assert!(matches!(err, PolyError::NotDivisible { .. }));
        let err = p(&r, "xi").exact_divide(&MultiPoly::zero(&r)).unwrap_err();
        assert_eq!(err, PolyError::DivisionByZero);
    }

    #[test]
    fn sym_pair_examples() {
        let r = construction_ring();
        let (even, odd) = p(&r, "(xi + 2*alpha)^2").sym_pair("alpha").unwrap();
        assert_eq!(even, p(&r, "xi^2 + 4*alpha^2"));
        assert_eq!(odd, p(&r, "4*xi"));

        let (even, odd) = p(&r, "xi^3").sym_pair("alpha").unwrap();
        assert_eq!(even, p(&r, "xi^3"));
        assert!(odd.is_zero());

        let (even, odd) = p(&r, "(xi + alpha)*(xi + 3*alpha)")
            .sym_pair("alpha")
            .unwrap();
        assert_eq!(even, p(&r, "xi^2 + 3*alpha^2"));
        assert_eq!(odd, p(&r, "4*xi"));
    }

    #[test]
    fn collapse_even_examples() {
        let r = construction_ring();
        let c = p(&r, "xi^2 + 4*alpha^2")
            .collapse_even("alpha", "a")
            .unwrap();
        let target = GradedRing::new(&[("xi", 2), ("a", 4), ("rho", 2)]).unwrap();
        assert_eq!(c.ring(), &target);
        assert_eq!(c, p(&target, "xi^2 + 4*a"));

        let err = p(&r, "alpha*xi").collapse_even("alpha", "a").unwrap_err();
        assert_eq!(err, PolyError::OddPower("alpha".into()));

        let c = p(&r, "2*(rho + xi)^2 + 8*alpha^2")
            .collapse_even("alpha", "a")
            .unwrap();
        assert_eq!(c, p(&target, "2*(rho + xi)^2 + 8*a"));
    }

    #[test]
    fn collapse_even_into_existing_generator() {
        let r = GradedRing::new(&[("x", 2), ("s", 4)]).unwrap();
        let c = p(&r, "x^4 + s*x^2").collapse_even("x", "s").unwrap();
        let target = GradedRing::new(&[("s", 4)]).unwrap();
        assert_eq!(c, p(&target, "2*s^2"));
        assert!(p(&r, "x").collapse_even("x", "x").is_err());
    }

    #[test]
    fn substitution_examples() {
        let bo = GradedRing::new(&[("b", 2), ("t", 2), ("k", 4)]).unwrap();
        let target = GradedRing::new(&[("xi", 2), ("a", 4), ("rho", 2)]).unwrap();
        let images = [
            ("b", p(&target, "xi")),
            ("t", p(&target, "2*(xi + rho)")),
            ("k", p(&target, "4*a - (xi + rho)^2")),
        ];
        let out = p(&bo, "b*(2*b - t)").substitute(&target, &images).unwrap();
        assert_eq!(out, p(&target, "-2*xi*rho"));
        let k = p(&bo, "k").substitute(&target, &images).unwrap();
        assert_eq!(k, p(&target, "4*a - (xi + rho)^2"));

        let f = p(&target, "xi^3 + a*rho - 7");
        assert_eq!(f.substitute(&target, &[]).unwrap(), f);

        let bad = [("b", p(&target, "a"))];
        let err = p(&bo, "b").substitute(&target, &bad).unwrap_err();
        assert!(matches!(err, PolyError::WeightMismatch { .. }));
    }

    #[test]
    fn degree_info_examples() {
        let r = GradedRing::new(&[("xi", 2), ("a", 4), ("rho", 2)]).unwrap();
        assert_eq!(
            p(&r, "xi^2*rho").degree_info(),
            DegreeInfo {
                is_homogeneous: true,
                weighted_degree: Some(6)
            }
        );
        assert!(!p(&r, "xi + a").is_homogeneous());
        assert_eq!(
            MultiPoly::zero(&r).degree_info(),
            DegreeInfo {
                is_homogeneous: true,
                weighted_degree: None
            }
        );
    }

    #[test]
    fn canonical_text() {
        let r = GradedRing::new(&[("x", 2), ("a", 4)]).unwrap();
        assert_eq!(p(&r, "8*x*a + 4*x^3").to_string(), "4*x^3 + 8*x*a");
        assert_eq!(p(&r, "-x^2 + 1/2 - a").to_string(), "-x^2 - a + 1/2");
        assert_eq!(p(&r, "6/4*x").to_string(), "3/2*x");
        assert_eq!(MultiPoly::zero(&r).to_string(), "0");
        assert_eq!(p(&r, "-1").to_string(), "-1");
    }

    #[test]
    fn parse_errors() {
        let r = GradedRing::new(&[("x", 2)]).unwrap();
        assert!(MultiPoly::parse(&r, "y").is_err());
        assert!(MultiPoly::parse(&r, "x +").is_err());
        assert!(MultiPoly::parse(&r, "(x").is_err());
        assert!(MultiPoly::parse(&r, "1/0").is_err());
    }

    #[test]
    fn embed_into_larger_ring() {
        let small = GradedRing::new(&[("xi", 2), ("a", 4)]).unwrap();
        let big = small.with_generator("rho", 2).unwrap();
        let e = p(&small, "xi*a + 1").embed(&big).unwrap();
        assert_eq!(e, p(&big, "xi*a + 1"));
        assert!(p(&big, "rho").embed(&small).is_err());
    }

    fn small_ring() -> GradedRing {
        GradedRing::new(&[("x", 2), ("y", 2), ("z", 4)]).unwrap()
    }

    prop_compose! {
        fn arb_poly()(terms in prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), -4i64..5), 0..5)) -> MultiPoly {
            let r = small_ring();
            MultiPoly::from_terms(&r, terms.into_iter().map(|((a, b, c), k)| {
                (r.monomial(&[a, b, c]).unwrap(), rat(k))
            }))
        }
    }

    prop_compose! {
        fn arb_homogeneous(deg: u32)(terms in prop::collection::vec(((0u32..=deg, 0u32..=deg), -4i64..5), 1..4)) -> MultiPoly {
            // degree `2*deg` in x, y and z
            let r = small_ring();
            MultiPoly::from_terms(&r, terms.into_iter().filter_map(|((a, b), k)| {
                let used = a + b;
                (used <= deg && (deg - used).is_multiple_of(2))
                    .then(|| (r.monomial(&[a, b, (deg - used) / 2]).unwrap(), rat(k)))
            }))
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert!((&f - &f).is_zero());
        }

        #[test]
        fn exact_divide_round_trip(f in arb_homogeneous(3), g in arb_homogeneous(2)) {
            prop_assume!(!g.is_zero());
            let prod = &f * &g;
            prop_assert_eq!(prod.exact_divide(&g).unwrap(), f);
        }

        #[test]
        fn sym_pair_reconstructs(f in arb_poly()) {
            let (even, odd) = f.sym_pair("x").unwrap();
            let x = MultiPoly::var(f.ring(), "x").unwrap();
            prop_assert_eq!(&even + &(&x * &odd), f);
            prop_assert!(even.terms().all(|(m, _)| m.exponents()[0] % 2 == 0));
            prop_assert!(odd.terms().all(|(m, _)| m.exponents()[0] % 2 == 0));
        }

        #[test]
        fn collapse_inverts_square_expansion(f in arb_poly()) {
            // expand s -> y^2 then collapse y^2 -> s
            let (even, _) = f.sym_pair("y").unwrap();
            let collapsed = even.collapse_even("y", "s").unwrap();
            let back_ring = collapsed.ring().clone();
            let ring = f.ring().clone();
            let y2 = MultiPoly::var(&ring, "y").unwrap().pow(2);
            let expanded = collapsed
                .substitute(&GradedRing::new(&[("x", 2), ("y", 2), ("z", 4)]).unwrap(), &[("s", y2)])
                .map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(expanded, even);
            prop_assert_eq!(back_ring.names(), &["x".to_string(), "s".to_string(), "z".to_string()]);
        }

        #[test]
        fn substitution_preserves_degree(f in arb_homogeneous(3)) {
            let r = f.ring().clone();
            let images = [
                ("x", MultiPoly::parse(&r, "x + 2*y").unwrap()),
                ("z", MultiPoly::parse(&r, "x*y - z").unwrap()),
            ];
            let g = f.substitute(&r, &images).unwrap();
            prop_assert!(g.is_homogeneous());
            if !g.is_zero() {
                prop_assert_eq!(g.degree_info().weighted_degree, Some(6));
            }
        }

        #[test]
        fn canonical_text_parses_back(f in arb_poly()) {
            let text = f.to_string();
            prop_assert_eq!(MultiPoly::parse(f.ring(), &text).unwrap(), f);
        }
    }
}
