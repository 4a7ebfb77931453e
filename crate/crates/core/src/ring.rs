//! Weighted graded polynomial rings and their monomials.
//!
//! Every generator carries an even positive weight (its cohomological
//! degree). Monomials are ordered by weighted degree first and then
//! lexicographically on the exponent vector, with the first declared
//! generator being the most significant.

use std::fmt;
use std::sync::Arc;

use crate::error::PolyError;

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingInner {
    names: Vec<String>,
    weights: Vec<u32>,
}

/// An ordered list of named generators with even weights.
///
/// Cloning is cheap; rings compare by value, so two rings built from the
/// same generator list are interchangeable.
#[derive(Clone)]
pub struct GradedRing {
    inner: Arc<RingInner>,
}

impl GradedRing {
    pub fn new<S: AsRef<str>>(generators: &[(S, u32)]) -> Result<Self, PolyError> {
        let mut names = Vec::with_capacity(generators.len());
        let mut weights = Vec::with_capacity(generators.len());
        for (name, weight) in generators {
            let name = name.as_ref();
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(PolyError::InvalidRing(format!(
                    "bad generator name {name:?}"
                )));
            }
            if name.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                return Err(PolyError::InvalidRing(format!(
                    "generator name {name:?} starts with a digit"
                )));
            }
            if *weight < 2 || weight % 2 != 0 {
                return Err(PolyError::InvalidRing(format!(
                    "generator {name} has weight {weight}; weights must be even and at least 2"
                )));
            }
            if names.iter().any(|n: &String| n == name) {
                return Err(PolyError::InvalidRing(format!(
                    "duplicate generator {name}"
                )));
            }
            names.push(name.to_string());
            weights.push(*weight);
        }
        Ok(Self {
            inner: Arc::new(RingInner { names, weights }),
        })
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.inner.weights
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|n| n == name)
    }

    pub(crate) fn require(&self, name: &str) -> Result<usize, PolyError> {
        self.index_of(name)
            .ok_or_else(|| PolyError::UnknownGenerator(name.to_string()))
    }

    pub fn weight_of(&self, name: &str) -> Option<u32> {
        self.index_of(name).map(|i| self.inner.weights[i])
    }

    /// Ring with one generator appended at the end.
    pub fn with_generator(&self, name: &str, weight: u32) -> Result<Self, PolyError> {
        let mut gens: Vec<(String, u32)> = self.generators().collect();
        gens.push((name.to_string(), weight));
        Self::new(&gens)
    }

    pub fn generators(&self) -> impl Iterator<Item = (String, u32)> + '_ {
        self.inner
            .names
            .iter()
            .cloned()
            .zip(self.inner.weights.iter().copied())
    }

    pub fn one(&self) -> Monomial {
        Monomial {
            degree: 0,
            exps: vec![0; self.len()].into_boxed_slice(),
        }
    }

    pub fn monomial(&self, exps: &[u32]) -> Result<Monomial, PolyError> {
        if exps.len() != self.len() {
            return Err(PolyError::InvalidRing(format!(
                "exponent vector of length {} in a ring with {} generators",
                exps.len(),
                self.len()
            )));
        }
        Ok(Monomial::from_exps(exps.to_vec(), self.weights()))
    }

    /// The monomial consisting of a single generator.
    pub fn variable(&self, name: &str) -> Result<Monomial, PolyError> {
        let i = self.require(name)?;
        let mut exps = vec![0; self.len()];
        exps[i] = 1;
        Ok(Monomial::from_exps(exps, self.weights()))
    }

    pub fn same_as(&self, other: &GradedRing) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }

    pub(crate) fn check_same(&self, other: &GradedRing) -> Result<(), PolyError> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for GradedRing {}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedRing({self})")
    }
}

impl fmt::Display for GradedRing {
    /// `Q[xi:2, a:4]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Q[")?;
        for (i, (name, weight)) in self.generators().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name}:{weight}")?;
        }
        f.write_str("]")
    }
}

/// An exponent vector together with its cached weighted degree.
///
/// The derived ordering compares the weighted degree first and then the
/// exponents lexicographically, which is exactly the monomial order used
/// throughout the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    degree: u32,
    exps: Box<[u32]>,
}

impl Monomial {
    pub(crate) fn from_exps(exps: Vec<u32>, weights: &[u32]) -> Self {
        debug_assert_eq!(exps.len(), weights.len());
        let degree = exps.iter().zip(weights).map(|(e, w)| e * w).sum();
        Self {
            degree,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b);
        Monomial {
            degree: self.degree + other.degree,
            exps: exps.collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| b - a);
        Some(Monomial {
            degree: other.degree - self.degree,
            exps: exps.collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::from_exps(exps, weights)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    pub(crate) fn write_with(&self, names: &[String], f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for (e, name) in self.exps.iter().zip(names) {
            if *e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            f.write_str(name)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_char('1')?;
        }
        Ok(())
    }
}
