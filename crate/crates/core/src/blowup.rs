//! Blow-ups along smooth invariant centers: the Betti-number formula, the
//! split Chern polynomials of the degree-2 normal bundle, and the ring
//! presentation of a blow-up.

use std::fmt;

use crate::error::PolyError;
use crate::groebner::{GroebnerBasis, Ideal};
use crate::poly::MultiPoly;
use crate::ring::GradedRing;
use crate::series::{RationalSeries, TPoly};

/// A graded ring modulo homogeneous relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub ring: GradedRing,
    pub relations: Vec<MultiPoly>,
    pub label: String,
}

impl Presentation {
    pub fn new(
        label: impl Into<String>,
        ring: &GradedRing,
        relations: Vec<MultiPoly>,
    ) -> Result<Self, PolyError> {
        // validates ring membership and homogeneity
        let ideal = Ideal::new(ring, relations)?;
        Ok(Self {
            ring: ring.clone(),
            relations: ideal.generators().to_vec(),
            label: label.into(),
        })
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.relations.clone()).expect("validated on construction")
    }

    pub fn groebner_basis(&self) -> GroebnerBasis {
        self.ideal().groebner_basis()
    }

    pub fn hilbert_series(&self) -> RationalSeries {
        self.groebner_basis().hilbert_series()
    }

    /// Weighted degrees of the relations, in order.
    pub fn relation_degrees(&self) -> Vec<u32> {
        self.relations
            .iter()
            .map(|r| r.top_degree().unwrap_or(0))
            .collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {} / <", self.label, self.ring)?;
        for r in &self.relations {
            writeln!(f, "  {r}")?;
        }
        write!(f, ">")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

/// One blow-up or blow-down in a sequence: the equivariant Poincaré series
/// of the center and its codimension.
#[derive(Debug, Clone)]
pub struct BlowupStep {
    pub label: String,
    pub direction: Direction,
    pub codimension: u32,
    pub center_series: RationalSeries,
    /// The displayed term this record transcribes.
    pub anchor: &'static str,
}

impl BlowupStep {
    /// Signed change in the Poincaré series caused by this step.
    pub fn contribution(&self) -> RationalSeries {
        let c = &self.center_series * &exceptional_factor(self.codimension);
        match self.direction {
            Direction::Up => c,
            Direction::Down => -&c,
        }
    }

    pub fn apply(&self, p: &RationalSeries) -> RationalSeries {
        match self.direction {
            Direction::Up => betti_blowup(p, &self.center_series, self.codimension),
            Direction::Down => betti_blowdown(p, &self.center_series, self.codimension),
        }
    }
}

/// `t^2 + t^4 + ... + t^(2r-2) = (t^2 - t^(2r)) / (1 - t^2)`.
///
/// # Panics
/// If `r == 0`.
pub fn exceptional_factor(r: u32) -> RationalSeries {
    assert!(r >= 1, "codimension must be positive");
    let terms: Vec<(u32, i64)> = (1..r).map(|k| (2 * k, 1)).collect();
    RationalSeries::polynomial(TPoly::from_terms(&terms).expect("even exponents"))
}

/// Poincaré series of the blow-up of X along a center Y of codimension `r`.
pub fn betti_blowup(p_x: &RationalSeries, p_y: &RationalSeries, r: u32) -> RationalSeries {
    p_x + &(p_y * &exceptional_factor(r))
}

/// Inverse of [`betti_blowup`].
pub fn betti_blowdown(p_xtilde: &RationalSeries, p_y: &RationalSeries, r: u32) -> RationalSeries {
    p_xtilde - &(p_y * &exceptional_factor(r))
}

/// `Q[xi:2, alpha:2, t:2]`, where `t` is the formal variable of a Chern
/// polynomial.
pub fn chern_ring() -> GradedRing {
    GradedRing::new(&[("xi", 2), ("alpha", 2), ("t", 2)]).expect("valid ring")
}

/// Chern polynomial in `t` of the weight-`sign` summand of the degree-2
/// normal bundle: `((t ± 2 alpha + xi)^n - xi^n) / (t ± 2 alpha)`.
///
/// # Panics
/// If `n == 0` or `sign` is not `±1`.
pub fn chern_normal_split(n: u32, sign: i32) -> MultiPoly {
    assert!(n >= 1, "chern_normal_split needs n >= 1");
    let op = match sign {
        1 => "+",
        -1 => "-",
        _ => panic!("sign must be +1 or -1"),
    };
    let ring = chern_ring();
    let shift = MultiPoly::parse(&ring, &format!("t {op} 2*alpha")).expect("valid");
    let full =
        MultiPoly::parse(&ring, &format!("(t {op} 2*alpha + xi)^{n} - xi^{n}")).expect("valid");
    full.exact_divide(&shift)
        .expect("xi^n is the constant term in the shift")
}

/// The top Chern relation of the exceptional divisor: a polynomial in the
/// new generator whose part free of that generator is replaced by the
/// Poincaré dual of the center.
#[derive(Debug, Clone)]
pub struct ExceptionalRelation {
    pub chern_relation: MultiPoly,
    pub pd_center: MultiPoly,
}

/// Presentation of the blow-up along a center Y, given generators of the
/// kernel of restriction to Y and, when Y has finite codimension, its
/// Chern relation.
///
/// `chern_relation` may use any generators of the new ring (the old ring
/// with `rho` of weight 2 appended). Surjectivity of restriction to Y and
/// `[Y] != 0` are the caller's responsibility.
pub fn presentation_blowup(
    p: &Presentation,
    ker_gens: &[MultiPoly],
    exceptional: Option<&ExceptionalRelation>,
    rho: &str,
) -> Result<Presentation, PolyError> {
    let ring = p.ring.with_generator(rho, 2)?;
    let rho_var = MultiPoly::var(&ring, rho)?;
    let mut relations = Vec::new();
    for r in &p.relations {
        relations.push(r.embed(&ring)?);
    }
    for k in ker_gens {
        p.ring.check_same(k.ring())?;
        if !k.is_homogeneous() {
            return Err(PolyError::Inhomogeneous(k.to_string()));
        }
        relations.push(&k.embed(&ring)? * &rho_var);
    }
    if let Some(ex) = exceptional {
        let chern = ex.chern_relation.embed(&ring)?;
        let pd = ex.pd_center.embed(&ring)?;
        for q in [&chern, &pd] {
            if !q.is_homogeneous() {
                return Err(PolyError::Inhomogeneous(q.to_string()));
            }
        }
        if !pd.is_zero() && !chern.is_zero() && pd.top_degree() != chern.top_degree() {
            return Err(PolyError::Inhomogeneous(format!(
                "{chern} with constant term {pd}"
            )));
        }
        let constant = chern.coefficient_of_power(rho, 0)?;
        relations.push(&(&chern - &constant) + &pd);
    }
    Presentation::new(format!("{} blown up", p.label), &ring, relations)
}
