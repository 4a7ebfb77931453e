//! The recursive generators of the degree-2 relation ideal,
//! `G_n = A^(n-1) G_1`, compared with the closed presentation.

use std::time::Instant;

use crate::error::{PipelineError, PolyError};
use crate::groebner::{ideal_equal, Ideal};
use crate::poly::MultiPoly;
use crate::ring::GradedRing;

use super::degree2::{degree2_presentation, degree2_ring};
use super::report::{CaseResult, VerificationReport};
use super::require_n;

/// A dense matrix of polynomials over one ring, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MultiPoly>) -> Result<Self, PolyError> {
        if entries.len() != rows * cols {
            return Err(PolyError::InvalidRing(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(first) = entries.first() {
            for e in &entries {
                first.ring().check_same(e.ring())?;
            }
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn identity(ring: &GradedRing, size: usize) -> Self {
        let entries = (0..size * size)
            .map(|i| {
                if i / size == i % size {
                    MultiPoly::one(ring)
                } else {
                    MultiPoly::zero(ring)
                }
            })
            .collect();
        Self {
            rows: size,
            cols: size,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    /// Entries of a single column, top to bottom.
    pub fn column(&self, j: usize) -> Vec<MultiPoly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        if self.cols != other.rows {
            return Err(PolyError::InvalidRing(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = self.entries[0].ring();
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = MultiPoly::zero(ring);
                for k in 0..self.cols {
                    acc = acc.checked_add(&self.get(i, k).checked_mul(other.get(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// Square matrices only.
    pub fn pow(&self, k: u32) -> Result<Self, PolyError> {
        let ring = self.entries[0].ring();
        let mut out = Self::identity(ring, self.rows);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }
}

/// `Q[b:2, t:2, k:4]`.
pub fn bo_ring() -> GradedRing {
    GradedRing::new(&[("b", 2), ("t", 2), ("k", 4)]).expect("valid ring")
}

fn parse(ring: &GradedRing, text: &str) -> MultiPoly {
    MultiPoly::parse(ring, text).expect("well-formed constant expression")
}

/// `[[b, 0, 0], [1, 0, k], [0, 1, t]]`.
pub fn bo_matrix() -> PolyMatrix {
    let r = bo_ring();
    let e = ["b", "0", "0", "1", "0", "k", "0", "1", "t"].map(|s| parse(&r, s));
    PolyMatrix::new(3, 3, e.to_vec()).expect("3x3")
}

/// `(b(2b - t), 2b - t, 2)`.
pub fn bo_initial() -> PolyMatrix {
    let r = bo_ring();
    let e = ["b*(2*b - t)", "2*b - t", "2"].map(|s| parse(&r, s));
    PolyMatrix::new(3, 1, e.to_vec()).expect("3x1")
}

/// `G_n = A^(n-1) G_1`.
pub fn bo_generators(n: u32) -> Result<Vec<MultiPoly>, PipelineError> {
    require_n(n, 1)?;
    Ok(bo_matrix().pow(n - 1)?.mul(&bo_initial())?.column(0))
}

/// `b = xi`, `t = 2(xi + rho)`, `k = 4a - (xi + rho)^2` into
/// `Q[xi:2, a:4, rho:2]`.
pub fn bo_substitute(p: &MultiPoly) -> Result<MultiPoly, PolyError> {
    let target = degree2_ring();
    let images = [
        ("b", parse(&target, "xi")),
        ("t", parse(&target, "2*(xi + rho)")),
        ("k", parse(&target, "4*a - (xi + rho)^2")),
    ];
    p.substitute(&target, &images)
}

pub fn bo_ideal(n: u32) -> Result<Ideal, PipelineError> {
    let gens = bo_generators(n)?
        .iter()
        .map(bo_substitute)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(&degree2_ring(), gens)?)
}

pub fn bo_equivalence(n: u32) -> Result<VerificationReport, PipelineError> {
    require_n(n, 2)?;
    let start = Instant::now();
    let ours = degree2_presentation(n)?.ideal();
    let theirs = bo_ideal(n)?;
    let equal = ideal_equal(&ours, &theirs)?;
    let mut case = CaseResult::compare(
        "bo/ideal-equality",
        Some(n),
        ours.groebner_basis().to_text(),
        theirs.groebner_basis().to_text(),
    );
    case.pass &= equal;
    Ok(VerificationReport {
        suite: "bo".into(),
        cases: vec![case],
        elapsed: start.elapsed(),
    })
}
