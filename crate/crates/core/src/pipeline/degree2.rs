//! Conics: Betti numbers and cohomology ring of the moduli of degree-2
//! stable maps to P^(n-1).

use std::time::Instant;

use crate::blowup::{betti_blowup, presentation_blowup, Presentation};
use crate::error::PipelineError;
use crate::groebner::{ideal_equal, QuotientDimension};
use crate::kirwan::{invariant_ring, quasimap_series, relations_d2, unstable_correction_d2};
use crate::poly::MultiPoly;
use crate::ring::GradedRing;
use crate::series::{RationalSeries, TPoly};

use super::report::{CaseResult, VerificationReport};
use super::require_n;

/// `(1-t^(2n+2))(1-t^2n)(1-t^(2n-2)) / ((1-t^2)^2(1-t^4))`.
pub fn degree2_closed_form(n: u32) -> RationalSeries {
    RationalSeries::product_ratio(&[2 * n + 2, 2 * n, 2 * n - 2], &[2, 2, 4])
        .expect("valid factors")
}

/// The blow-up center `[P^2 x P^(n-1)]^ss`, with equivariant ring
/// `Q[xi, a]/<xi^n>`.
pub fn degree2_center_series(n: u32) -> RationalSeries {
    RationalSeries::product_ratio(&[2 * n], &[2, 4]).expect("valid factors")
}

/// Quasimap series, plus the blow-up along the center of codimension
/// `2n - 2`, minus the unstable stratum. Not checked against anything.
pub fn degree2_assembled(n: u32) -> Result<RationalSeries, PipelineError> {
    require_n(n, 2)?;
    let p1 = betti_blowup(&quasimap_series(2, n), &degree2_center_series(n), 2 * n - 2);
    Ok(&p1 - &unstable_correction_d2(n))
}

/// Poincaré polynomial of the degree-2 moduli space, assembled from the
/// blow-up sequence and checked against the closed form.
pub fn degree2_betti(n: u32) -> Result<RationalSeries, PipelineError> {
    let assembled = degree2_assembled(n)?;
    let closed = degree2_closed_form(n);
    if assembled != closed {
        return Err(PipelineError::Mismatch {
            what: format!("degree-2 Betti numbers at n={n}"),
            assembled: assembled.to_string(),
            closed_form: closed.to_string(),
        });
    }
    Ok(closed)
}

/// `Q[xi:2, a:4, rho:2]`.
pub fn degree2_ring() -> GradedRing {
    GradedRing::new(&[("xi", 2), ("a", 4), ("rho", 2)]).expect("valid ring")
}

fn construction_ring() -> GradedRing {
    GradedRing::new(&[("xi", 2), ("alpha", 2), ("rho", 2)]).expect("valid ring")
}

fn parse(ring: &GradedRing, text: &str) -> MultiPoly {
    MultiPoly::parse(ring, text).expect("well-formed constant expression")
}

/// The two relations coming from the unstable stratum,
/// `sum_± ((rho ± 2 alpha + xi)^n - xi^n)/(rho ± 2 alpha)` and
/// `(rho + 2 alpha + xi)^n + (rho - 2 alpha + xi)^n + c xi^n`.
pub fn unstable_relations(n: u32, c: i64) -> [MultiPoly; 2] {
    let ring = construction_ring();
    let split = |op: &str| {
        let full = parse(&ring, &format!("(rho {op} 2*alpha + xi)^{n} - xi^{n}"));
        full.exact_divide(&parse(&ring, &format!("rho {op} 2*alpha")))
            .expect("xi^n is the rho-free part")
    };
    let first = &split("+") + &split("-");
    let second = parse(
        &ring,
        &format!("(rho + 2*alpha + xi)^{n} + (rho - 2*alpha + xi)^{n} + {c}*xi^{n}"),
    );
    [first, second].map(|p| p.collapse_even("alpha", "a").expect("even in alpha"))
}

/// The three relations of the degree-2 cohomology ring, of degrees
/// `2n-2`, `2n`, `2n+2`.
pub fn degree2_presentation(n: u32) -> Result<Presentation, PipelineError> {
    require_n(n, 2)?;
    let ring = degree2_ring();
    let [first, second] = unstable_relations(n, 0);
    let kernel = parse(&ring, &format!("xi^{n}*rho"));
    Ok(Presentation::new(
        format!("H*(M_0,0(P^{}, 2))", n - 1),
        &ring,
        vec![first, second, kernel],
    )?)
}

/// The same ring reached by blowing up `Q[xi, a]/<relations_d2(n)>` along
/// the center with kernel `<xi^n>` and adding the unstable relations with
/// the given `c`.
pub fn degree2_blowup_route(n: u32, c: i64) -> Result<Presentation, PipelineError> {
    require_n(n, 2)?;
    let p0 = Presentation::new(
        "P0",
        &invariant_ring(),
        relations_d2(n).generators().to_vec(),
    )?;
    let kernel = parse(&invariant_ring(), &format!("xi^{n}"));
    let p1 = presentation_blowup(&p0, &[kernel], None, "rho")?;
    let mut relations = p1.relations.clone();
    relations.extend(unstable_relations(n, c));
    Ok(Presentation::new("P1 stable part", &p1.ring, relations)?)
}

/// Gröbner-backed checks of the degree-2 ring at one `n`.
pub fn degree2_ring_verify(n: u32) -> Result<VerificationReport, PipelineError> {
    let start = Instant::now();
    let presentation = degree2_presentation(n)?;
    let gb = presentation.groebner_basis();
    let hilbert = gb.hilbert_series();
    let closed = degree2_closed_form(n);
    let mut cases = vec![CaseResult::compare(
        "d2/ring-hilbert",
        Some(n),
        closed.clone(),
        hilbert,
    )];

    let krull = gb
        .krull_dimension()
        .map_or("unit ideal".to_string(), |d| d.to_string());
    cases.push(CaseResult::compare(
        "d2/ring-krull-dimension",
        Some(n),
        "0".to_string(),
        krull,
    ));

    let total = closed
        .as_polynomial()
        .map(|p| p.coefficient_sum().to_string());
    let dim = match gb.quotient_vector_dimension() {
        QuotientDimension::Finite(d) => d.to_string(),
        QuotientDimension::Infinite => "infinite".to_string(),
    };
    cases.push(CaseResult::compare(
        "d2/ring-vector-dimension",
        Some(n),
        total.unwrap_or_else(|| "not a polynomial".to_string()),
        dim,
    ));

    cases.push(CaseResult::compare(
        "d2/ring-relation-degrees",
        Some(n),
        format!("{:?}", [2 * n - 2, 2 * n, 2 * n + 2]),
        format!("{:?}", presentation.relation_degrees()),
    ));

    // reduced Gröbner bases are unique, so their text is an ideal digest
    let route = degree2_blowup_route(n, 0)?;
    let equal = ideal_equal(&route.ideal(), &presentation.ideal())?;
    let mut case = CaseResult::compare(
        "d2/ring-blowup-route",
        Some(n),
        gb.to_text(),
        route.groebner_basis().to_text(),
    );
    case.pass &= equal;
    cases.push(case.with_detail("unstable relations taken with c = 0"));

    Ok(VerificationReport {
        suite: "d2".into(),
        cases,
        elapsed: start.elapsed(),
    })
}

/// `1 + t^2 + t^4`, the value at `n = 2` (the quotient is P^2).
pub fn projective_plane() -> RationalSeries {
    RationalSeries::polynomial(TPoly::from_terms(&[(0, 1), (2, 1), (4, 1)]).expect("even"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn coeffs(s: &RationalSeries) -> Vec<BigInt> {
        s.as_polynomial()
            .unwrap()
            .terms()
            .map(|(_, c)| c.clone())
            .collect()
    }

    #[test]
    fn betti_examples() {
        assert_eq!(degree2_betti(2).unwrap(), projective_plane());
        let three = degree2_betti(3).unwrap();
        let want: Vec<BigInt> = [1, 2, 3, 3, 2, 1]
            .iter()
            .map(|&c| BigInt::from(c))
            .collect();
        assert_eq!(coeffs(&three), want);
        assert!(matches!(
            degree2_betti(1),
            Err(PipelineError::OutOfRange(_))
        ));
    }

    #[test]
    fn betti_identity_through_eight() {
        for n in 2..=8 {
            let p = degree2_betti(n).unwrap();
            let checks = p.structural_checks();
            assert!(checks.is_polynomial && checks.nonnegative);
            assert_eq!(checks.palindromic, Some(true));
        }
    }

    #[test]
    fn presentation_text() {
        let p = degree2_presentation(2).unwrap();
        let rels: Vec<String> = p.relations.iter().map(|r| r.to_string()).collect();
        assert_eq!(
            rels,
            vec![
                "4*xi + 2*rho",
                "2*xi^2 + 4*xi*rho + 8*a + 2*rho^2",
                "xi^2*rho"
            ]
        );
    }

    #[test]
    fn ring_reports_pass() {
        for n in 2..=3 {
            let r = degree2_ring_verify(n).unwrap();
            assert!(r.pass(), "{}", r.to_text());
        }
    }

    #[test]
    fn nonzero_c_is_ruled_out_at_four() {
        // with c = 1 the ring no longer contains the quasimap relations
        let n = 4;
        let ring = degree2_ring();
        let [first, second] = unstable_relations(n, 1);
        let kernel = parse(&ring, "xi^4*rho");
        let gb = Presentation::new("c=1", &ring, vec![first, second, kernel])
            .unwrap()
            .groebner_basis();
        let contained = relations_d2(n)
            .generators()
            .iter()
            .all(|r| gb.contains(&r.embed(&ring).unwrap()).unwrap());
        assert!(!contained);
    }
}
