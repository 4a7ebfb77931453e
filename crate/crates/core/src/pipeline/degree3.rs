//! Twisted cubics: the blow-up/blow-down sequence for the Poincaré
//! polynomial, and the rings at n = infinity and n = 2.

use std::time::Instant;

use crate::blowup::{presentation_blowup, BlowupStep, Direction, Presentation};
use crate::error::PipelineError;
use crate::kirwan::{invariant_ring, quasimap_series, relations_d3};
use crate::poly::MultiPoly;
use crate::ring::GradedRing;
use crate::series::{RationalSeries, TPoly};

use super::report::{CaseResult, VerificationReport};
use super::require_n;

fn ratio(num: &[u32], den: &[u32]) -> RationalSeries {
    RationalSeries::product_ratio(num, den).expect("valid factors")
}

fn poly(terms: &[(u32, i64)]) -> RationalSeries {
    RationalSeries::polynomial(TPoly::from_terms(terms).expect("even exponents"))
}

/// `1/(1+t^2) = (1-t^2)/(1-t^4)`, the S_2 quotient factor of the first
/// blow-down.
fn s2_factor() -> RationalSeries {
    ratio(&[2], &[4])
}

/// `1/(1+t^2+t^4) = (1-t^2)/(1-t^6)`, the S_3 quotient factor of the
/// second blow-down.
fn s3_factor() -> RationalSeries {
    ratio(&[2], &[6])
}

/// The five corrections applied to `quasimap_series(3, n)`, in order.
///
/// Each step contributes `center * (t^2 - t^(2r))/(1 - t^2)` with sign
/// given by its direction.
pub fn degree3_steps(n: u32) -> Result<Vec<BlowupStep>, PipelineError> {
    require_n(n, 2)?;
    let one_plus_t2 = poly(&[(0, 1), (2, 1)]);
    let one_t2_t4 = poly(&[(0, 1), (2, 1), (4, 1)]);
    let gr = ratio(&[2 * n, 2 * n - 2], &[2, 4]);

    // inside the first blow-down
    let a = &(&one_t2_t4 * &gr) * &ratio(&[4 * n - 4], &[2]);
    let b = &(&poly(&[(2, 1)]) - &poly(&[(2 * n - 2, 1)]))
        * &(&(&one_plus_t2 * &one_plus_t2) * &ratio(&[2 * n - 2, 2 * n, 2 * n - 2], &[2, 4, 2]));
    let b = &b * &ratio(&[], &[2]);

    Ok(vec![
        BlowupStep {
            label: "blow-up along the P^(n-1) center".into(),
            direction: Direction::Up,
            codimension: 3 * n - 3,
            center_series: ratio(&[2 * n], &[2]),
            anchor: "(t^2 - t^(6n-6))/(1-t^2) * (1-t^2n)/(1-t^2)",
        },
        BlowupStep {
            label: "blow-up along the P^2-bundle over Gr(2,n)".into(),
            direction: Direction::Up,
            codimension: 2 * n - 2,
            center_series: &one_t2_t4 * &gr,
            anchor: "(t^2 - t^(4n-4))/(1-t^2) * (1+t^2+t^4)(1-t^2n)(1-t^(2n-2))/((1-t^2)(1-t^4))",
        },
        BlowupStep {
            label: "blow-up along the divisor-bundle center".into(),
            direction: Direction::Up,
            codimension: n - 1,
            center_series: &one_plus_t2 * &ratio(&[2 * n, 2 * n, 2 * n - 2], &[2, 2, 2]),
            anchor: "(t^2 - t^(2n-2))/(1-t^2) * (1+t^2)(1-t^2n)^2(1-t^(2n-2))/(1-t^2)^3",
        },
        BlowupStep {
            label: "first blow-down (S_2 quotient)".into(),
            direction: Direction::Down,
            codimension: 2,
            center_series: &(&a + &b) * &s2_factor(),
            anchor: "- t^2/(1+t^2) * ((1+t^2+t^4)(1-t^2n)(1-t^(2n-2))(1-t^(4n-4))/((1-t^2)(1-t^4)(1-t^2)) \
                     + (t^2 - t^(2n-2))/(1-t^2) (1+t^2)^2 (1-t^(2n-2))(1-t^2n)(1-t^(2n-2))/((1-t^2)(1-t^4)(1-t^2)))",
        },
        BlowupStep {
            label: "second blow-down (S_3 quotient)".into(),
            direction: Direction::Down,
            codimension: 3,
            center_series: &ratio(&[2 * n, 2 * n, 2 * n - 2, 2 * n + 2], &[2, 2, 2, 4]) * &s3_factor(),
            anchor: "- (t^2 + t^4)/(1+t^2+t^4) * (1-t^2n)^2(1-t^(2n-2))(1-t^(2n+2))/((1-t^2)^3(1-t^4))",
        },
    ])
}

/// `(1-t^(2n+8))/(1-t^6) + 2(t^4 - t^(2n+2))/(1-t^4)`, times
/// `(1-t^2n)/(1-t^2) * (1-t^2n)(1-t^(2n-2))/((1-t^2)(1-t^4))`.
pub fn degree3_closed_form(n: u32) -> RationalSeries {
    let first = ratio(&[2 * n + 8], &[6]);
    let second = &poly(&[(4, 2), (2 * n + 2, -2)]) * &ratio(&[], &[4]);
    &(&first + &second) * &ratio(&[2 * n, 2 * n, 2 * n - 2], &[2, 2, 4])
}

/// Quasimap series with all five corrections applied. Not checked.
pub fn degree3_assembled(n: u32) -> Result<RationalSeries, PipelineError> {
    let steps = degree3_steps(n)?;
    Ok(steps.iter().fold(quasimap_series(3, n), |p, s| s.apply(&p)))
}

/// Poincaré polynomial of the degree-3 moduli space, assembled from the
/// blow-up sequence and checked against the closed form.
pub fn degree3_betti(n: u32) -> Result<RationalSeries, PipelineError> {
    let assembled = degree3_assembled(n)?;
    let closed = degree3_closed_form(n);
    if assembled != closed {
        return Err(PipelineError::Mismatch {
            what: format!("degree-3 Betti numbers at n={n}"),
            assembled: assembled.to_string(),
            closed_form: closed.to_string(),
        });
    }
    Ok(closed)
}

/// The closed form with every `t^(2n)` sent to zero:
/// `[1/(1-t^6) + 2t^4/(1-t^4)] / ((1-t^2)^2 (1-t^4))`.
pub fn degree3_limit_series() -> RationalSeries {
    let bracket = &ratio(&[], &[6]) + &(&poly(&[(4, 2)]) * &ratio(&[], &[4]));
    &bracket * &ratio(&[], &[2, 2, 4])
}

/// `Q[xi:2, a:4, u:6, v:4, rho3:2, sigma:4]` with `a = alpha^2`,
/// `u = rho_1^3`, `v = rho_2^2`.
pub fn infinite_ring() -> GradedRing {
    GradedRing::new(&[
        ("xi", 2),
        ("a", 4),
        ("u", 6),
        ("v", 4),
        ("rho3", 2),
        ("sigma", 4),
    ])
    .expect("valid ring")
}

pub fn degree3_infinite_presentation() -> Presentation {
    let ring = infinite_ring();
    let rels = ["a*u", "u*sigma", "sigma^2 - 4*a*rho3^2"]
        .iter()
        .map(|s| MultiPoly::parse(&ring, s).expect("valid"))
        .collect();
    Presentation::new("H*(M_0,0(P^inf, 3))", &ring, rels).expect("homogeneous")
}

/// The ring at n = 2 is the quasimap ring itself.
pub fn degree3_p1_presentation() -> Presentation {
    Presentation::new(
        "H*(M_0,0(P^1, 3))",
        &invariant_ring(),
        relations_d3(2).generators().to_vec(),
    )
    .expect("homogeneous")
}

pub fn degree3_infinite_ring_verify() -> Result<VerificationReport, PipelineError> {
    let start = Instant::now();
    let p = degree3_infinite_presentation();
    let gb = p.groebner_basis();
    let mut monic: Vec<MultiPoly> = p.relations.iter().map(MultiPoly::monic).collect();
    monic.sort_by(|x, y| x.leading_monomial().cmp(&y.leading_monomial()));
    let as_text = monic.iter().map(|g| format!("{g}\n")).collect::<String>();
    let mut cases = vec![CaseResult::compare(
        "d3/infinite-basis-reduced",
        None,
        as_text,
        gb.to_text(),
    )];

    let hilbert = gb.hilbert_series();
    let limit = degree3_limit_series();
    cases.push(CaseResult::compare(
        "d3/infinite-hilbert",
        None,
        limit.clone(),
        hilbert.clone(),
    ));

    // degrees 10, 10, 8 as if the relations were a regular sequence
    let ci = &ratio(&[10, 10, 8], &[]) * &ratio(&[], &[2, 4, 6, 4, 2, 4]);
    let mut guard = CaseResult::compare(
        "d3/infinite-not-complete-intersection",
        None,
        limit,
        ci.clone(),
    );
    guard.pass = ci != hilbert;
    cases.push(guard.with_detail("passes when the complete-intersection series differs"));

    let p0 = Presentation::new("P0", &invariant_ring(), vec![])?;
    let a = MultiPoly::parse(&invariant_ring(), "a")?;
    let p1 = presentation_blowup(&p0, &[a], None, "rho1")?;
    let want = MultiPoly::parse(&p1.ring, "a*rho1")?;
    cases.push(CaseResult::compare(
        "d3/infinite-first-blowup",
        None,
        format!("{}\n{want}", p1.ring),
        format!(
            "{}\n{}",
            p1.ring,
            p1.relations
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join("\n")
        ),
    ));

    Ok(VerificationReport {
        suite: "d3".into(),
        cases,
        elapsed: start.elapsed(),
    })
}

pub fn degree3_p1_verify() -> Result<VerificationReport, PipelineError> {
    let start = Instant::now();
    let p = degree3_p1_presentation();
    let hilbert = p.hilbert_series();
    let cases = vec![
        CaseResult::compare(
            "d3/p1-vs-betti",
            Some(2),
            degree3_betti(2)?,
            hilbert.clone(),
        ),
        CaseResult::compare(
            "d3/p1-vs-quasimap",
            Some(2),
            quasimap_series(3, 2),
            hilbert.clone(),
        ),
        CaseResult::compare(
            "d3/p1-complete-intersection",
            Some(2),
            ratio(&[6, 8], &[2, 4]),
            hilbert,
        ),
        CaseResult::compare(
            "d3/p1-relation-degrees",
            Some(2),
            format!("{:?}", [6, 8]),
            format!("{:?}", p.relation_degrees()),
        ),
    ];
    Ok(VerificationReport {
        suite: "d3".into(),
        cases,
        elapsed: start.elapsed(),
    })
}
