//! Equivariant Poincaré series of the quasimap spaces and the relation
//! ideals that localization produces for them.
//!
//! Only the closed forms are implemented here; the fixed-point analysis
//! that produces them is not re-derived.

use crate::error::PolyError;
use crate::groebner::Ideal;
use crate::poly::{rat, MultiPoly};
use crate::ring::GradedRing;
use crate::series::{RationalSeries, TPoly};

/// `Q[xi:2, alpha:2]`, the torus-equivariant ring before collapsing
/// `alpha^2` to `a`.
pub fn torus_ring() -> GradedRing {
    GradedRing::new(&[("xi", 2), ("alpha", 2)]).expect("valid ring")
}

/// `Q[xi:2, a:4]` with `a = alpha^2`.
pub fn invariant_ring() -> GradedRing {
    GradedRing::new(&[("xi", 2), ("a", 4)]).expect("valid ring")
}

/// Equivariant Poincaré series of the semistable locus of
/// `P(W_d (x) C^n)` under SL(2).
///
/// # Panics
/// If `d` or `n` is zero.
pub fn quasimap_series(d: u32, n: u32) -> RationalSeries {
    assert!(d >= 1 && n >= 1, "quasimap_series needs d, n >= 1");
    if d % 2 == 1 {
        let m = d.div_ceil(2);
        odd_quasimap_series(m, n)
    } else {
        even_quasimap_series(d / 2, n)
    }
}

// d = 2m - 1
fn odd_quasimap_series(m: u32, n: u32) -> RationalSeries {
    if m * n == 1 {
        // the factor 1 - t^0 vanishes: P^1 has no semistable points
        return RationalSeries::zero();
    }
    RationalSeries::product_ratio(&[2 * m * n - 2, 2 * m * n], &[2, 4]).expect("valid factors")
}

// d = 2m
fn even_quasimap_series(m: u32, n: u32) -> RationalSeries {
    let numerator = TPoly::from_terms(&[
        (0, 1),
        (2 * n * (m + 1) - 2, -1),
        (2 * n * (m + 1), -1),
        (2 * n * (2 * m + 1) - 2, 1),
    ])
    .expect("even exponents");
    RationalSeries::new(numerator, &[2, 4]).expect("valid factors")
}

/// The two generators `xi^n * odd` and `xi^n * even` where
/// `(xi + 2 alpha)^n = even + alpha * odd`, collapsed to `Q[xi, a]`.
pub fn relations_d2(n: u32) -> Ideal {
    let ring = torus_ring();
    let f = parse(&ring, &format!("(xi + 2*alpha)^{n}"));
    let xi_n = parse(&ring, &format!("xi^{n}"));
    let (even, odd) = f.sym_pair("alpha").expect("alpha in ring");
    collapsed_ideal(vec![&xi_n * &odd, &xi_n * &even])
}

/// The odd and even parts of `(xi + alpha)^n (xi + 3 alpha)^n`, collapsed
/// to `Q[xi, a]`.
pub fn relations_d3(n: u32) -> Ideal {
    let ring = torus_ring();
    let f = parse(&ring, &format!("(xi + alpha)^{n}*(xi + 3*alpha)^{n}"));
    let (even, odd) = f.sym_pair("alpha").expect("alpha in ring");
    collapsed_ideal(vec![odd, even])
}

fn collapsed_ideal(gens: Vec<MultiPoly>) -> Ideal {
    let gens: Vec<MultiPoly> = gens
        .iter()
        .map(|g| g.collapse_even("alpha", "a").expect("even in alpha"))
        .collect();
    Ideal::new(&invariant_ring(), gens).expect("homogeneous generators")
}

fn parse(ring: &GradedRing, text: &str) -> MultiPoly {
    MultiPoly::parse(ring, text).expect("well-formed constant expression")
}

/// `rho^r + c_1 rho^(r-1) + ... + c_r`. Each `c_i` must be zero or
/// homogeneous of degree `i * weight(rho)`.
pub fn projective_bundle_relation(
    ring: &GradedRing,
    cherns: &[MultiPoly],
    rho: &str,
) -> Result<MultiPoly, PolyError> {
    let w = ring
        .weight_of(rho)
        .ok_or_else(|| PolyError::UnknownGenerator(rho.to_string()))?;
    let r = cherns.len() as u32;
    let rho_var = MultiPoly::var(ring, rho)?;
    let mut out = rho_var.pow(r);
    for (i, c) in cherns.iter().enumerate() {
        ring.check_same(c.ring())?;
        if c.is_zero() {
            continue;
        }
        let expected = (i as u32 + 1) * w;
        let info = c.degree_info();
        if !info.is_homogeneous || info.weighted_degree != Some(expected) {
            return Err(PolyError::WeightMismatch {
                name: format!("c_{}", i + 1),
                expected,
                found: c.to_string(),
            });
        }
        out = &out + &(c * &rho_var.pow(r - 1 - i as u32));
    }
    Ok(out)
}

/// Chern classes `c_1..c_r` of a sum of line bundles on which the torus
/// acts with the given weights: `c_i = e_i(w) alpha^i`.
pub fn torus_weight_cherns(
    ring: &GradedRing,
    alpha: &str,
    weights: &[i64],
) -> Result<Vec<MultiPoly>, PolyError> {
    let alpha_var = MultiPoly::var(ring, alpha)?;
    // elementary symmetric polynomials of the weights
    let mut e = vec![0i64; weights.len() + 1];
    e[0] = 1;
    for (k, &w) in weights.iter().enumerate() {
        for i in (1..=k + 1).rev() {
            e[i] += w * e[i - 1];
        }
    }
    Ok((1..=weights.len())
        .map(|i| alpha_var.pow(i as u32).scale(&rat(e[i])))
        .collect())
}

/// The unstable contribution removed from the degree-2 blow-up:
/// `1/(1-t^2) * (1-t^2n)/(1-t^2) * t^(2n-2) (1-t^(2n-2))/(1-t^2)`.
///
/// # Panics
/// If `n < 2`.
pub fn unstable_correction_d2(n: u32) -> RationalSeries {
    assert!(n >= 2, "unstable_correction_d2 needs n >= 2");
    let shift = RationalSeries::polynomial(TPoly::monomial(2 * n - 2, 1).expect("even"));
    let rest = RationalSeries::product_ratio(&[2 * n, 2 * n - 2], &[2, 2, 2]).expect("valid");
    &shift * &rest
}
