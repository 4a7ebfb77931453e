//! Buchberger's algorithm over weighted graded rings, plus the invariants
//! read off a leading-term ideal: Hilbert series, Krull dimension and the
//! vector-space dimension of zero-dimensional quotients.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::PolyError;
use crate::poly::MultiPoly;
use crate::ring::{GradedRing, Monomial};
use crate::series::{RationalSeries, TPoly};

/// Monomial orders supported by the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    /// Weighted degree first, then lexicographic with the first generator
    /// most significant.
    WeightedDegreeLex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub ring: GradedRing,
}

impl MonomialOrder {
    pub fn weighted_degree_lex(ring: &GradedRing) -> Self {
        Self {
            kind: OrderKind::WeightedDegreeLex,
            ring: ring.clone(),
        }
    }
}

/// An ideal given by homogeneous generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: GradedRing,
    generators: Vec<MultiPoly>,
}

impl Ideal {
    /// Zero generators are dropped; the rest must be homogeneous and live in
    /// `ring`.
    pub fn new(ring: &GradedRing, generators: Vec<MultiPoly>) -> Result<Self, PolyError> {
        let mut kept = Vec::with_capacity(generators.len());
        for g in generators {
            ring.check_same(g.ring())?;
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(PolyError::Inhomogeneous(g.to_string()));
            }
            kept.push(g);
        }
        Ok(Self {
            ring: ring.clone(),
            generators: kept,
        })
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> GroebnerBasis {
        buchberger(self, &MonomialOrder::weighted_degree_lex(&self.ring))
    }
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ideal: Ideal,
    basis: Vec<MultiPoly>,
    order: MonomialOrder,
}

/// Vector-space dimension of a quotient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite(u64),
    Infinite,
}

impl GroebnerBasis {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// Reduced, monic, sorted by increasing leading monomial.
    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ideal.ring
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    pub fn normal_form(&self, f: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.ring().check_same(f.ring())?;
        Ok(reduce(f, &self.basis))
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool, PolyError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn hilbert_series(&self) -> RationalSeries {
        monomial_ideal_hilbert_series(self.ring(), &self.leading_monomials())
    }

    /// `None` for the unit ideal.
    pub fn krull_dimension(&self) -> Option<usize> {
        let n = self.ring().len();
        let supports: Vec<u64> = self
            .leading_monomials()
            .iter()
            .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
            .collect();
        (0u64..(1 << n))
            .filter(|set| supports.iter().all(|s| s & !set != 0))
            .map(|set| set.count_ones() as usize)
            .max()
    }

    pub fn quotient_vector_dimension(&self) -> QuotientDimension {
        let lead = self.leading_monomials();
        let n = self.ring().len();
        let mut bounds = Vec::with_capacity(n);
        for i in 0..n {
            let pure = lead
                .iter()
                .filter(|m| m.support().all(|j| j == i))
                .map(|m| m.exponents()[i])
                .min();
            match pure {
                Some(e) => bounds.push(e),
                None => return QuotientDimension::Infinite,
            }
        }
        let mut exps = vec![0u32; n];
        QuotientDimension::Finite(count_standard(&lead, &bounds, &mut exps, 0))
    }

    /// One basis element per line in canonical text form.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.basis {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

// Standard monomials inside the box [0, bounds) not divisible by any lead.
fn count_standard(lead: &[Monomial], bounds: &[u32], exps: &mut Vec<u32>, i: usize) -> u64 {
    let divisible = |exps: &[u32]| {
        lead.iter()
            .any(|m| m.exponents().iter().zip(exps).all(|(a, b)| a <= b))
    };
    if divisible(exps) {
        return 0;
    }
    if i == bounds.len() {
        return 1;
    }
    let mut total = 0;
    for e in 0..bounds[i] {
        exps[i] = e;
        let c = count_standard(lead, bounds, exps, i + 1);
        exps[i] = 0;
        // raising x_i further only adds divisibility
        if c == 0 && e > 0 {
            break;
        }
        total += c;
    }
    total
}

/// Full reduction of `f` by `basis`. Leading terms of `basis` must be
/// nonzero.
fn reduce(f: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let mut p = f.clone();
    let mut remainder = MultiPoly::zero(f.ring());
    while let Some((m, c)) = p.pop_leading() {
        let divisor = basis.iter().find_map(|g| {
            let (lm, lc) = g.leading_term()?;
            lm.quotient_of(&m).map(|q| (g, q, lc))
        });
        match divisor {
            Some((g, q, lc)) => {
                let factor = -(c / lc);
                for (gm, gc) in g.terms().skip(1) {
                    p.add_term(gm.mul(&q), gc * &factor);
                }
            }
            None => remainder.add_term(m, c),
        }
    }
    remainder
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly, weights: &[u32]) -> MultiPoly {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let lcm = fm.lcm(gm, weights);
    let uf = fm.quotient_of(&lcm).expect("lcm divisible");
    let ug = gm.quotient_of(&lcm).expect("lcm divisible");
    &f.mul_term(&uf, &fc.recip()) - &g.mul_term(&ug, &gc.recip())
}

/// Reduced Gröbner basis by Buchberger's algorithm with the normal pair
/// selection strategy (smallest lcm degree first, ties by index) and both
/// of Buchberger's criteria.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> GroebnerBasis {
    let ring = &ideal.ring;
    let weights = ring.weights();
    let mut basis: Vec<MultiPoly> = Vec::new();
    let mut seen = BTreeSet::new();
    for g in &ideal.generators {
        let g = g.monic();
        if seen.insert(g.to_string()) {
            basis.push(g);
        }
    }
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));

    let lcm_of = |basis: &[MultiPoly], i: usize, j: usize| {
        basis[i]
            .leading_monomial()
            .expect("nonzero")
            .lcm(basis[j].leading_monomial().expect("nonzero"), weights)
    };
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }

    while let Some(&(i, j)) = pairs
        .iter()
        .min_by_key(|&&(i, j)| (lcm_of(&basis, i, j).degree(), i, j))
    {
        pairs.remove(&(i, j));
        let li = basis[i].leading_monomial().expect("nonzero");
        let lj = basis[j].leading_monomial().expect("nonzero");
        if li.is_coprime(lj) {
            continue;
        }
        let lcm = lcm_of(&basis, i, j);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
                && basis[k].leading_monomial().expect("nonzero").divides(&lcm)
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], weights);
        let r = reduce(&s, &basis);
        if !r.is_zero() {
            let new = basis.len();
            basis.push(r.monic());
            for k in 0..new {
                pairs.insert((k, new));
            }
        }
    }

    GroebnerBasis {
        ideal: ideal.clone(),
        basis: interreduce(basis),
        order: order.clone(),
    }
}

fn interreduce(basis: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let hm = h.leading_monomial().expect("nonzero");
            j != i && hm.divides(lm) && (hm != lm || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let reduced: Vec<MultiPoly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<MultiPoly> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, h)| h.clone())
                .collect();
            reduce(&minimal[i], &others).monic()
        })
        .collect();
    let mut reduced = reduced;
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    reduced
}

/// Whether two ideals of the same ring coincide: every generator of each
/// reduces to zero modulo the other's Gröbner basis.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool, PolyError> {
    a.ring.check_same(&b.ring)?;
    let ga = a.groebner_basis();
    let gb = b.groebner_basis();
    for g in &b.generators {
        if !ga.contains(g)? {
            return Ok(false);
        }
    }
    for g in &a.generators {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hilbert series of `ring / <monomials>`.
pub fn monomial_ideal_hilbert_series(ring: &GradedRing, monomials: &[Monomial]) -> RationalSeries {
    let gens: Vec<Vec<u32>> = monomials.iter().map(|m| m.exponents().to_vec()).collect();
    let mut memo = HashMap::new();
    let numerator = hilbert_numerator(gens, ring.weights(), &mut memo);
    RationalSeries::new(numerator, ring.weights()).expect("generator weights are even")
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = (0..gens.len())
        .map(|i| !(0..gens.len()).any(|j| j != i && divides(&gens[j], &gens[i])))
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

fn weighted_degree(exps: &[u32], weights: &[u32]) -> u32 {
    exps.iter().zip(weights).map(|(e, w)| e * w).sum()
}

// Numerator N with H(R/I) = N / prod (1 - t^w_i), via
// N(I) = N(I + <x^e>) + t^(e w) N(I : x^e) on a pivot variable x.
fn hilbert_numerator(
    gens: Vec<Vec<u32>>,
    weights: &[u32],
    memo: &mut HashMap<Vec<Vec<u32>>, TPoly>,
) -> TPoly {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return TPoly::one();
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return TPoly::zero();
    }
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let n = weights.len();
    let counts: Vec<usize> = (0..n)
        .map(|i| gens.iter().filter(|g| g[i] > 0).count())
        .collect();
    let (pivot, &count) = counts
        .iter()
        .enumerate()
        .max_by_key(|&(i, c)| (*c, std::cmp::Reverse(i)))
        .expect("ring has generators");

    let result = if count <= 1 {
        // pairwise coprime: a complete intersection of monomials
        gens.iter().fold(TPoly::one(), |acc, g| {
            let d = weighted_degree(g, weights);
            &acc * &TPoly::one_minus(d).expect("even positive degree")
        })
    } else {
        let e = gens
            .iter()
            .map(|g| g[pivot])
            .filter(|&x| x > 0)
            .min()
            .expect("pivot occurs");
        let mut power = vec![0; n];
        power[pivot] = e;
        let mut with_power = gens.clone();
        with_power.push(power);
        let colon: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| {
                let mut h = g.clone();
                h[pivot] = h[pivot].saturating_sub(e);
                h
            })
            .collect();
        let sum = hilbert_numerator(with_power, weights, memo);
        let quotient = hilbert_numerator(colon, weights, memo);
        &sum + &quotient.shift(e * weights[pivot]).expect("even weights")
    };
    memo.insert(gens, result.clone());
    result
}
