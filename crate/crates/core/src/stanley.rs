//! Partial Stanley decompositions of `(S/I)` in degrees `>= a`.
//!
//! For a strongly multistable ideal generated in degrees `<= a`, every standard
//! monomial `x^u` of degree `a` spans the subring `k[x_{i,σ_i}, ..., x_{i,n_i} : i]`
//! with `σ_i = m^i(x^u)`, and these pieces partition the standard monomials of all
//! degrees `b >= a`.

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, StdPoly};
use crate::ring::{binomial, block_monomials, monomial_stats, DegreeVector, Monomial, MonomialIdeal, ProductRing};
use crate::stable::is_strongly_multistable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyPair {
    pub base: Monomial,
    /// `σ_i`: the pair spans variables `x_{i,σ_i}, ..., x_{i,n_i}` of block `i`.
    pub suffix_starts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialDecomposition {
    ring: ProductRing,
    anchor: DegreeVector,
    pairs: Vec<StanleyPair>,
}

impl PartialDecomposition {
    pub fn ring(&self) -> &ProductRing {
        &self.ring
    }

    pub fn anchor(&self) -> &DegreeVector {
        &self.anchor
    }

    pub fn pairs(&self) -> &[StanleyPair] {
        &self.pairs
    }

    /// The monomials of degree `b` in the piece spanned by `pair`.
    pub fn span(&self, pair: &StanleyPair, b: &[i64]) -> Vec<Monomial> {
        let mut out = vec![pair.base.clone()];
        for (i, (&sigma, (&bi, &ai))) in pair.suffix_starts.iter().zip(b.iter().zip(self.anchor.iter())).enumerate() {
            if bi < ai {
                return Vec::new();
            }
            let n = self.ring.blocks()[i];
            let first = self.ring.var(i, sigma);
            let parts: Vec<Monomial> = block_monomials(n - sigma + 1, (bi - ai) as u32)
                .into_iter()
                .map(|e| Monomial::from_pairs(e.into_iter().enumerate().map(|(j, x)| (first + j, x))))
                .collect();
            out = out.iter().flat_map(|m| parts.iter().map(move |p| m.mul(p))).collect();
        }
        out
    }
}

/// One pair per standard monomial of degree `a`.
pub fn partial_decomposition(ideal: &MonomialIdeal, a: &[i64]) -> Result<PartialDecomposition> {
    let ring = ideal.ring();
    if a.len() != ring.num_blocks() {
        return Err(Error::RingMismatch(format!("anchor {a:?} for {} blocks", ring.num_blocks())));
    }
    if !is_strongly_multistable(ideal) {
        return Err(Error::NotStronglyMultistable);
    }
    let gb = ideal.generation_bound();
    if !DegreeVector::from(a).dominates(&gb) {
        return Err(Error::Precondition(format!("anchor {a:?} is below the generation bound {gb}")));
    }
    let mut pairs = Vec::new();
    for m in crate::ring::enumerate_degree_slice(ring, a) {
        if ideal.contains(&m) {
            continue;
        }
        let stats = monomial_stats(ring, &m)?;
        let suffix_starts = stats.m_sup.iter().map(|s| s.unwrap_or(0)).collect();
        pairs.push(StanleyPair { base: m, suffix_starts });
    }
    Ok(PartialDecomposition { ring: ring.clone(), anchor: a.into(), pairs })
}

/// `Σ_pairs Π_i binom(b_i - a_i + n_i - σ_i, n_i - σ_i)`.
pub fn decomposition_hilbert(d: &PartialDecomposition, b: &[i64]) -> Result<u64> {
    if !DegreeVector::from(b).dominates(&d.anchor) {
        return Err(Error::Precondition(format!("degree {b:?} is below the anchor {}", d.anchor)));
    }
    let n = d.ring.blocks();
    Ok(d.pairs
        .iter()
        .map(|p| {
            (0..n.len())
                .map(|i| {
                    let k = (n[i] - p.suffix_starts[i]) as i64;
                    binomial(b[i] - d.anchor[i] + k, k)
                })
                .product::<u64>()
        })
        .sum())
}

/// The same sum with `t_i` in place of `b_i`; this is the Hilbert polynomial of `S/I`.
pub fn decomposition_polynomial(d: &PartialDecomposition) -> MultiPoly {
    let n = d.ring.blocks();
    let s = n.len();
    let mut total = MultiPoly::zero(s);
    for p in &d.pairs {
        let mut term = MultiPoly::constant(s, crate::poly::rat(1));
        for (i, &ni) in n.iter().enumerate() {
            let k = (ni - p.suffix_starts[i]) as u32;
            let factor = StdPoly::binomial(k as i64 - d.anchor[i], k).to_multi(s, i);
            term = &term * &factor;
        }
        total = &total + &term;
    }
    total
}
