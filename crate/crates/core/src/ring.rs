//! Cox rings of products of projective spaces, monomials and monomial ideals.
//!
//! Variables are indexed densely in the order `x_{1,0}, ..., x_{1,n_1}, x_{2,0}, ..., x_{s,n_s}`,
//! which is also the order `x_{1,0} > x_{1,1} > ... > x_{s,n_s}` used for deglex comparisons.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Deref, Range};

use crate::error::{Error, Result};

/// A multidegree in `Z^s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DegreeVector(pub Vec<i64>);

impl DegreeVector {
    pub fn zero(s: usize) -> Self {
        DegreeVector(vec![0; s])
    }

    pub fn unit(s: usize, i: usize) -> Self {
        let mut v = vec![0; s];
        v[i] = 1;
        DegreeVector(v)
    }

    pub fn add(&self, other: &[i64]) -> Self {
        DegreeVector(self.0.iter().zip(other).map(|(a, b)| a + b).collect())
    }

    pub fn sup(&self, other: &[i64]) -> Self {
        DegreeVector(self.0.iter().zip(other).map(|(a, b)| *a.max(b)).collect())
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &[i64]) -> bool {
        self.0.len() == other.len() && self.0.iter().zip(other).all(|(a, b)| a >= b)
    }
}

impl Deref for DegreeVector {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for DegreeVector {
    fn from(v: Vec<i64>) -> Self {
        DegreeVector(v)
    }
}

impl From<&[i64]> for DegreeVector {
    fn from(v: &[i64]) -> Self {
        DegreeVector(v.to_vec())
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A monomial as sorted `(variable, exponent)` pairs with no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    terms: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { terms: Vec::new() }
    }

    pub fn var(v: usize) -> Self {
        Monomial { terms: vec![(v, 1)] }
    }

    pub fn from_dense(exps: &[u32]) -> Self {
        Monomial {
            terms: exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, &e)| (v, e)).collect(),
        }
    }

    /// Builds a monomial from arbitrary pairs, merging repeated variables.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut terms: Vec<(usize, u32)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        terms.sort_unstable();
        let mut merged: Vec<(usize, u32)> = Vec::with_capacity(terms.len());
        for (v, e) in terms {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { terms: merged }
    }

    pub fn terms(&self) -> &[(usize, u32)] {
        &self.terms
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.terms.binary_search_by_key(&v, |t| t.0).map_or(0, |i| self.terms[i].1)
    }

    pub fn is_one(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.1).sum()
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms.last().map(|t| t.0)
    }

    pub fn to_dense(&self, nvars: usize) -> Vec<u32> {
        let mut v = vec![0; nvars];
        for &(i, e) in &self.terms {
            v[i] = e;
        }
        v
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &(v, e) in &self.terms {
            while j < other.terms.len() && other.terms[j].0 < v {
                j += 1;
            }
            match other.terms.get(j) {
                Some(&(w, f)) if w == v && f >= e => j += 1,
                _ => return false,
            }
        }
        true
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.terms.iter().chain(&other.terms).copied())
    }

    pub fn mul_var(&self, v: usize) -> Monomial {
        self.mul(&Monomial::var(v))
    }

    /// The exact quotient `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let terms = self
            .terms
            .iter()
            .map(|&(v, e)| (v, e - other.exponent(v)))
            .filter(|t| t.1 > 0)
            .collect();
        Some(Monomial { terms })
    }

    pub fn div_var(&self, v: usize) -> Option<Monomial> {
        self.div(&Monomial::var(v))
    }

    /// Degree-lexicographic comparison with variable 0 largest.
    pub fn cmp_deglex(&self, other: &Monomial) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| self.cmp_lex(other))
    }

    /// Lexicographic comparison of exponent vectors with variable 0 most significant.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            if a.0 != b.0 {
                // The monomial with the smaller variable index has a positive exponent
                // where the other has zero.
                return if a.0 < b.0 { Ordering::Greater } else { Ordering::Less };
            }
            if a.1 != b.1 {
                return a.1.cmp(&b.1);
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }

    /// Restriction to the variables in `range`.
    pub fn restrict(&self, range: &Range<usize>) -> Monomial {
        Monomial { terms: self.terms.iter().filter(|t| range.contains(&t.0)).copied().collect() }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|&(v, e)| if e == 1 { format!("z{v}") } else { format!("z{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Cox ring of `P^{n_1} x ... x P^{n_s}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductRing {
    blocks: Vec<usize>,
    offsets: Vec<usize>,
}

impl ProductRing {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Domain("a product ring needs at least one block".into()));
        }
        let mut offsets = Vec::with_capacity(blocks.len() + 1);
        let mut acc = 0;
        for &n in &blocks {
            offsets.push(acc);
            acc += n + 1;
        }
        offsets.push(acc);
        Ok(ProductRing { blocks, offsets })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn num_vars(&self) -> usize {
        self.offsets[self.blocks.len()]
    }

    /// Dense index of `x_{i,j}` (both zero-based).
    pub fn var(&self, i: usize, j: usize) -> usize {
        assert!(j <= self.blocks[i], "x_{{{i},{j}}} is not a variable");
        self.offsets[i] + j
    }

    /// `(block, position)` of a dense variable index.
    pub fn var_position(&self, v: usize) -> (usize, usize) {
        let i = self.offsets.partition_point(|&o| o <= v) - 1;
        (i, v - self.offsets[i])
    }

    pub fn block_range(&self, i: usize) -> Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }

    pub fn check(&self, m: &Monomial) -> Result<()> {
        match m.max_var() {
            Some(v) if v >= self.num_vars() => Err(Error::MalformedMonomial(format!(
                "variable index {v} out of range for a ring with {} variables",
                self.num_vars()
            ))),
            _ => Ok(()),
        }
    }

    pub fn degree(&self, m: &Monomial) -> DegreeVector {
        let mut d = vec![0i64; self.num_blocks()];
        for &(v, e) in m.terms() {
            d[self.var_position(v).0] += e as i64;
        }
        DegreeVector(d)
    }

    pub fn block_part(&self, m: &Monomial, i: usize) -> Monomial {
        m.restrict(&self.block_range(i))
    }

    /// Splits `m` into its block-`i` part and the complementary part.
    pub fn split_block(&self, m: &Monomial, i: usize) -> (Monomial, Monomial) {
        let r = self.block_range(i);
        let (inside, outside): (Vec<_>, Vec<_>) = m.terms().iter().partition(|t| r.contains(&t.0));
        (Monomial { terms: inside }, Monomial { terms: outside })
    }

    /// `Π binom(n_i + b_i, n_i)`, or 0 when some `b_i < 0`.
    pub fn slice_size(&self, b: &[i64]) -> u64 {
        self.blocks.iter().zip(b).map(|(&n, &bi)| binomial((n as i64) + bi, n as i64)).product()
    }

    /// Renders a monomial with variable names `x{i}_{j}` (one-based blocks).
    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.terms()
            .iter()
            .map(|&(v, e)| {
                let (i, j) = self.var_position(v);
                if e == 1 {
                    format!("x{}_{}", i + 1, j)
                } else {
                    format!("x{}_{}^{}", i + 1, j, e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// `binom(n, k)` as an integer, 0 when `n < 0`, `k < 0` or `k > n`. Panics on `u64` overflow.
pub fn binomial(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Block maxima `m^i` and minima `m_i` of a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialStats {
    pub m_sup: Vec<Option<usize>>,
    pub m_inf: Vec<Option<usize>>,
}

pub fn monomial_stats(ring: &ProductRing, m: &Monomial) -> Result<MonomialStats> {
    ring.check(m)?;
    let s = ring.num_blocks();
    let mut m_sup = vec![None; s];
    let mut m_inf: Vec<Option<usize>> = vec![None; s];
    for &(v, _) in m.terms() {
        let (i, j) = ring.var_position(v);
        m_sup[i] = Some(m_sup[i].map_or(j, |x: usize| x.max(j)));
        m_inf[i] = Some(m_inf[i].map_or(j, |x: usize| x.min(j)));
    }
    Ok(MonomialStats { m_sup, m_inf })
}

/// Monomials of degree `deg` in `nvars` variables (dense exponents), lex-descending.
pub fn block_monomials(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == nvars {
            prefix.push(deg);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=deg).rev() {
            prefix.push(e);
            rec(nvars, deg - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(nvars, deg, &mut Vec::with_capacity(nvars), &mut out);
    } else if deg == 0 {
        out.push(Vec::new());
    }
    out
}

/// The monomials of block `i` of total degree `deg`, deglex-descending.
pub fn block_slice(ring: &ProductRing, i: usize, deg: u32) -> Vec<Monomial> {
    let off = ring.block_range(i).start;
    block_monomials(ring.blocks()[i] + 1, deg)
        .into_iter()
        .map(|e| Monomial::from_pairs(e.into_iter().enumerate().map(|(j, x)| (off + j, x))))
        .collect()
}

/// All monomials of multidegree `b`, deglex-descending. Empty if some `b_i < 0`.
pub fn enumerate_degree_slice(ring: &ProductRing, b: &[i64]) -> Vec<Monomial> {
    assert_eq!(b.len(), ring.num_blocks(), "degree vector has wrong length");
    if b.iter().any(|&x| x < 0) {
        return Vec::new();
    }
    let mut out = vec![Monomial::one()];
    for (i, &bi) in b.iter().enumerate() {
        let part = block_slice(ring, i, bi as u32);
        out = out.iter().flat_map(|m| part.iter().map(move |p| m.mul(p))).collect();
    }
    out
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: ProductRing,
    generators: Vec<Monomial>,
}

/// Removes duplicates and non-minimal elements; the result is deglex-descending.
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut gens: Vec<Monomial> = gens.into_iter().collect();
    gens.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| b.cmp_lex(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp_deglex(a));
    kept
}

impl MonomialIdeal {
    pub fn new(ring: ProductRing, generators: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let generators: Vec<Monomial> = generators.into_iter().collect();
        for g in &generators {
            ring.check(g)?;
        }
        Ok(MonomialIdeal { ring, generators: minimalize(generators) })
    }

    /// Builds an ideal from dense exponent vectors.
    pub fn from_dense(ring: ProductRing, gens: &[Vec<u32>]) -> Result<Self> {
        for g in gens {
            if g.len() != ring.num_vars() {
                return Err(Error::MalformedMonomial(format!(
                    "exponent vector {g:?} has {} entries, the ring has {} variables",
                    g.len(),
                    ring.num_vars()
                )));
            }
        }
        Self::new(ring, gens.iter().map(|g| Monomial::from_dense(g)))
    }

    pub fn zero(ring: ProductRing) -> Self {
        MonomialIdeal { ring, generators: Vec::new() }
    }

    pub fn ring(&self) -> &ProductRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Membership with a check that `m` lives in this ideal's ring.
    pub fn try_contains(&self, m: &Monomial) -> Result<bool> {
        self.ring.check(m).map_err(|e| Error::RingMismatch(e.to_string()))?;
        Ok(self.contains(m))
    }

    /// `dim (S/I)_b`, counted over dense exponent vectors without building monomials.
    pub fn hilbert_function(&self, b: &[i64]) -> u64 {
        assert_eq!(b.len(), self.ring.num_blocks(), "degree vector has wrong length");
        if b.iter().any(|&x| x < 0) {
            return 0;
        }
        if self.generators.is_empty() {
            return self.ring.slice_size(b);
        }
        let gens: Vec<Vec<u32>> = self.generators.iter().map(|g| g.to_dense(self.ring.num_vars())).collect();
        let mut exps = vec![0u32; self.ring.num_vars()];
        let mut ends = Vec::with_capacity(self.ring.num_vars());
        for i in 0..self.ring.num_blocks() {
            let r = self.ring.block_range(i);
            ends.extend(r.clone().map(|_| r.end));
        }
        let mut rem: Vec<u32> = b.iter().map(|&x| x as u32).collect();
        count_standard(&self.ring, &gens, &ends, 0, &mut rem, &mut exps)
    }

    /// The monomials of `I_b`, deglex-descending.
    pub fn slice(&self, b: &[i64]) -> Vec<Monomial> {
        enumerate_degree_slice(&self.ring, b).into_iter().filter(|m| self.contains(m)).collect()
    }

    /// Componentwise maximum of generator degrees.
    pub fn generation_bound(&self) -> DegreeVector {
        let mut d = DegreeVector::zero(self.ring.num_blocks());
        for g in &self.generators {
            d = d.sup(&self.ring.degree(g));
        }
        d
    }

    pub fn format_generators(&self) -> String {
        if self.generators.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.generators.iter().map(|g| self.ring.format_monomial(g)).collect();
        format!("({})", parts.join(", "))
    }
}

fn count_standard(
    ring: &ProductRing,
    gens: &[Vec<u32>],
    ends: &[usize],
    v: usize,
    rem: &mut [u32],
    exps: &mut [u32],
) -> u64 {
    if v == exps.len() {
        let inside = gens.iter().any(|g| g.iter().zip(exps.iter()).all(|(x, y)| x <= y));
        return u64::from(!inside);
    }
    let block = ring.var_position(v).0;
    let last = v + 1 == ends[v];
    let range = if last { rem[block]..=rem[block] } else { 0..=rem[block] };
    let mut total = 0;
    for e in range {
        exps[v] = e;
        rem[block] -= e;
        total += count_standard(ring, gens, ends, v + 1, rem, exps);
        rem[block] += e;
    }
    exps[v] = 0;
    total
}

pub fn ideal_contains(ideal: &MonomialIdeal, m: &Monomial) -> Result<bool> {
    ideal.try_contains(m)
}

/// An ideal whose Hilbert function is the sum of those of `ideals` in degrees `b >= (1, ..., 1)`.
///
/// Summand `k` is relabelled into variables `x_{i, k(n_i+1)+j}` and all products of
/// variables from distinct summands are added as generators.
pub fn combine_ideals(ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
    let first = ideals.first().ok_or_else(|| Error::Domain("combine_ideals needs at least one ideal".into()))?;
    let ring = first.ring();
    if let Some(bad) = ideals.iter().find(|i| i.ring() != ring) {
        return Err(Error::RingMismatch(format!(
            "blocks {:?} differ from {:?}",
            bad.ring().blocks(),
            ring.blocks()
        )));
    }
    let l = ideals.len();
    let new_ring = ProductRing::new(ring.blocks().iter().map(|&n| l * (n + 1) - 1).collect())?;
    let relabel = |k: usize, v: usize| {
        let (i, j) = ring.var_position(v);
        new_ring.var(i, k * (ring.blocks()[i] + 1) + j)
    };
    let mut gens = Vec::new();
    for (k, ideal) in ideals.iter().enumerate() {
        for g in ideal.generators() {
            gens.push(Monomial::from_pairs(g.terms().iter().map(|&(v, e)| (relabel(k, v), e))));
        }
    }
    for k in 0..l {
        for k2 in k + 1..l {
            for v in 0..ring.num_vars() {
                for w in 0..ring.num_vars() {
                    gens.push(Monomial::var(relabel(k, v)).mul_var(relabel(k2, w)));
                }
            }
        }
    }
    MonomialIdeal::new(new_ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1p1() -> ProductRing {
        ProductRing::new(vec![1, 1]).unwrap()
    }

    /// `(x0, x1*y0)` in `P^1 x P^1`.
    fn hirz_lift() -> MonomialIdeal {
        MonomialIdeal::from_dense(p1p1(), &[vec![1, 0, 0, 0], vec![0, 1, 1, 0]]).unwrap()
    }

    #[test]
    fn stats_of_unit_and_mixed_monomials() {
        let r = p1p1();
        let m = Monomial::from_dense(&[0, 2, 0, 2]);
        let st = monomial_stats(&r, &m).unwrap();
        assert_eq!(st.m_sup, vec![Some(1), Some(1)]);
        assert_eq!(st.m_inf, vec![Some(1), Some(1)]);
        assert_eq!(monomial_stats(&r, &Monomial::one()).unwrap().m_sup, vec![None, None]);

        let r23 = ProductRing::new(vec![2, 3]).unwrap();
        let m = Monomial::from_dense(&[1, 0, 1, 0, 1, 0, 0]);
        let st = monomial_stats(&r23, &m).unwrap();
        assert_eq!((st.m_inf[0], st.m_sup[0]), (Some(0), Some(2)));
        assert_eq!((st.m_inf[1], st.m_sup[1]), (Some(1), Some(1)));

        assert!(matches!(monomial_stats(&r, &Monomial::var(9)), Err(Error::MalformedMonomial(_))));
    }

    #[test]
    fn slices_have_expected_size_and_order() {
        let r = p1p1();
        let lin = enumerate_degree_slice(&r, &[1, 0]);
        assert_eq!(lin, vec![Monomial::var(0), Monomial::var(1)]);
        assert_eq!(enumerate_degree_slice(&r, &[2, 2]).len(), 9);
        let r23 = ProductRing::new(vec![2, 3]).unwrap();
        let s = enumerate_degree_slice(&r23, &[3, 3]);
        assert_eq!(s.len(), 200);
        assert!(s.windows(2).all(|w| w[0].cmp_deglex(&w[1]) == Ordering::Greater));
        assert!(enumerate_degree_slice(&r, &[-1, 2]).is_empty());
        assert_eq!(enumerate_degree_slice(&r, &[0, 0]), vec![Monomial::one()]);
    }

    #[test]
    fn deglex_order() {
        let x0 = Monomial::var(0);
        let x1 = Monomial::var(1);
        assert_eq!(x0.cmp_deglex(&x1), Ordering::Greater);
        assert_eq!(x1.mul(&x1).cmp_deglex(&x0), Ordering::Greater);
        let a = Monomial::from_dense(&[1, 0, 0, 1]);
        let b = Monomial::from_dense(&[0, 2, 0, 0]);
        assert_eq!(a.cmp_deglex(&b), Ordering::Greater);
        let c = Monomial::from_dense(&[1, 0, 1, 0]);
        assert_eq!(c.cmp_deglex(&a), Ordering::Greater);
    }

    #[test]
    fn monomial_arithmetic() {
        let a = Monomial::from_dense(&[1, 2, 0]);
        let b = Monomial::from_dense(&[0, 1, 3]);
        let p = a.mul(&b);
        assert_eq!(p.to_dense(3), vec![1, 3, 3]);
        assert!(a.divides(&p) && b.divides(&p) && !p.divides(&a));
        assert_eq!(p.div(&a), Some(b.clone()));
        assert_eq!(a.div(&b), None);
        assert_eq!(Monomial::from_pairs([(2, 1), (0, 1), (2, 2)]).to_dense(3), vec![1, 0, 3]);
    }

    #[test]
    fn membership_and_hilbert_values() {
        let i = hirz_lift();
        assert!(!i.try_contains(&Monomial::from_dense(&[0, 2, 0, 2])).unwrap());
        assert!(i.try_contains(&Monomial::from_dense(&[1, 1, 1, 1])).unwrap());
        assert!(i.try_contains(&Monomial::var(0)).unwrap());
        assert!(matches!(i.try_contains(&Monomial::var(4)), Err(Error::RingMismatch(_))));
        assert_eq!(i.hilbert_function(&[2, 2]), 1);
        let z = MonomialIdeal::zero(ProductRing::new(vec![2, 3]).unwrap());
        assert_eq!(z.hilbert_function(&[2, 1]), 6 * 4);
    }

    #[test]
    fn generation_bounds() {
        assert_eq!(hirz_lift().generation_bound(), DegreeVector(vec![1, 1]));
        assert_eq!(MonomialIdeal::zero(p1p1()).generation_bound(), DegreeVector(vec![0, 0]));
        let r12 = ProductRing::new(vec![1, 2]).unwrap();
        let c2 = MonomialIdeal::from_dense(r12, &[vec![0, 0, 2, 0, 0], vec![1, 0, 1, 0, 0], vec![1, 0, 0, 3, 0]])
            .unwrap();
        assert_eq!(c2.generation_bound(), DegreeVector(vec![1, 3]));
    }

    #[test]
    fn minimal_generators() {
        let r = p1p1();
        let i = MonomialIdeal::from_dense(
            r,
            &[vec![1, 0, 0, 0], vec![1, 0, 1, 0], vec![0, 1, 1, 0], vec![1, 0, 0, 0]],
        )
        .unwrap();
        assert_eq!(i.generators().len(), 2);
    }

    #[test]
    fn combining_zero_ideals() {
        let z = MonomialIdeal::zero(p1p1());
        let j = combine_ideals(&[z.clone(), z.clone()]).unwrap();
        assert_eq!(j.ring().blocks(), &[3, 3]);
        for b1 in 1..4 {
            for b2 in 1..4 {
                assert_eq!(j.hilbert_function(&[b1, b2]), 2 * (b1 + 1) as u64 * (b2 + 1) as u64);
            }
        }
        let single = combine_ideals(&[hirz_lift()]).unwrap();
        assert_eq!(single.generators(), hirz_lift().generators());
        assert!(combine_ideals(&[]).is_err());
    }

    #[test]
    fn combining_with_a_principal_ideal() {
        let x0 = MonomialIdeal::from_dense(p1p1(), &[vec![1, 0, 0, 0]]).unwrap();
        let j = combine_ideals(&[x0, MonomialIdeal::zero(p1p1())]).unwrap();
        assert_eq!(j.hilbert_function(&[1, 1]), 6);
    }
}
