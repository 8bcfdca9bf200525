//! Multigraded Hilbert polynomials in the binomial basis.
//!
//! A polynomial `P(t_1, ..., t_s)` anchored at `a` is written uniquely as
//!
//! ```text
//! P = Σ F_{i_2...i_s}(t_1) binom(t_2 - a_2 + i_2, i_2) ... binom(t_s - a_s + i_s, i_s)
//! ```
//!
//! and for the Hilbert polynomial of a strongly multistable ideal each `F` is a
//! standard-graded Hilbert polynomial.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::macaulay::gotzmann_rep;
use crate::poly::{factorial, MultiPoly, Rational, StdPoly};
use crate::ring::{DegreeVector, ProductRing};

/// The coefficients `F_{i_2...i_s}(t_1)` of a polynomial at an anchor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FTable {
    pub anchor: DegreeVector,
    /// `(p_2, ..., p_s)`.
    pub maxdeg: Vec<u32>,
    /// Nonzero entries keyed by `(i_2, ..., i_s)`.
    pub entries: BTreeMap<Vec<u32>, StdPoly>,
}

impl FTable {
    pub fn get(&self, key: &[u32]) -> StdPoly {
        self.entries.get(key).cloned().unwrap_or_else(StdPoly::zero)
    }

    pub fn num_axes(&self) -> usize {
        self.anchor.len()
    }
}

/// A univariate slice `P^r_b(t_r)` of a Hilbert polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialPoly {
    /// One-based axis.
    pub r: usize,
    /// `(b_1, ..., b_{r-1}, b_{r+1}, ..., b_s)`.
    pub fixed: Vec<i64>,
    pub poly: StdPoly,
}

pub fn maxdeg(p: &MultiPoly) -> DegreeVector {
    DegreeVector(p.maxdeg().into_iter().map(i64::from).collect())
}

pub fn evaluate(p: &MultiPoly, point: &[i64]) -> Rational {
    p.eval_int(point)
}

/// `binom(top, k)` as the polynomial `binom(x, k)` evaluated at `x = top`.
fn binom_value(top: i64, k: u32) -> Rational {
    StdPoly::binomial(top, k).eval(&Rational::zero())
}

/// Basis change into the `F` table at anchor `a`, one axis at a time from the last.
pub fn standard_decomposition(p: &MultiPoly, a: &[i64], ring: &ProductRing) -> Result<FTable> {
    let s = p.nvars();
    if s != ring.num_blocks() || a.len() != s {
        return Err(Error::RingMismatch(format!(
            "polynomial in {s} variables, anchor of length {}, ring with {} blocks",
            a.len(),
            ring.num_blocks()
        )));
    }
    // Keys are (i_{j+1}, ..., i_s) for the axes already processed.
    let mut current: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
    if !p.is_zero() {
        current.insert(Vec::new(), p.clone());
    }
    for j in (1..s).rev() {
        let mut next = BTreeMap::new();
        for (key, mut q) in current {
            while !q.is_zero() {
                let e = q.maxdeg()[j];
                let lead = q.coefficients_in(j).swap_remove(e as usize);
                let coeff = lead.scale(&Rational::from_integer(factorial(e)));
                let basis = StdPoly::binomial(e as i64 - a[j], e).to_multi(s, j);
                q = &q - &(&coeff * &basis);
                let mut k = vec![e];
                k.extend(&key);
                next.insert(k, coeff);
            }
        }
        current = next;
    }
    let entries = current
        .into_iter()
        .map(|(k, q)| (k, q.to_std(0).expect("only t1 remains after the basis change")))
        .filter(|(_, f)| !f.is_zero())
        .collect();
    let md = p.maxdeg();
    Ok(FTable { anchor: a.into(), maxdeg: md[1..].to_vec(), entries })
}

/// Inverse of [`standard_decomposition`].
pub fn recompose(f: &FTable) -> MultiPoly {
    let s = f.num_axes();
    let mut total = MultiPoly::zero(s);
    for (key, poly) in &f.entries {
        let mut term = poly.to_multi(s, 0);
        for (j, &i) in key.iter().enumerate() {
            let axis = j + 1;
            term = &term * &StdPoly::binomial(i as i64 - f.anchor[axis], i).to_multi(s, axis);
        }
        total = &total + &term;
    }
    total
}

/// `P^r_b(t_r)` for a one-based axis `r` and the `s - 1` fixed coordinates `b`.
pub fn partial_poly(f: &FTable, r: usize, b: &[i64]) -> Result<PartialPoly> {
    let s = f.num_axes();
    if r == 0 || r > s {
        return Err(Error::Domain(format!("axis {r} out of range 1..={s}")));
    }
    if b.len() + 1 != s {
        return Err(Error::Domain(format!("{} fixed coordinates given, expected {}", b.len(), s - 1)));
    }
    // Full coordinate vector with a placeholder on axis r.
    let mut full: Vec<i64> = b[..r - 1].to_vec();
    full.push(0);
    full.extend(&b[r - 1..]);
    let zero = PartialPoly { r, fixed: b.to_vec(), poly: StdPoly::zero() };
    let out_of_range = (r..s).any(|j| full[j] < 0 || full[j] > f.maxdeg[j - 1] as i64);
    if out_of_range {
        return Ok(zero);
    }
    if r == 1 {
        let key: Vec<u32> = full[1..].iter().map(|&x| x as u32).collect();
        return Ok(PartialPoly { poly: f.get(&key), ..zero });
    }
    let a = &f.anchor;
    let mut poly = StdPoly::zero();
    for (key, entry) in &f.entries {
        // key[j - 1] = i_j for axes j = 2..s (zero-based j = 1..s-1).
        if (r..s).any(|j| key[j - 1] as i64 != full[j]) {
            continue;
        }
        let mut c = entry.eval_int(full[0]);
        for j in 1..r - 1 {
            let i = key[j - 1];
            c *= binom_value(full[j] - a[j] + i as i64, i);
        }
        if c.is_zero() {
            continue;
        }
        let ir = key[r - 2];
        poly = &poly + &StdPoly::binomial(ir as i64 - a[r - 1], ir).scale(&c);
    }
    Ok(PartialPoly { poly, ..zero })
}

pub fn is_admissible_std(p: &StdPoly) -> bool {
    gotzmann_rep(p).is_ok()
}

/// Decomposes `P` and checks the necessary conditions for it to be a Hilbert polynomial
/// on `ring`: degree at most `n_i` in `t_i`, and every `F` entry a standard-graded
/// Hilbert polynomial.
pub fn check_admissible(p: &MultiPoly, a: &[i64], ring: &ProductRing) -> Result<FTable> {
    let table = standard_decomposition(p, a, ring)?;
    for (i, (&d, &n)) in p.maxdeg().iter().zip(ring.blocks()).enumerate() {
        if d as usize > n {
            return Err(Error::NotHilbertPolynomial(format!(
                "{p} has degree {d} in t{} but the block has dimension {n}",
                i + 1
            )));
        }
    }
    for (key, entry) in &table.entries {
        gotzmann_rep(entry).map_err(|e| {
            Error::NotHilbertPolynomial(format!("entry F{key:?} = {entry} of {p} at anchor {}: {e}", table.anchor))
        })?;
    }
    Ok(table)
}

pub fn is_admissible_multi(p: &MultiPoly, a: &[i64], ring: &ProductRing) -> bool {
    check_admissible(p, a, ring).is_ok()
}

/// `Π binom(t_i + n_i, n_i)`, the Hilbert polynomial of the zero ideal.
pub fn ambient_polynomial(ring: &ProductRing) -> MultiPoly {
    let s = ring.num_blocks();
    let mut p = MultiPoly::constant(s, Rational::one());
    for (i, &n) in ring.blocks().iter().enumerate() {
        p = &p * &StdPoly::binomial(n as i64, n as u32).to_multi(s, i);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rat};

    fn p1p2p1() -> ProductRing {
        ProductRing::new(vec![1, 2, 1]).unwrap()
    }

    #[test]
    fn maxdeg_examples() {
        assert_eq!(maxdeg(&parse_poly("t3+1", 3).unwrap()).0, vec![0, 0, 1]);
        assert_eq!(maxdeg(&MultiPoly::zero(3)).0, vec![0, 0, 0]);
        assert_eq!(maxdeg(&parse_poly("1/2*t1^2+3/2*t1+2*t2+2", 2).unwrap()).0, vec![2, 1]);
    }

    #[test]
    fn t3_plus_one_table() {
        let p = parse_poly("t3+1", 3).unwrap();
        let f = standard_decomposition(&p, &[2, 2, 2], &p1p2p1()).unwrap();
        assert_eq!(f.entries.len(), 2);
        assert_eq!(f.get(&[0, 0]), StdPoly::from_ints(&[2]));
        assert_eq!(f.get(&[0, 1]), StdPoly::from_ints(&[1]));
        assert_eq!(f.maxdeg, vec![0, 1]);
        assert_eq!(recompose(&f), p);
    }

    #[test]
    fn t3_plus_one_partial_polynomials() {
        let p = parse_poly("t3+1", 3).unwrap();
        let f = standard_decomposition(&p, &[2, 2, 2], &p1p2p1()).unwrap();
        assert_eq!(partial_poly(&f, 2, &[2, 0]).unwrap().poly, StdPoly::from_ints(&[2]));
        assert_eq!(partial_poly(&f, 2, &[2, 1]).unwrap().poly, StdPoly::from_ints(&[1]));
        assert_eq!(partial_poly(&f, 2, &[2, 5]).unwrap().poly, StdPoly::zero());
        assert_eq!(partial_poly(&f, 3, &[2, 2]).unwrap().poly, StdPoly::from_ints(&[1, 1]));
        assert_eq!(partial_poly(&f, 1, &[0, 1]).unwrap().poly, StdPoly::from_ints(&[1]));
        assert!(partial_poly(&f, 4, &[2, 2]).is_err());
        assert!(partial_poly(&f, 0, &[2, 2]).is_err());
    }

    #[test]
    fn last_axis_partial_is_a_restriction() {
        let ring = ProductRing::new(vec![2, 3]).unwrap();
        let p = parse_poly("1/2*t1^2+3/2*t1+2*t2+2", 2).unwrap();
        let f = standard_decomposition(&p, &[2, 3], &ring).unwrap();
        for b1 in 0..6 {
            let q = partial_poly(&f, 2, &[b1]).unwrap().poly;
            for t in 0..6 {
                assert_eq!(q.eval_int(t), p.eval_int(&[b1, t]));
            }
        }
    }

    #[test]
    fn zero_polynomial_has_empty_table() {
        let f = standard_decomposition(&MultiPoly::zero(3), &[2, 2, 2], &p1p2p1()).unwrap();
        assert!(f.entries.is_empty());
        assert_eq!(recompose(&f), MultiPoly::zero(3));
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible_std(&StdPoly::from_ints(&[1, 1])));
        assert!(!is_admissible_std(&StdPoly::from_ints(&[-1])));
        assert!(is_admissible_multi(&parse_poly("t3+1", 3).unwrap(), &[2, 2, 2], &p1p2p1()));
        assert!(!is_admissible_multi(&parse_poly("t3-5", 3).unwrap(), &[2, 2, 2], &p1p2p1()));
        assert!(!is_admissible_multi(&parse_poly("t3^2", 3).unwrap(), &[2, 2, 2], &p1p2p1()));
    }

    #[test]
    fn ambient_polynomial_counts_monomials() {
        let ring = ProductRing::new(vec![2, 3]).unwrap();
        let p = ambient_polynomial(&ring);
        assert_eq!(evaluate(&p, &[3, 3]), rat(200));
        assert!(is_admissible_multi(&p, &[2, 2], &ring));
    }
}
