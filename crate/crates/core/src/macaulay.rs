//! Macaulay representations, the growth operator `α^<d>`, Gotzmann representations
//! of Hilbert polynomials, and directional growth for multigraded Hilbert values.

use num::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{Rational, StdPoly};
use crate::ring::binomial;

/// Largest number of terms accepted before a polynomial is declared non-Hilbert.
pub const GOTZMANN_CAP: usize = 1_000_000;

/// `α = Σ_{i=1}^{d} binom(κ(i), i)` with `κ(d) > ... > κ(1) >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayRep {
    pub d: u32,
    /// `κ(d), κ(d-1), ..., κ(1)`.
    pub kappas: Vec<u64>,
}

impl MacaulayRep {
    pub fn value(&self) -> u128 {
        self.kappas
            .iter()
            .zip((1..=self.d as u64).rev())
            .map(|(&k, i)| binom_sat(k, i))
            .fold(0u128, |a, b| a.saturating_add(b))
    }
}

/// `binom(n, k)` in `u128`, saturating at `u128::MAX`.
fn binom_sat(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        // acc * (n - i) / (i + 1) is exact at every step.
        match acc.checked_mul(n as u128 - i) {
            Some(x) => acc = x / (i + 1),
            None => return u128::MAX,
        }
    }
    acc
}

/// Largest `κ >= i - 1` with `binom(κ, i) <= alpha`.
fn largest_kappa(alpha: u128, i: u64) -> u64 {
    let mut lo = i - 1;
    let mut step = 1u64;
    while binom_sat(lo + step, i) <= alpha {
        lo += step;
        step *= 2;
    }
    // binom(lo, i) <= alpha < binom(lo + step, i)
    let mut hi = lo + step;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binom_sat(mid, i) <= alpha {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The `d`-th Macaulay representation of `alpha`, by greedy descent.
pub fn macaulay_rep(alpha: u64, d: u32) -> Result<MacaulayRep> {
    if d == 0 {
        return Err(Error::Domain("Macaulay representation needs d >= 1".into()));
    }
    let mut rest = alpha as u128;
    let mut kappas = Vec::with_capacity(d as usize);
    for i in (1..=d as u64).rev() {
        let k = largest_kappa(rest, i);
        rest -= binom_sat(k, i);
        kappas.push(k);
    }
    debug_assert_eq!(rest, 0);
    Ok(MacaulayRep { d, kappas })
}

/// `α^<d> = Σ binom(κ(i)+1, i+1)`.
pub fn macaulay_growth(alpha: u64, d: u32) -> Result<u64> {
    let rep = macaulay_rep(alpha, d)?;
    let total = rep
        .kappas
        .iter()
        .zip((1..=d as u64).rev())
        .map(|(&k, i)| binom_sat(k + 1, i + 1))
        .try_fold(0u128, |a, b| a.checked_add(b))
        .and_then(|x| u64::try_from(x).ok());
    total.ok_or_else(|| Error::Overflow(format!("{alpha}^<{d}> exceeds u64")))
}

/// `P(t) = Σ_{i=1}^{D} binom(t + a_i - i + 1, a_i)` with `a_1 >= ... >= a_D >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GotzmannRep {
    pub a: Vec<u32>,
}

impl GotzmannRep {
    /// The Gotzmann number `D`.
    pub fn number(&self) -> usize {
        self.a.len()
    }

    /// Expands the binomial sum back into a polynomial.
    pub fn polynomial(&self) -> StdPoly {
        let mut p = StdPoly::zero();
        for (idx, &a) in self.a.iter().enumerate() {
            let i = idx as i64 + 1;
            p = &p + &StdPoly::binomial(a as i64 - i + 1, a);
        }
        p
    }
}

/// Peels `P` into its Gotzmann representation; fails if `P` is not a Hilbert polynomial.
pub fn gotzmann_rep(p: &StdPoly) -> Result<GotzmannRep> {
    let not_hilbert = |why: String| Error::NotHilbertPolynomial(format!("{p}: {why}"));
    let mut rest = p.clone();
    let mut a: Vec<u32> = Vec::new();
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            let c = rest.coeff(0);
            if !c.is_integer() || c.is_negative() {
                return Err(not_hilbert(format!("constant remainder {c} after {} terms", a.len())));
            }
            let c = c.to_integer().to_usize().filter(|&c| a.len() + c <= GOTZMANN_CAP);
            let c = c.ok_or_else(|| not_hilbert(format!("more than {GOTZMANN_CAP} terms")))?;
            a.extend(std::iter::repeat_n(0, c));
            break;
        }
        if !rest.leading_coeff().is_positive() {
            return Err(not_hilbert(format!("negative leading coefficient after {} terms", a.len())));
        }
        if a.len() >= GOTZMANN_CAP {
            return Err(not_hilbert(format!("more than {GOTZMANN_CAP} terms")));
        }
        let i = a.len() as i64 + 1;
        rest = &rest - &StdPoly::binomial(deg as i64 - i + 1, deg as u32);
        a.push(deg as u32);
    }
    Ok(GotzmannRep { a })
}

pub fn gotzmann_number(p: &StdPoly) -> Result<usize> {
    gotzmann_rep(p).map(|r| r.number())
}

/// Euclidean division of a Hilbert value by `binom(n + b, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CronaDivision {
    pub q: u64,
    pub r: u64,
    pub divisor: u64,
}

pub fn crona_division(value: u64, n: usize, b: u64) -> CronaDivision {
    let divisor = binomial(n as i64 + b as i64, n as i64);
    CronaDivision { q: value / divisor, r: value % divisor, divisor }
}

/// Maximal growth of a value in degree `b` along a block with `n + 1` variables:
/// `binom(n + b + 1, n) q + r^<b>`.
pub fn crona_growth(value: u64, n: usize, b: u64) -> Result<u64> {
    if b == 0 {
        return Err(Error::Domain("directional growth needs b >= 1".into()));
    }
    let CronaDivision { q, r, .. } = crona_division(value, n, b);
    let head = binomial(n as i64 + b as i64 + 1, n as i64) as u128 * q as u128;
    let total = head + macaulay_growth(r, b as u32)? as u128;
    u64::try_from(total).map_err(|_| Error::Overflow(format!("growth of {value} at degree {b}")))
}

/// Evaluates `P(t)` as a nonnegative integer, if it is one.
pub fn eval_count(p: &StdPoly, t: i64) -> Option<u64> {
    crate::poly::rational_to_u64(&p.eval_int(t))
}

/// True if `P(t+1) = P(t)^<t>` at every `t` in `range`.
pub fn persists_on(p: &StdPoly, range: std::ops::RangeInclusive<i64>) -> bool {
    range.into_iter().all(|t| {
        t >= 1
            && match (eval_count(p, t), eval_count(p, t + 1)) {
                (Some(x), Some(y)) => macaulay_growth(x, t as u32).ok() == Some(y),
                _ => false,
            }
    })
}

/// Leading coefficient times `deg!`, the multiplicity of a Hilbert polynomial.
pub fn normalized_leading(p: &StdPoly) -> Rational {
    match p.degree() {
        None => Rational::zero(),
        Some(d) => p.leading_coeff() * Rational::from_integer(crate::poly::factorial(d as u32)),
    }
}

/// `binom(t + k, k)`, the Hilbert polynomial of `P^k`.
pub fn projective_space_poly(k: u32) -> StdPoly {
    StdPoly::binomial(k as i64, k)
}
