//! Exact univariate and multivariate polynomials over the rationals.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Converts an exact rational to `u64` when it is a nonnegative integer.
pub fn rational_to_u64(q: &Rational) -> Option<u64> {
    if q.is_integer() && !q.is_negative() {
        q.to_integer().to_u64()
    } else {
        None
    }
}

/// Univariate polynomial in `t`; `coeffs[k]` is the coefficient of `t^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct StdPoly {
    coeffs: Vec<Rational>,
}

impl StdPoly {
    pub fn zero() -> Self {
        StdPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = StdPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// `t + shift`.
    pub fn linear(shift: Rational) -> Self {
        Self::from_coeffs(vec![shift, Rational::one()])
    }

    /// The binomial `binom(t + shift, k)` as a polynomial in `t` of degree `k`.
    pub fn binomial(shift: i64, k: u32) -> Self {
        let mut p = StdPoly::constant(Rational::one());
        for m in 0..k as i64 {
            p = &p * &StdPoly::linear(rat(shift - m));
        }
        p.scale(&Rational::new(BigInt::one(), factorial(k)))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_int(&self, t: i64) -> Rational {
        self.eval(&rat(t))
    }

    /// Substitutes `t -> t + h`.
    pub fn shift(&self, h: i64) -> Self {
        let lin = StdPoly::linear(rat(h));
        let mut acc = StdPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &StdPoly::constant(c.clone());
        }
        acc
    }

    /// Views this polynomial as a [`MultiPoly`] in variable `axis` of `nvars`.
    pub fn to_multi(&self, nvars: usize, axis: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(nvars);
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut e = vec![0u32; nvars];
            e[axis] = k as u32;
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Add for &StdPoly {
    type Output = StdPoly;
    fn add(self, rhs: &StdPoly) -> StdPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        StdPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &StdPoly {
    type Output = StdPoly;
    fn sub(self, rhs: &StdPoly) -> StdPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        StdPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &StdPoly {
    type Output = StdPoly;
    fn mul(self, rhs: &StdPoly) -> StdPoly {
        if self.is_zero() || rhs.is_zero() {
            return StdPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        StdPoly::from_coeffs(out)
    }
}

impl fmt::Display for StdPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.clone(), if k == 0 { vec![] } else { vec![("t".to_string(), k as u32)] }));
        write_terms(f, terms)
    }
}

/// Multivariate polynomial in `t1, ..., ts`, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `t_{axis+1}`.
    pub fn var(nvars: usize, axis: usize) -> Self {
        let mut e = vec![0; nvars];
        e[axis] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Parse(format!(
                    "exponent vector {e:?} has {} entries, expected {nvars}",
                    e.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest power of each variable appearing with nonzero coefficient.
    pub fn maxdeg(&self) -> Vec<u32> {
        let mut v = vec![0; self.nvars];
        for e in self.terms.keys() {
            for (m, &x) in v.iter_mut().zip(e) {
                *m = (*m).max(x);
            }
        }
        v
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            p.add_term(e.clone(), x * c);
        }
        p
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong length");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    term *= num::pow::pow(x.clone(), k as usize);
                }
            }
            acc += term;
        }
        acc
    }

    pub fn eval_int(&self, point: &[i64]) -> Rational {
        let pt: Vec<Rational> = point.iter().map(|&x| rat(x)).collect();
        self.eval(&pt)
    }

    /// Raises to a nonnegative power.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, Rational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes variable `i` by `subs[i]` (all in a common ring of `subs[0].nvars()` variables).
    pub fn substitute(&self, subs: &[MultiPoly]) -> Self {
        assert_eq!(subs.len(), self.nvars);
        let target = subs.first().map_or(0, |p| p.nvars);
        let mut acc = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (s, &k) in subs.iter().zip(e) {
                if k > 0 {
                    term = &term * &s.pow(k);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Collects terms by the power of variable `axis`: entry `k` is the coefficient of `t_axis^k`,
    /// itself a polynomial in the same variables (with `t_axis` absent).
    pub fn coefficients_in(&self, axis: usize) -> Vec<MultiPoly> {
        let deg = self.maxdeg().get(axis).copied().unwrap_or(0) as usize;
        let mut out = vec![Self::zero(self.nvars); if self.is_zero() { 0 } else { deg + 1 }];
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[axis] = 0;
            out[e[axis] as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Converts to a univariate polynomial when only variable `axis` occurs.
    pub fn to_std(&self, axis: usize) -> Option<StdPoly> {
        let mut coeffs = vec![Rational::zero(); self.maxdeg().get(axis).copied().unwrap_or(0) as usize + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != axis && k > 0) {
                return None;
            }
            coeffs[e[axis] as usize] = c.clone();
        }
        Some(StdPoly::from_coeffs(coeffs))
    }

    /// Terms in descending graded-lexicographic order of exponents.
    /// Terms in display order: total degree descending, then lex descending.
    pub fn ordered_terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&rat(-1))
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut p = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                p.add_term(e, ca * cb);
            }
        }
        p
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.ordered_terms().into_iter().map(|(e, c)| {
            let vars = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| (format!("t{}", i + 1), k))
                .collect::<Vec<_>>();
            (c.clone(), vars)
        });
        write_terms(f, terms)
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Rational, Vec<(String, u32)>)>,
) -> fmt::Result {
    let mut first = true;
    for (c, vars) in terms {
        let neg = c.is_negative();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        let a = c.abs();
        let monomial = vars
            .iter()
            .map(|(v, k)| if *k == 1 { v.clone() } else { format!("{v}^{k}") })
            .collect::<Vec<_>>()
            .join("*");
        match (a.is_one(), monomial.is_empty()) {
            (_, true) => write!(f, "{a}")?,
            (true, false) => write!(f, "{monomial}")?,
            (false, false) => write!(f, "{a}*{monomial}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k as u64).fold(BigInt::one(), |acc, m| acc * BigInt::from(m))
}

/// Parses a polynomial expression in `t1, ..., ts` such as `"1/2*t1^2 + 3/2*t1 + 2*t2 + 2"`.
///
/// Supports `+ - * / ^`, parentheses, integer literals and juxtaposition of a number
/// with a variable (`3t1`). Division is only allowed by constants.
pub fn parse_poly(text: &str, nvars: usize) -> Result<MultiPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, nvars };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("polynomial expression, column {}: {msg}", self.pos + 1))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    let c = match d.to_std(0) {
                        Some(s) if s.degree() == Some(0) => s.coeff(0),
                        _ => return Err(self.error("division by a non-constant or zero")),
                    };
                    acc = acc.scale(&c.recip());
                }
                Some(b't' | b'(') => acc = &acc * &self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let k = self.integer()?;
            let k = u32::try_from(k).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn primary(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b't') => {
                self.pos += 1;
                let k = self.integer()?;
                let k = k.to_usize().unwrap_or(usize::MAX);
                if k == 0 || k > self.nvars {
                    return Err(self.error(&format!("variable t{k} out of range t1..t{}", self.nvars)));
                }
                Ok(MultiPoly::var(self.nvars, k - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(MultiPoly::constant(self.nvars, Rational::from_integer(n)))
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}
