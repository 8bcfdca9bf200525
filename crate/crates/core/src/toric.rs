//! Cox rings of smooth projective toric varieties and transport of Hilbert data
//! from the Cox ring of a product of projective spaces.
//!
//! A nef basis `C = (c_1, ..., c_s)` of `Pic(X) ⊗ Q` with `c_1` regular defines
//! `f(b) = Σ b_i c_i` and the companion ring `S` of `P^{n_1} x ... x P^{n_s}` with
//! `n_i = dim R_{c_i} - 1`. The map `τ` sending `x_{i,k}` to the `k`-th basis monomial
//! of `R_{c_i}` identifies `(S/I)_b` with `(R/J)_{f(b)}` whenever it is surjective in
//! degree `b`, so a Hilbert polynomial `P` for `J` is checked through `Q = P ∘ f` on
//! the `2^s` vertices of a persistence cube.

use std::collections::{BTreeSet, HashSet};

use num::Zero;

use crate::error::{Error, Result};
use crate::hilbpoly::check_admissible;
use crate::persistence::{find_persistence_point, CheckedPoint, PersistenceOptions, PersistencePoint, Rejection, Verdict};
use crate::poly::{rat, MultiPoly, Rational};
use crate::ring::{enumerate_degree_slice, minimalize, DegreeVector, Monomial, ProductRing};

const CERTIFICATE_ROUNDS: usize = 100_000;

/// A polynomial ring `k[z_0, ..., z_{N-1}]` graded by `Z^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxRing {
    /// `columns[j]` is the degree of `z_j`.
    columns: Vec<Vec<i64>>,
    names: Vec<String>,
    /// Integer row combination `y` with `y · deg(z_j) > 0` for every `j`.
    certificate: Option<Vec<i64>>,
}

impl CoxRing {
    pub fn new(columns: Vec<Vec<i64>>) -> Result<Self> {
        let names = (0..columns.len()).map(|j| format!("z{j}")).collect();
        Self::with_names(columns, names)
    }

    pub fn with_names(columns: Vec<Vec<i64>>, names: Vec<String>) -> Result<Self> {
        let s = columns.first().map(|c| c.len()).ok_or_else(|| Error::Domain("a Cox ring needs variables".into()))?;
        if s == 0 {
            return Err(Error::Domain("the grading group has rank 0".into()));
        }
        if let Some((j, c)) = columns.iter().enumerate().find(|(_, c)| c.len() != s) {
            return Err(Error::Domain(format!("degree of z{j} has {} entries, expected {s}", c.len())));
        }
        if let Some(j) = columns.iter().position(|c| c.iter().all(|&x| x == 0)) {
            return Err(Error::Domain(format!("degree of z{j} is zero")));
        }
        if names.len() != columns.len() {
            return Err(Error::Domain(format!("{} names for {} variables", names.len(), columns.len())));
        }
        let certificate = positivity_certificate(&columns);
        Ok(CoxRing { columns, names, certificate })
    }

    /// Builds the ring from an `s x N` matrix given row by row.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Domain("degree matrix rows have different lengths".into()));
        }
        Self::new((0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect())
    }

    pub fn rank(&self) -> usize {
        self.columns[0].len()
    }

    pub fn num_vars(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn certificate(&self) -> Option<&[i64]> {
        self.certificate.as_deref()
    }

    pub fn degree(&self, m: &Monomial) -> DegreeVector {
        let mut d = vec![0; self.rank()];
        for &(v, e) in m.terms() {
            for (x, c) in d.iter_mut().zip(&self.columns[v]) {
                *x += e as i64 * c;
            }
        }
        DegreeVector(d)
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

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.terms()
            .iter()
            .map(|&(v, e)| if e == 1 { self.names[v].clone() } else { format!("{}^{e}", self.names[v]) })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Finds `y` with `y · col > 0` for all columns by perceptron updates.
fn positivity_certificate(columns: &[Vec<i64>]) -> Option<Vec<i64>> {
    let s = columns[0].len();
    let dot = |y: &[i64], c: &[i64]| y.iter().zip(c).map(|(a, b)| a * b).sum::<i64>();
    let mut y = vec![0i64; s];
    for _ in 0..CERTIFICATE_ROUNDS {
        match columns.iter().find(|c| dot(&y, c) <= 0) {
            None => return Some(y),
            Some(c) => {
                for (a, b) in y.iter_mut().zip(c) {
                    *a += b;
                }
            }
        }
    }
    None
}

/// The Kleinschmidt variety `X_d(a)` with `0 <= a_1 <= ... <= a_s`, `1 <= s <= d - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KleinschmidtSpec {
    pub d: usize,
    pub a: Vec<i64>,
}

/// Columns `(-a_i, 1)` for `i <= s`, then `(0, 1)`, then `(1, 0)` repeated `d - s + 1` times.
pub fn kleinschmidt_cox(spec: &KleinschmidtSpec) -> Result<CoxRing> {
    let s = spec.a.len();
    if spec.d < 2 || s < 1 || s > spec.d - 1 {
        return Err(Error::Domain(format!("need d >= 2 and 1 <= s <= d - 1, got d = {}, s = {s}", spec.d)));
    }
    if spec.a[0] < 0 || spec.a.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Domain(format!("a = {:?} must be nonnegative and weakly increasing", spec.a)));
    }
    let mut cols: Vec<Vec<i64>> = spec.a.iter().map(|&x| vec![-x, 1]).collect();
    cols.push(vec![0, 1]);
    cols.extend(std::iter::repeat_n(vec![1, 0], spec.d - s + 1));
    CoxRing::new(cols)
}

/// All monomials of degree `b`, deglex-descending.
pub fn toric_degree_slice(ring: &CoxRing, b: &[i64]) -> Result<Vec<Monomial>> {
    if b.len() != ring.rank() {
        return Err(Error::RingMismatch(format!("degree {b:?} for a grading of rank {}", ring.rank())));
    }
    let y = ring.certificate().ok_or(Error::InfiniteSlice)?;
    let dot = |c: &[i64]| y.iter().zip(c).map(|(a, b)| a * b).sum::<i64>();
    let weights: Vec<i64> = ring.columns.iter().map(|c| dot(c)).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; ring.num_vars()];
    let mut rest = b.to_vec();
    slice_rec(ring, &weights, 0, &mut rest, &mut exps, &mut out);
    out.sort_by(|a, b| b.cmp_deglex(a));
    Ok(out)
}

fn slice_rec(ring: &CoxRing, weights: &[i64], j: usize, rest: &mut [i64], exps: &mut [u32], out: &mut Vec<Monomial>) {
    if rest.iter().all(|&x| x == 0) {
        out.push(Monomial::from_dense(exps));
        return;
    }
    if j == ring.num_vars() {
        return;
    }
    let y = ring.certificate.as_ref().unwrap();
    let budget: i64 = y.iter().zip(rest.iter()).map(|(a, b)| a * b).sum();
    if budget <= 0 {
        return;
    }
    let max = budget / weights[j];
    for e in 0..=max {
        exps[j] = e as u32;
        for (r, c) in rest.iter_mut().zip(&ring.columns[j]) {
            *r -= e * c;
        }
        slice_rec(ring, weights, j + 1, rest, exps, out);
        for (r, c) in rest.iter_mut().zip(&ring.columns[j]) {
            *r += e * c;
        }
    }
    exps[j] = 0;
}

/// A monomial ideal of a [`CoxRing`], by minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxIdeal {
    ring: CoxRing,
    generators: Vec<Monomial>,
}

impl CoxIdeal {
    pub fn new(ring: CoxRing, generators: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let generators: Vec<Monomial> = generators.into_iter().collect();
        for g in &generators {
            ring.check(g)?;
        }
        Ok(CoxIdeal { ring, generators: minimalize(generators) })
    }

    pub fn from_dense(ring: CoxRing, gens: &[Vec<u32>]) -> Result<Self> {
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

    pub fn ring(&self) -> &CoxRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn format_generators(&self) -> String {
        if self.generators.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.generators.iter().map(|g| self.ring.format_monomial(g)).collect();
        format!("({})", parts.join(", "))
    }
}

/// `dim (R/J)_b`.
pub fn toric_hilbert_function(ideal: &CoxIdeal, b: &[i64]) -> Result<u64> {
    Ok(toric_degree_slice(&ideal.ring, b)?.iter().filter(|m| !ideal.contains(m)).count() as u64)
}

/// Independent classes `c_1, ..., c_s` with `c_{regular}` asserted to be regular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NefBasis {
    classes: Vec<Vec<i64>>,
    /// Zero-based index of the class asserted regular.
    regular: usize,
}

impl NefBasis {
    pub fn new(classes: Vec<Vec<i64>>) -> Result<Self> {
        Self::with_regular(classes, 0)
    }

    pub fn with_regular(classes: Vec<Vec<i64>>, regular: usize) -> Result<Self> {
        let s = classes.len();
        if s == 0 || classes.iter().any(|c| c.len() != s) {
            return Err(Error::InvalidNefBasis(format!("need s vectors of length s, got {classes:?}")));
        }
        if regular >= s {
            return Err(Error::InvalidNefBasis(format!("regular index {} out of range 1..={s}", regular + 1)));
        }
        if determinant(&classes).is_zero() {
            return Err(Error::InvalidNefBasis(format!("{classes:?} is linearly dependent")));
        }
        Ok(NefBasis { classes, regular })
    }

    pub fn standard(s: usize) -> Self {
        let classes = (0..s).map(|i| DegreeVector::unit(s, i).0).collect();
        NefBasis { classes, regular: 0 }
    }

    pub fn classes(&self) -> &[Vec<i64>] {
        &self.classes
    }

    pub fn regular_index(&self) -> usize {
        self.regular
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }
}

fn determinant(rows: &[Vec<i64>]) -> Rational {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    let mut det = rat(1);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return rat(0);
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col].clone();
        for r in col + 1..n {
            let factor = &m[r][col] / &m[col][col];
            let pivot = m[col].clone();
            for (x, p) in m[r].iter_mut().zip(&pivot).skip(col) {
                *x -= &factor * p;
            }
        }
    }
    det
}

/// `f(b) = Σ b_i c_i`.
pub fn f_map(c: &NefBasis, b: &[i64]) -> DegreeVector {
    let s = c.rank();
    let mut out = vec![0; s];
    for (bi, ci) in b.iter().zip(&c.classes) {
        for (o, x) in out.iter_mut().zip(ci) {
            *o += bi * x;
        }
    }
    DegreeVector(out)
}

/// `(f# P)(u) = P(Σ u_i c_i)`.
pub fn f_sharp(c: &NefBasis, p: &MultiPoly) -> Result<MultiPoly> {
    let s = c.rank();
    if p.nvars() != s {
        return Err(Error::RingMismatch(format!("polynomial in {} variables for a basis of rank {s}", p.nvars())));
    }
    let subs: Vec<MultiPoly> = (0..s)
        .map(|j| {
            let mut lin = MultiPoly::zero(s);
            for (i, ci) in c.classes.iter().enumerate() {
                let mut e = vec![0; s];
                e[i] = 1;
                lin.add_term(e, rat(ci[j]));
            }
            lin
        })
        .collect();
    Ok(p.substitute(&subs))
}

/// The product ring `S` with `n_i = dim R_{c_i} - 1` and the bases used for `τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Companion {
    pub ring: ProductRing,
    /// `bases[i][k]` is the image of `x_{i,k}`.
    pub bases: Vec<Vec<Monomial>>,
}

pub fn companion_ring(r: &CoxRing, c: &NefBasis) -> Result<Companion> {
    if c.rank() != r.rank() {
        return Err(Error::RingMismatch(format!("nef basis of rank {} for a grading of rank {}", c.rank(), r.rank())));
    }
    let mut bases = Vec::new();
    for ci in &c.classes {
        let basis = toric_degree_slice(r, ci)?;
        if basis.is_empty() {
            return Err(Error::InvalidNefBasis(format!("{ci:?} has no sections")));
        }
        bases.push(basis);
    }
    let ring = ProductRing::new(bases.iter().map(|b| b.len() - 1).collect())?;
    Ok(Companion { ring, bases })
}

impl Companion {
    /// `τ` applied to a monomial of `S`.
    pub fn tau(&self, m: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        for &(v, e) in m.terms() {
            let (i, k) = self.ring.var_position(v);
            for _ in 0..e {
                out = out.mul(&self.bases[i][k]);
            }
        }
        out
    }
}

/// Image data of `τ` in one degree of `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauSlice {
    pub degree: DegreeVector,
    pub target_degree: DegreeVector,
    /// `dim R_{f(b)}`.
    pub target_size: usize,
    /// Distinct images of `S_b`.
    pub images: usize,
    pub surjective: bool,
    /// Images outside `J`; equals `H_J(f(b))` when surjective.
    pub surviving: u64,
}

pub fn tau_slice(ideal: &CoxIdeal, c: &NefBasis, companion: &Companion, b: &[i64]) -> Result<TauSlice> {
    let s = c.rank();
    if b.len() != s || b.iter().any(|&x| x < 0) || b[c.regular] < 1 {
        return Err(Error::Precondition(format!(
            "degree {b:?} must be nonnegative with coordinate {} at least 1",
            c.regular + 1
        )));
    }
    let target_degree = f_map(c, b);
    let target_size = toric_degree_slice(&ideal.ring, &target_degree)?.len();
    let images: HashSet<Monomial> = enumerate_degree_slice(&companion.ring, b).iter().map(|m| companion.tau(m)).collect();
    let surviving = images.iter().filter(|m| !ideal.contains(m)).count() as u64;
    Ok(TauSlice {
        degree: b.into(),
        target_degree,
        target_size,
        images: images.len(),
        surjective: images.len() == target_size,
        surviving,
    })
}

/// `{f(b) : b_i in {d_i, d_i + 1}}`.
pub fn zonotope(c: &NefBasis, d: &[i64]) -> BTreeSet<DegreeVector> {
    let ones = vec![1; d.len()];
    crate::stable::degree_box(d, &DegreeVector::from(d).add(&ones)).iter().map(|b| f_map(c, b)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricVerification {
    pub companion: Companion,
    /// `f# P`.
    pub pulled_back: MultiPoly,
    pub point: Option<PersistencePoint>,
    pub slices: Vec<TauSlice>,
    pub verdict: Verdict,
}

/// Decides `P_J = P` by checking `H_J` at the zonotope points `f(b)`.
///
/// Fails with [`Error::SurjectivityViolated`] if `τ` is not surjective at some vertex,
/// which means the regularity assertion for the nef basis is false.
pub fn verify_toric(
    ideal: &CoxIdeal,
    p: &MultiPoly,
    c: &NefBasis,
    a: &[i64],
    opts: &PersistenceOptions,
) -> Result<ToricVerification> {
    let companion = companion_ring(&ideal.ring, c)?;
    let q = f_sharp(c, p)?;
    if a.len() != c.rank() {
        return Err(Error::RingMismatch(format!("anchor {a:?} for rank {}", c.rank())));
    }
    if let Err(Error::NotHilbertPolynomial(why)) = check_admissible(&q, a, &companion.ring) {
        let verdict = Verdict { checked: Vec::new(), rejection: Some(Rejection::Inadmissible(why)) };
        return Ok(ToricVerification { companion, pulled_back: q, point: None, slices: Vec::new(), verdict });
    }
    let point = find_persistence_point(&q, a, &companion.ring, opts)?;
    let mut slices = Vec::new();
    let mut checked = Vec::new();
    for b in point.box_points() {
        let t = tau_slice(ideal, c, &companion, &b)?;
        if !t.surjective {
            return Err(Error::SurjectivityViolated { degree: b.0, images: t.images, target: t.target_size });
        }
        checked.push(CheckedPoint { point: b.clone(), expected: q.eval_int(&b), actual: t.surviving });
        slices.push(t);
    }
    let rejection = checked.iter().find(|x| !x.matches()).cloned().map(Rejection::Mismatch);
    let verdict = Verdict { checked, rejection };
    Ok(ToricVerification { companion, pulled_back: q, point: Some(point), slices, verdict })
}
