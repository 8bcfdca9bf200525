//! Persistence points and the `2^s`-point verification of Hilbert polynomials.
//!
//! Given a candidate `P` anchored at `a`, [`find_persistence_point`] chooses
//! `d = (d_1, ..., d_s)`: `d_1` bounds the Gotzmann numbers of the `F` table, and each
//! later `d_r` bounds the first degree from which every partial polynomial `P^r_b`
//! grows maximally. If `H_I` and `P` agree on the cube `{d_i, d_i + 1}^s`, then
//! `P_I = P`.

use std::collections::HashMap;
use std::fmt;

use num::ToPrimitive;

use crate::error::{Error, Result};
use crate::hilbpoly::{check_admissible, partial_poly, FTable};
use crate::macaulay::{crona_growth, eval_count, gotzmann_number};
use crate::poly::{MultiPoly, Rational, StdPoly};
use crate::ring::{DegreeVector, MonomialIdeal, ProductRing};
use crate::stable::degree_box;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PersistenceOptions {
    /// Use `d_1 = max(a_1, D + 1)` instead of `max(a_1, D)`.
    pub strict_gotzmann: bool,
    /// Upper end of every `c`-value scan; `None` uses `10 (a_r + deg Q + n_r + 10)`.
    pub scan_cap: Option<i64>,
}

/// Result of a `c`-value scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CValue {
    /// First `u >= max(a_floor, 1)` with maximal growth.
    pub c: i64,
    /// First `u >= 1` with maximal growth, ignoring the floor.
    pub unrestricted: i64,
}

pub fn default_scan_cap(q: &StdPoly, n: usize, a_floor: i64) -> i64 {
    10 * (a_floor + q.degree().unwrap_or(0) as i64 + n as i64 + 10)
}

fn grows_maximally(q: &StdPoly, n: usize, u: i64) -> Result<Option<bool>> {
    match (eval_count(q, u), eval_count(q, u + 1)) {
        (Some(x), Some(y)) => Ok(Some(crona_growth(x, n, u as u64)? == y)),
        _ => Ok(None),
    }
}

/// The least `u >= max(a_floor, 1)` with `Q(u+1) = binom(u+1+n, n) q(u) + r(u)^<u>`.
pub fn c_value(q: &StdPoly, n: usize, a_floor: i64, cap: Option<i64>) -> Result<CValue> {
    let start = a_floor.max(1);
    let cap = cap.unwrap_or_else(|| default_scan_cap(q, n, a_floor));
    let mut c = None;
    for u in start..=cap {
        match grows_maximally(q, n, u)? {
            Some(true) => {
                c = Some(u);
                break;
            }
            Some(false) => {}
            None => {
                return Err(Error::Domain(format!("{q} is not a nonnegative integer at {u} or {}", u + 1)));
            }
        }
    }
    let c = c.ok_or_else(|| Error::GrowthNotFound { poly: q.to_string(), n, from: start, cap })?;
    let mut unrestricted = c;
    for u in 1..start {
        if grows_maximally(q, n, u)? == Some(true) {
            unrestricted = u;
            break;
        }
    }
    Ok(CValue { c, unrestricted })
}

/// One `c`-value computed while choosing `d_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CScan {
    pub fixed: Vec<i64>,
    pub poly: StdPoly,
    pub value: CValue,
}

/// How `d_r` was chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisProvenance {
    /// One-based axis.
    pub axis: usize,
    pub anchor: i64,
    /// Gotzmann numbers of the `F` entries (first axis only).
    pub gotzmann: Vec<(Vec<u32>, usize)>,
    /// `c_r = max` of the scans (later axes only).
    pub c: Option<i64>,
    pub scans: Vec<CScan>,
    pub d: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PersistencePoint {
    pub d: DegreeVector,
    pub table: FTable,
    pub provenance: Vec<AxisProvenance>,
}

impl PersistencePoint {
    /// The `2^s` vertices `{b : b_i in {d_i, d_i + 1}}`, lexicographically ordered.
    pub fn box_points(&self) -> Vec<DegreeVector> {
        let ones = vec![1; self.d.len()];
        degree_box(&self.d, &self.d.add(&ones))
    }
}

/// The index set `𝓑_r`: `b_i in {d_i, d_i + 1}` for `i < r`, `0 <= b_i <= p_i` for `i > r`.
fn b_set(d: &[i64], maxdeg: &[u32], r: usize, s: usize) -> Vec<Vec<i64>> {
    let mut lower = Vec::with_capacity(s - 1);
    let mut upper = Vec::with_capacity(s - 1);
    for i in 1..=s {
        if i < r {
            lower.push(d[i - 1]);
            upper.push(d[i - 1] + 1);
        } else if i > r {
            lower.push(0);
            upper.push(maxdeg[i - 2] as i64);
        }
    }
    degree_box(&lower, &upper).into_iter().map(|v| v.0).collect()
}

pub fn find_persistence_point(
    p: &MultiPoly,
    a: &[i64],
    ring: &ProductRing,
    opts: &PersistenceOptions,
) -> Result<PersistencePoint> {
    let table = check_admissible(p, a, ring)?;
    let s = ring.num_blocks();
    let mut gotzmann = Vec::new();
    for (key, entry) in &table.entries {
        gotzmann.push((key.clone(), gotzmann_number(entry)?));
    }
    let max_d = gotzmann.iter().map(|g| g.1 as i64).max().unwrap_or(0);
    let d1 = a[0].max(max_d + i64::from(opts.strict_gotzmann));
    let mut d = vec![d1];
    let mut provenance = vec![AxisProvenance { axis: 1, anchor: a[0], gotzmann, c: None, scans: Vec::new(), d: d1 }];
    for r in 2..=s {
        let n = ring.blocks()[r - 1];
        let mut scans = Vec::new();
        for b in b_set(&d, &table.maxdeg, r, s) {
            let q = partial_poly(&table, r, &b)?.poly;
            let value = c_value(&q, n, a[r - 1], opts.scan_cap)?;
            scans.push(CScan { fixed: b, poly: q, value });
        }
        let c = scans.iter().map(|x| x.value.c).max().unwrap_or(a[r - 1].max(1));
        let dr = a[r - 1].max(c);
        d.push(dr);
        provenance.push(AxisProvenance { axis: r, anchor: a[r - 1], gotzmann: Vec::new(), c: Some(c), scans, d: dr });
    }
    Ok(PersistencePoint { d: DegreeVector(d), table, provenance })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckedPoint {
    pub point: DegreeVector,
    pub expected: Rational,
    pub actual: u64,
}

impl CheckedPoint {
    pub fn matches(&self) -> bool {
        self.expected.to_u64().is_some_and(|e| self.expected.is_integer() && e == self.actual)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// `H_I` and `P` differ at a point.
    Mismatch(CheckedPoint),
    /// `P` fails a necessary condition for Hilbert polynomials.
    Inadmissible(String),
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Mismatch(c) => {
                write!(f, "H{} = {} but P{} = {}", c.point, c.actual, c.point, c.expected)
            }
            Rejection::Inadmissible(why) => write!(f, "{why}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub checked: Vec<CheckedPoint>,
    pub rejection: Option<Rejection>,
}

impl Verdict {
    pub fn confirmed(&self) -> bool {
        self.rejection.is_none()
    }

    pub fn failing_point(&self) -> Option<&CheckedPoint> {
        match &self.rejection {
            Some(Rejection::Mismatch(c)) => Some(c),
            _ => None,
        }
    }

    fn from_points(checked: Vec<CheckedPoint>) -> Self {
        let rejection = checked.iter().find(|c| !c.matches()).cloned().map(Rejection::Mismatch);
        Verdict { checked, rejection }
    }
}

/// Compares `H_I` and `P` at the given points.
pub fn check_points(ideal: &MonomialIdeal, p: &MultiPoly, points: &[DegreeVector]) -> Result<Verdict> {
    if p.nvars() != ideal.ring().num_blocks() {
        return Err(Error::RingMismatch(format!(
            "polynomial in {} variables for a ring with {} blocks",
            p.nvars(),
            ideal.ring().num_blocks()
        )));
    }
    let checked = points
        .iter()
        .map(|b| CheckedPoint { point: b.clone(), expected: p.eval_int(b), actual: ideal.hilbert_function(b) })
        .collect();
    Ok(Verdict::from_points(checked))
}

/// Compares `H_I` and `P` on the `2^s` vertices at `point`.
pub fn check_box(ideal: &MonomialIdeal, p: &MultiPoly, point: &PersistencePoint) -> Result<Verdict> {
    check_points(ideal, p, &point.box_points())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    /// Absent when `P` was rejected before a point could be chosen.
    pub point: Option<PersistencePoint>,
    pub verdict: Verdict,
}

/// Decides `P_I = P`, assuming `a` bounds the generator degrees of the multilex
/// ideals with Hilbert polynomials `P_I` and `P`.
///
/// When some partial polynomial of `P` never grows maximally within the scan cap, `P`
/// is compared with `H_I` on `a + Π [0, max(p_i, n_i)]` instead; a mismatch there
/// rejects `P` without a persistence point.
pub fn verify_polynomial(
    ideal: &MonomialIdeal,
    p: &MultiPoly,
    a: &[i64],
    opts: &PersistenceOptions,
) -> Result<Verification> {
    let ring = ideal.ring();
    if a.len() != ring.num_blocks() || p.nvars() != ring.num_blocks() {
        return Err(Error::RingMismatch(format!(
            "anchor {a:?} and a polynomial in {} variables for {} blocks",
            p.nvars(),
            ring.num_blocks()
        )));
    }
    let gb = ideal.generation_bound();
    if !DegreeVector::from(a).dominates(&gb) {
        return Err(Error::Precondition(format!("anchor {a:?} is below the generation bound {gb}")));
    }
    if let Err(Error::NotHilbertPolynomial(why)) = check_admissible(p, a, ring) {
        let verdict = Verdict { checked: Vec::new(), rejection: Some(Rejection::Inadmissible(why)) };
        return Ok(Verification { point: None, verdict });
    }
    let point = match find_persistence_point(p, a, ring, opts) {
        Ok(point) => point,
        Err(err @ Error::GrowthNotFound { .. }) => {
            // H_I = P_I from a on, so a mismatch on a full interpolation grid rejects P.
            let upper: Vec<i64> =
                a.iter().zip(p.maxdeg()).zip(ring.blocks()).map(|((&x, pd), &n)| x + (pd as i64).max(n as i64)).collect();
            let verdict = check_points(ideal, p, &degree_box(a, &upper))?;
            if verdict.confirmed() {
                return Err(err);
            }
            return Ok(Verification { point: None, verdict });
        }
        Err(err) => return Err(err),
    };
    let verdict = check_box(ideal, p, &point)?;
    Ok(Verification { point: Some(point), verdict })
}

/// Interpolates `H_I` on `a + Π [0, n_i]` and checks the result on the grid shifted by
/// `(1, ..., 1)`.
pub fn interpolate_hilbert_polynomial(ideal: &MonomialIdeal, a: &[i64]) -> Result<MultiPoly> {
    let ring = ideal.ring();
    let s = ring.num_blocks();
    if a.len() != s {
        return Err(Error::RingMismatch(format!("anchor {a:?} for {s} blocks")));
    }
    let gb = ideal.generation_bound();
    if !DegreeVector::from(a).dominates(&gb) {
        return Err(Error::Precondition(format!("anchor {a:?} is below the generation bound {gb}")));
    }
    let n: Vec<i64> = ring.blocks().iter().map(|&x| x as i64).collect();
    let zero = vec![0; s];
    let offsets = degree_box(&zero, &n);
    let dims: Vec<usize> = n.iter().map(|&x| x as usize + 1).collect();
    let index = |k: &[i64]| k.iter().zip(&dims).fold(0usize, |acc, (&x, &m)| acc * m + x as usize);
    let mut diffs: Vec<Rational> = offsets
        .iter()
        .map(|k| Rational::from_integer(ideal.hilbert_function(&DegreeVector::from(a).add(k)).into()))
        .collect();
    // Forward differences along each axis, in place from the top down.
    for axis in 0..s {
        for step in 1..dims[axis] {
            for k in offsets.iter().rev() {
                if (k[axis] as usize) < step {
                    continue;
                }
                let mut prev = k.0.clone();
                prev[axis] -= 1;
                let v = diffs[index(&prev)].clone();
                diffs[index(k)] -= v;
            }
        }
    }
    let mut p = MultiPoly::zero(s);
    for k in &offsets {
        let c = &diffs[index(k)];
        if num::Zero::is_zero(c) {
            continue;
        }
        let mut term = MultiPoly::constant(s, c.clone());
        for i in 0..s {
            term = &term * &StdPoly::binomial(-a[i], k[i] as u32).to_multi(s, i);
        }
        p = &p + &term;
    }
    let shifted = DegreeVector::from(a).add(&vec![1; s]);
    for k in &offsets {
        let b = shifted.add(k);
        let actual = ideal.hilbert_function(&b);
        let expected = p.eval_int(&b);
        if expected != Rational::from_integer(actual.into()) {
            return Err(Error::InconsistentAnchor { anchor: a.to_vec(), point: b.0, expected: expected.to_string(), actual });
        }
    }
    Ok(p)
}

/// Points `d` in the box `[lower, upper]` at which `H_I` grows maximally in every
/// direction at once: `H_I(d + e_i) = H_I(d)^<d_i>_i` for all `i`.
pub fn simultaneous_growth_points(ideal: &MonomialIdeal, lower: &[i64], upper: &[i64]) -> Result<Vec<DegreeVector>> {
    let ring = ideal.ring();
    let lower: Vec<i64> = lower.iter().map(|&x| x.max(1)).collect();
    let mut cache: HashMap<DegreeVector, u64> = HashMap::new();
    let mut h = |b: DegreeVector| *cache.entry(b).or_insert_with_key(|b| ideal.hilbert_function(b));
    let mut out = Vec::new();
    for d in degree_box(&lower, upper) {
        let value = h(d.clone());
        let mut all = true;
        for (i, &n) in ring.blocks().iter().enumerate() {
            let next = h(d.add(&DegreeVector::unit(d.len(), i)));
            if crona_growth(value, n, d[i] as u64)? != next {
                all = false;
                break;
            }
        }
        if all {
            out.push(d);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rat};

    fn p1p2p1_ideal() -> MonomialIdeal {
        let r = ProductRing::new(vec![1, 2, 1]).unwrap();
        let gens = [[0, 0, 1, 0, 0, 0, 0], [1, 0, 0, 1, 0, 0, 0], [1, 0, 0, 0, 1, 0, 0], [0, 1, 0, 1, 0, 0, 0]];
        MonomialIdeal::from_dense(r, &gens.map(|g| g.to_vec())).unwrap()
    }

    #[test]
    fn c_values() {
        let t1 = StdPoly::from_ints(&[1, 1]);
        assert_eq!(c_value(&t1, 1, 1, None).unwrap(), CValue { c: 1, unrestricted: 1 });
        assert_eq!(c_value(&t1, 2, 2, None).unwrap(), CValue { c: 2, unrestricted: 1 });
        assert_eq!(c_value(&StdPoly::from_ints(&[2]), 1, 0, None).unwrap().c, 2);
        assert_eq!(c_value(&StdPoly::from_ints(&[2]), 2, 0, None).unwrap().c, 2);
        assert_eq!(c_value(&StdPoly::zero(), 2, 3, None).unwrap().c, 3);
        assert_eq!(c_value(&StdPoly::zero(), 2, 0, None).unwrap().c, 1);
        assert!(matches!(c_value(&StdPoly::from_ints(&[-1]), 1, 1, None), Err(Error::Domain(_))));
    }

    #[test]
    fn constant_c_values_are_bounded() {
        for k in 0..12 {
            for n in 1..4 {
                let c = c_value(&StdPoly::from_ints(&[k]), n, 0, None).unwrap().c;
                assert!(c <= k + 1, "k={k} n={n} c={c}");
            }
        }
    }

    #[test]
    fn growth_not_found_past_the_cap() {
        let q = StdPoly::from_ints(&[31, 2]);
        assert!(matches!(c_value(&q, 2, 3, Some(10)), Err(Error::GrowthNotFound { .. })));
        assert!(c_value(&q, 2, 3, None).is_ok());
    }

    #[test]
    fn p1p2p1_point_and_box() {
        let ring = ProductRing::new(vec![1, 2, 1]).unwrap();
        let p = parse_poly("t3+1", 3).unwrap();
        let pt = find_persistence_point(&p, &[2, 2, 2], &ring, &PersistenceOptions::default()).unwrap();
        assert_eq!(pt.d.0, vec![2, 2, 2]);
        assert_eq!(pt.box_points().len(), 8);
        let v = check_box(&p1p2p1_ideal(), &p, &pt).unwrap();
        assert!(v.confirmed());
        assert_eq!(v.checked.len(), 8);

        let strict = PersistenceOptions { strict_gotzmann: true, ..Default::default() };
        assert_eq!(find_persistence_point(&p, &[2, 2, 2], &ring, &strict).unwrap().d.0, vec![3, 2, 2]);
    }

    #[test]
    fn perturbed_polynomial_is_rejected() {
        let p = parse_poly("t3+2", 3).unwrap();
        let v = verify_polynomial(&p1p2p1_ideal(), &p, &[2, 2, 2], &PersistenceOptions::default()).unwrap();
        let d = v.point.unwrap().d;
        assert_eq!(d.0, vec![3, 3, 2]);
        let fail = v.verdict.failing_point().unwrap();
        assert_eq!(fail.point, d);
        assert_eq!((fail.actual, fail.expected.clone()), (3, rat(4)));
    }

    #[test]
    fn polynomial_without_maximal_growth_is_rejected_on_the_grid() {
        // Along t2 at d1 = 2 the partial polynomial 2*t + 1 never grows maximally in P^1.
        let ideal = MonomialIdeal::zero(ProductRing::new(vec![1, 1]).unwrap());
        let p = parse_poly("t1+2*t2-1", 2).unwrap();
        let v = verify_polynomial(&ideal, &p, &[2, 2], &PersistenceOptions::default()).unwrap();
        assert!(v.point.is_none());
        assert_eq!(v.verdict.checked.len(), 4);
        let fail = v.verdict.failing_point().unwrap();
        assert_eq!((fail.point.0.clone(), fail.actual, fail.expected.clone()), (vec![2, 2], 9, rat(5)));
    }

    #[test]
    fn inadmissible_polynomial_is_rejected_without_a_point() {
        let p = parse_poly("t3-5", 3).unwrap();
        let v = verify_polynomial(&p1p2p1_ideal(), &p, &[2, 2, 2], &PersistenceOptions::default()).unwrap();
        assert!(v.point.is_none());
        assert!(matches!(v.verdict.rejection, Some(Rejection::Inadmissible(_))));
    }

    #[test]
    fn single_block_reduces_to_gotzmann() {
        let ring = ProductRing::new(vec![1]).unwrap();
        let p = parse_poly("t1+1", 1).unwrap();
        let pt = find_persistence_point(&p, &[1], &ring, &PersistenceOptions::default()).unwrap();
        assert_eq!(pt.d.0, vec![1]);
        let v = verify_polynomial(&MonomialIdeal::zero(ring), &p, &[1], &PersistenceOptions::default()).unwrap();
        assert!(v.verdict.confirmed());
    }

    #[test]
    fn hirzebruch_lift_has_constant_polynomial() {
        let ring = ProductRing::new(vec![1, 1]).unwrap();
        let i = MonomialIdeal::from_dense(ring, &[vec![1, 0, 0, 0], vec![0, 1, 1, 0]]).unwrap();
        assert_eq!(interpolate_hilbert_polynomial(&i, &[2, 2]).unwrap(), parse_poly("1", 2).unwrap());
        let v = verify_polynomial(&i, &parse_poly("1", 2).unwrap(), &[2, 2], &PersistenceOptions::default()).unwrap();
        assert!(v.verdict.confirmed());
    }

    #[test]
    fn interpolation_of_zero_ideal() {
        let ring = ProductRing::new(vec![2]).unwrap();
        let p = interpolate_hilbert_polynomial(&MonomialIdeal::zero(ring), &[2]).unwrap();
        assert_eq!(p, parse_poly("(t1+2)*(t1+1)/2", 1).unwrap());
    }

    #[test]
    fn interpolation_detects_a_low_anchor() {
        // (x0^2, x1^2) in P^1 x P^1 vanishes from degree (3, *) on.
        let ring = ProductRing::new(vec![1, 1]).unwrap();
        let i = MonomialIdeal::from_dense(ring, &[vec![2, 0, 0, 0], vec![0, 2, 0, 0]]).unwrap();
        assert!(matches!(interpolate_hilbert_polynomial(&i, &[2, 0]), Err(Error::InconsistentAnchor { .. })));
        assert_eq!(interpolate_hilbert_polynomial(&i, &[3, 0]).unwrap(), MultiPoly::zero(2));
    }
}
