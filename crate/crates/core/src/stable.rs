//! Strongly multistable and multilex monomial sets and ideals.
//!
//! A set `M` of monomials of degree `a` is `x_i`-lex when, for every monomial `w`
//! in the variables outside block `i`, the block-`i` parts of the members of the
//! form `v * w` form an initial segment of `S_{a_i e_i}` in deglex order.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::ring::{block_slice, enumerate_degree_slice, minimalize, DegreeVector, Monomial, MonomialIdeal, ProductRing};

/// Monomials of a single multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSet {
    ring: ProductRing,
    degree: DegreeVector,
    members: BTreeSet<Monomial>,
}

impl MonomialSet {
    pub fn new(ring: ProductRing, degree: DegreeVector, members: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if degree.len() != ring.num_blocks() {
            return Err(Error::RingMismatch(format!("degree {degree} for {} blocks", ring.num_blocks())));
        }
        let members: BTreeSet<Monomial> = members.into_iter().collect();
        for m in &members {
            ring.check(m)?;
            if ring.degree(m) != degree {
                return Err(Error::MalformedMonomial(format!(
                    "{} has degree {}, expected {degree}",
                    ring.format_monomial(m),
                    ring.degree(m)
                )));
            }
        }
        Ok(MonomialSet { ring, degree, members })
    }

    /// The degree-`b` slice `I_b` of an ideal.
    pub fn of_ideal(ideal: &MonomialIdeal, b: &[i64]) -> Self {
        MonomialSet { ring: ideal.ring().clone(), degree: b.into(), members: ideal.slice(b).into_iter().collect() }
    }

    pub fn ring(&self) -> &ProductRing {
        &self.ring
    }

    pub fn degree(&self) -> &DegreeVector {
        &self.degree
    }

    pub fn members(&self) -> &BTreeSet<Monomial> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.members.contains(m)
    }

    /// Members in deglex-descending order.
    pub fn sorted(&self) -> Vec<Monomial> {
        let mut v: Vec<Monomial> = self.members.iter().cloned().collect();
        v.sort_by(|a, b| b.cmp_deglex(a));
        v
    }

    /// Groups members by their part outside block `i`; values are the block-`i` parts.
    fn fibers(&self, i: usize) -> BTreeMap<Monomial, BTreeSet<Monomial>> {
        let mut out: BTreeMap<Monomial, BTreeSet<Monomial>> = BTreeMap::new();
        for m in &self.members {
            let (inside, outside) = self.ring.split_block(m, i);
            out.entry(outside).or_default().insert(inside);
        }
        out
    }

    fn check_block(&self, i: usize) {
        assert!(i < self.ring.num_blocks(), "block index {i} out of range");
    }
}

/// Results of applying every exchange `x_{i,j} -> x_{i,k}`, `k < j`, to `m`.
fn exchanges<'a>(ring: &'a ProductRing, m: &'a Monomial) -> impl Iterator<Item = Monomial> + 'a {
    m.terms().iter().flat_map(move |&(v, _)| {
        let (i, j) = ring.var_position(v);
        let base = m.div_var(v).expect("variable divides its monomial");
        (0..j).map(move |k| base.mul_var(ring.var(i, k)))
    })
}

/// Exchange closure checked on the minimal generators, which suffices for ideals.
pub fn is_strongly_multistable(ideal: &MonomialIdeal) -> bool {
    ideal.generators().iter().all(|g| exchanges(ideal.ring(), g).all(|m| ideal.contains(&m)))
}

/// Exchange closure within a single degree slice.
pub fn is_strongly_multistable_set(set: &MonomialSet) -> bool {
    set.members.iter().all(|m| exchanges(&set.ring, m).all(|e| set.members.contains(&e)))
}

pub fn is_xi_lex(set: &MonomialSet, i: usize) -> bool {
    set.check_block(i);
    let lex = block_slice(&set.ring, i, set.degree[i] as u32);
    set.fibers(i).values().all(|fiber| lex[..fiber.len()].iter().all(|m| fiber.contains(m)))
}

pub fn is_multilex_set(set: &MonomialSet) -> bool {
    (0..set.ring.num_blocks()).all(|i| is_xi_lex(set, i))
}

/// Replaces every fiber over the complement of block `i` by the lex segment of the same size.
pub fn xi_lex(set: &MonomialSet, i: usize) -> MonomialSet {
    set.check_block(i);
    let lex = block_slice(&set.ring, i, set.degree[i] as u32);
    let members = set
        .fibers(i)
        .into_iter()
        .flat_map(|(outside, fiber)| lex[..fiber.len()].iter().map(|v| v.mul(&outside)).collect::<Vec<_>>())
        .collect();
    MonomialSet { ring: set.ring.clone(), degree: set.degree.clone(), members }
}

/// The output of [`multilex_slice`]. `sound` is false when the input was not strongly
/// multistable, in which case the output carries no guarantees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multilexified {
    pub set: MonomialSet,
    pub sound: bool,
}

/// Applies `xi_lex` for `i = 1, ..., s` in turn.
pub fn multilex_slice(set: &MonomialSet) -> Multilexified {
    let sound = is_strongly_multistable_set(set);
    let out = (0..set.ring.num_blocks()).fold(set.clone(), |acc, i| xi_lex(&acc, i));
    Multilexified { set: out, sound }
}

/// All degrees `c` with `0 <= c <= bound` componentwise, in lexicographic order.
pub fn degree_box(lower: &[i64], upper: &[i64]) -> Vec<DegreeVector> {
    let mut out = vec![DegreeVector(Vec::new())];
    for (&lo, &hi) in lower.iter().zip(upper) {
        out = out.into_iter().flat_map(|d| (lo..=hi).map(move |x| DegreeVector([&d.0[..], &[x]].concat()))).collect();
    }
    out
}

/// Checks that every slice `I_c` with `c <= bound` is multilex.
pub fn is_multilex_ideal_up_to(ideal: &MonomialIdeal, bound: &[i64]) -> bool {
    let zero = vec![0; bound.len()];
    degree_box(&zero, bound).iter().all(|c| is_multilex_set(&MonomialSet::of_ideal(ideal, c)))
}

/// Checks slices up to `generation_bound + (1, ..., 1)`.
pub fn is_multilex_ideal(ideal: &MonomialIdeal) -> bool {
    let bound = ideal.generation_bound();
    let ones = vec![1; bound.len()];
    is_multilex_ideal_up_to(ideal, &bound.add(&ones))
}

/// The ideal generated by the multilexified slices of `ideal` in all degrees `<= bound`.
///
/// Its Hilbert function agrees with that of `ideal` in every degree `<= bound`; this is
/// verified before returning.
pub fn multilex_ideal(ideal: &MonomialIdeal, bound: &[i64]) -> Result<MonomialIdeal> {
    let ring = ideal.ring();
    if bound.len() != ring.num_blocks() {
        return Err(Error::RingMismatch(format!("bound {bound:?} for {} blocks", ring.num_blocks())));
    }
    if !is_strongly_multistable(ideal) {
        return Err(Error::NotStronglyMultistable);
    }
    let gb = ideal.generation_bound();
    if !DegreeVector::from(bound).dominates(&gb) {
        return Err(Error::Precondition(format!("bound {bound:?} is below the generation bound {gb}")));
    }
    let zero = vec![0; bound.len()];
    let degrees = degree_box(&zero, bound);
    let mut slices: BTreeMap<DegreeVector, MonomialSet> = BTreeMap::new();
    for c in &degrees {
        slices.insert(c.clone(), multilex_slice(&MonomialSet::of_ideal(ideal, c)).set);
    }
    let mut gens = Vec::new();
    for c in &degrees {
        for m in slices[c].members() {
            let from_below = m.terms().iter().any(|&(v, _)| {
                let mut lower = c.clone();
                lower.0[ring.var_position(v).0] -= 1;
                slices.get(&lower).is_some_and(|s| s.contains(&m.div_var(v).unwrap()))
            });
            if !from_below {
                gens.push(m.clone());
            }
        }
    }
    let out = MonomialIdeal::new(ring.clone(), minimalize(gens))?;
    for c in &degrees {
        let got: BTreeSet<Monomial> = out.slice(c).into_iter().collect();
        if &got != slices[c].members() {
            return Err(Error::Domain(format!("multilexified slices do not form an ideal in degree {c}")));
        }
    }
    Ok(out)
}

/// Complement of a set within its slice, deglex-descending.
pub fn complement(set: &MonomialSet) -> Vec<Monomial> {
    enumerate_degree_slice(&set.ring, &set.degree).into_iter().filter(|m| !set.contains(m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1p1() -> ProductRing {
        ProductRing::new(vec![1, 1]).unwrap()
    }

    fn ideal(ring: ProductRing, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_dense(ring, &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn p1p2p1_ideal() -> MonomialIdeal {
        let r = ProductRing::new(vec![1, 2, 1]).unwrap();
        ideal(
            r,
            &[&[0, 0, 1, 0, 0, 0, 0], &[1, 0, 0, 1, 0, 0, 0], &[1, 0, 0, 0, 1, 0, 0], &[0, 1, 0, 1, 0, 0, 0]],
        )
    }

    #[test]
    fn strong_multistability() {
        assert!(is_strongly_multistable(&ideal(p1p1(), &[&[1, 0, 0, 0], &[0, 1, 1, 0]])));
        assert!(!is_strongly_multistable(&ideal(p1p1(), &[&[0, 1, 0, 0]])));
        assert!(is_strongly_multistable(&MonomialIdeal::zero(p1p1())));
        assert!(is_strongly_multistable(&p1p2p1_ideal()));
    }

    #[test]
    fn multilex_ideals() {
        assert!(is_multilex_ideal(&ideal(p1p1(), &[&[1, 0, 0, 0], &[0, 1, 1, 0]])));
        assert!(is_multilex_ideal(&p1p2p1_ideal()));
        let set = MonomialSet::new(p1p1(), vec![1, 1].into(), [Monomial::from_dense(&[0, 1, 1, 0])]).unwrap();
        assert!(!is_multilex_set(&set));
    }

    #[test]
    fn xi_lex_moves_to_the_top() {
        let set = MonomialSet::new(p1p1(), vec![1, 1].into(), [Monomial::from_dense(&[0, 1, 1, 0])]).unwrap();
        let out = xi_lex(&set, 0);
        assert_eq!(out.sorted(), vec![Monomial::from_dense(&[1, 0, 1, 0])]);
        assert_eq!(xi_lex(&out, 0), out);
    }

    #[test]
    fn multilex_slice_flags_unstable_input() {
        let i = ideal(p1p1(), &[&[0, 1, 1, 0]]);
        let m = multilex_slice(&MonomialSet::of_ideal(&i, &[1, 1]));
        assert!(!m.sound);

        let i = ideal(p1p1(), &[&[1, 0, 0, 0], &[0, 1, 1, 0]]);
        let m = multilex_slice(&MonomialSet::of_ideal(&i, &[2, 2]));
        assert!(m.sound);
        assert_eq!(m.set.len(), 8);
        assert!(is_multilex_set(&m.set));
    }

    #[test]
    fn multilex_ideal_fixed_points_and_errors() {
        let i = ideal(p1p1(), &[&[1, 0, 0, 0], &[0, 1, 1, 0]]);
        assert_eq!(multilex_ideal(&i, &[3, 3]).unwrap(), i);
        assert_eq!(multilex_ideal(&p1p2p1_ideal(), &[2, 2, 2]).unwrap(), p1p2p1_ideal());
        assert_eq!(multilex_ideal(&i, &[0, 3]), Err(Error::Precondition("bound [0, 3] is below the generation bound (1,1)".into())));
        assert_eq!(multilex_ideal(&ideal(p1p1(), &[&[0, 1, 0, 0]]), &[2, 2]), Err(Error::NotStronglyMultistable));
    }

    #[test]
    fn multilex_ideal_of_a_stable_non_lex_ideal() {
        // (x0*y0, x0*y1, x1*y0) is strongly bistable; so is its multilex form.
        let r = ProductRing::new(vec![1, 2]).unwrap();
        let i = ideal(r, &[&[1, 0, 1, 0, 0], &[0, 1, 1, 0, 0], &[1, 0, 0, 1, 0], &[0, 0, 2, 0, 0]]);
        assert!(is_strongly_multistable(&i));
        let j = multilex_ideal(&i, &[3, 3]).unwrap();
        assert!(is_multilex_ideal_up_to(&j, &[3, 3]));
        for c in degree_box(&[0, 0], &[3, 3]) {
            assert_eq!(i.hilbert_function(&c), j.hilbert_function(&c), "degree {c}");
        }
    }
}
