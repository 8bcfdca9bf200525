#![allow(dead_code)]

use std::collections::BTreeSet;

use hilbert_persistence::poly::{MultiPoly, Rational};
use hilbert_persistence::{Monomial, MonomialIdeal, ProductRing};
use num::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x5eed_2024;

/// Binomial coefficients from Pascal's triangle, zero outside `0 <= k <= n`.
pub fn pascal(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    // Rows are cut at column k so the entries stay small.
    let k = k as usize;
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; (row.len() + 1).min(k + 1)];
        for j in 1..next.len() {
            next[j] = row[j - 1] + row.get(j).copied().unwrap_or(0);
        }
        row = next;
    }
    row[k]
}

/// All exponent vectors of length `len` summing to `deg`.
pub fn compositions(len: usize, deg: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return if deg == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=deg {
        for mut rest in compositions(len - 1, deg - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Dense exponent vectors of multidegree `b` in a product ring.
pub fn naive_slice(blocks: &[usize], b: &[i64]) -> Vec<Vec<u32>> {
    if b.iter().any(|&x| x < 0) {
        return Vec::new();
    }
    let mut out = vec![Vec::new()];
    for (&n, &d) in blocks.iter().zip(b) {
        let parts = compositions(n + 1, d as u32);
        out = out.into_iter().flat_map(|p: Vec<u32>| parts.iter().map(move |q| [&p[..], &q[..]].concat())).collect();
    }
    out
}

pub fn divides(g: &[u32], m: &[u32]) -> bool {
    g.iter().zip(m).all(|(a, b)| a <= b)
}

/// `dim (S/I)_b` by listing every monomial.
pub fn naive_hilbert(blocks: &[usize], gens: &[Vec<u32>], b: &[i64]) -> u64 {
    naive_slice(blocks, b).iter().filter(|m| !gens.iter().any(|g| divides(g, m))).count() as u64
}

pub fn dense_generators(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
    let n = ideal.ring().num_vars();
    ideal.generators().iter().map(|g| g.to_dense(n)).collect()
}

/// Tensor-product Lagrange interpolation of `values(a + k)` over `k in Π [0, deg_i]`.
pub fn lagrange(a: &[i64], deg: &[u32], values: impl Fn(&[i64]) -> u64) -> MultiPoly {
    let s = a.len();
    let mut grid = vec![Vec::new()];
    for &d in deg {
        grid = grid.into_iter().flat_map(|p: Vec<i64>| (0..=d as i64).map(move |x| [&p[..], &[x]].concat())).collect();
    }
    let mut total = MultiPoly::zero(s);
    for k in &grid {
        let point: Vec<i64> = a.iter().zip(k).map(|(x, y)| x + y).collect();
        let mut basis = MultiPoly::constant(s, Rational::from_integer(values(&point).into()));
        for i in 0..s {
            for j in 0..=deg[i] as i64 {
                if j == k[i] {
                    continue;
                }
                // (t_i - (a_i + j)) / (k_i - j)
                let mut lin = MultiPoly::var(s, i);
                lin.add_term(vec![0; s], Rational::from_integer((-(a[i] + j)).into()));
                let scale = Rational::one() / Rational::from_integer((k[i] - j).into());
                basis = &basis * &lin.scale(&scale);
            }
        }
        total = &total + &basis;
    }
    total
}

/// Every monomial of the same multidegree reachable by moving exponent to earlier
/// variables of the same block.
fn borel_closure(ring: &ProductRing, m: &Monomial) -> BTreeSet<Monomial> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if !seen.insert(x.clone()) {
            continue;
        }
        for &(v, _) in x.terms() {
            let (i, j) = ring.var_position(v);
            for k in 0..j {
                let y = x.div_var(v).unwrap().mul_var(ring.var(i, k));
                stack.push(y);
            }
        }
    }
    seen
}

fn random_monomial(rng: &mut ChaCha8Rng, ring: &ProductRing, max_deg: &[u32]) -> Monomial {
    loop {
        let mut e = vec![0u32; ring.num_vars()];
        for (i, &n) in ring.blocks().iter().enumerate() {
            let d = rng.gen_range(0..=max_deg[i]);
            for _ in 0..d {
                e[ring.var(i, rng.gen_range(0..=n))] += 1;
            }
        }
        if e.iter().any(|&x| x > 0) {
            return Monomial::from_dense(&e);
        }
    }
}

/// A strongly multistable ideal: the Borel closure of 1 to 3 random monomials.
pub fn random_stable_ideal(rng: &mut ChaCha8Rng, ring: &ProductRing, max_deg: &[u32]) -> MonomialIdeal {
    let count = rng.gen_range(1..=3);
    let mut gens = BTreeSet::new();
    for _ in 0..count {
        let m = random_monomial(rng, ring, max_deg);
        gens.extend(borel_closure(ring, &m));
    }
    MonomialIdeal::new(ring.clone(), gens).unwrap()
}

/// The seeded corpus: alternating ideals of P^1 x P^1 and P^1 x P^2 with generators
/// in degrees at most (3,3).
pub fn corpus(size: usize) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let rings = [ProductRing::new(vec![1, 1]).unwrap(), ProductRing::new(vec![1, 2]).unwrap()];
    (0..size).map(|k| random_stable_ideal(&mut rng, &rings[k % 2], &[3, 3])).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
