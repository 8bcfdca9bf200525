//! Invariants over the seeded corpus of strongly multistable ideals.

mod common;

use common::{lagrange, naive_hilbert};
use hilbert_persistence::persistence::{interpolate_hilbert_polynomial, verify_polynomial};
use hilbert_persistence::stable::{degree_box, is_multilex_ideal_up_to, is_strongly_multistable, multilex_ideal};
use hilbert_persistence::stanley::{decomposition_hilbert, decomposition_polynomial, partial_decomposition};
use hilbert_persistence::{MonomialIdeal, PersistenceOptions};

const SIZE: usize = 40;

fn anchor(ideal: &MonomialIdeal) -> Vec<i64> {
    ideal.generation_bound().0.iter().map(|&x| x.max(2)).collect()
}

#[test]
fn corpus_is_strongly_multistable() {
    for ideal in common::corpus(SIZE) {
        assert!(is_strongly_multistable(&ideal), "{}", ideal.format_generators());
    }
}

#[test]
fn hilbert_function_agrees_with_listing() {
    for ideal in common::corpus(SIZE) {
        let blocks = ideal.ring().blocks().to_vec();
        let gens = common::dense_generators(&ideal);
        for b in degree_box(&[0, 0], &[4, 4]) {
            assert_eq!(ideal.hilbert_function(&b), naive_hilbert(&blocks, &gens, &b));
        }
    }
}

#[test]
fn multilex_preserves_hilbert_function() {
    for ideal in common::corpus(SIZE) {
        let lex = multilex_ideal(&ideal, &[4, 4]).unwrap();
        assert!(is_multilex_ideal_up_to(&lex, &[4, 4]));
        for b in degree_box(&[0, 0], &[4, 4]) {
            assert_eq!(lex.hilbert_function(&b), ideal.hilbert_function(&b), "{} at {b}", ideal.format_generators());
        }
    }
}

#[test]
fn stanley_decomposition_counts() {
    for ideal in common::corpus(SIZE) {
        let a = anchor(&ideal);
        let d = partial_decomposition(&ideal, &a).unwrap();
        let upper: Vec<i64> = a.iter().map(|x| x + 2).collect();
        for b in degree_box(&a, &upper) {
            assert_eq!(decomposition_hilbert(&d, &b).unwrap(), ideal.hilbert_function(&b));
        }
        assert_eq!(decomposition_polynomial(&d), interpolate_hilbert_polynomial(&ideal, &a).unwrap());
    }
}

#[test]
fn interpolation_matches_lagrange() {
    for ideal in common::corpus(SIZE) {
        let a = anchor(&ideal);
        let deg: Vec<u32> = ideal.ring().blocks().iter().map(|&n| n as u32).collect();
        let oracle = lagrange(&a, &deg, |b| ideal.hilbert_function(b));
        assert_eq!(interpolate_hilbert_polynomial(&ideal, &a).unwrap(), oracle);
    }
}

#[test]
fn interpolated_polynomial_verifies() {
    for ideal in common::corpus(SIZE) {
        let a = anchor(&ideal);
        let p = interpolate_hilbert_polynomial(&ideal, &a).unwrap();
        let v = verify_polynomial(&ideal, &p, &a, &PersistenceOptions::default()).unwrap();
        assert!(v.verdict.confirmed(), "{} with {p}", ideal.format_generators());
    }
}
