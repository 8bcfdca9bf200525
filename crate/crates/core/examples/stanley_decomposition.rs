//! Partial Stanley decomposition of a strongly multistable ideal of P^1 x P^2 x P^1.
//!
//! cargo run --example stanley_decomposition

use hilbert_persistence::stanley::{decomposition_hilbert, decomposition_polynomial, partial_decomposition};
use hilbert_persistence::{MonomialIdeal, ProductRing};

fn main() {
    let ring = ProductRing::new(vec![1, 2, 1]).unwrap();
    let gens = [[0, 0, 1, 0, 0, 0, 0], [1, 0, 0, 1, 0, 0, 0], [1, 0, 0, 0, 1, 0, 0], [0, 1, 0, 1, 0, 0, 0]];
    let i = MonomialIdeal::from_dense(ring.clone(), &gens.map(|g| g.to_vec())).unwrap();
    let d = partial_decomposition(&i, &[2, 2, 2]).unwrap();
    println!("I = {}", i.format_generators());
    for pair in d.pairs() {
        println!("{}\tsuffix starts {:?}", ring.format_monomial(&pair.base), pair.suffix_starts);
    }
    for b in [[2, 2, 2], [3, 4, 5]] {
        println!("H{b:?} = {} (direct {})", decomposition_hilbert(&d, &b).unwrap(), i.hilbert_function(&b));
    }
    println!("P = {}", decomposition_polynomial(&d));
}
