//! Strong multistability and the multilex ideal with the same Hilbert function.
//!
//! cargo run --example multilex

use hilbert_persistence::stable::{is_multilex_ideal, is_strongly_multistable, multilex_ideal};
use hilbert_persistence::{MonomialIdeal, ProductRing};

fn main() {
    let ring = ProductRing::new(vec![1, 2]).unwrap();
    // (y0^2, x0*y0, x0*y1^3)
    let i = MonomialIdeal::from_dense(ring, &[vec![0, 0, 2, 0, 0], vec![1, 0, 1, 0, 0], vec![1, 0, 0, 3, 0]]).unwrap();
    println!("I = {}", i.format_generators());
    println!("strongly multistable: {}", is_strongly_multistable(&i));
    println!("multilex: {}", is_multilex_ideal(&i));

    let bound = [3, 4];
    let lex = multilex_ideal(&i, &bound).unwrap();
    println!("multilex ideal up to {bound:?}: {}", lex.format_generators());
    for b in [[1, 1], [2, 3], [3, 4]] {
        println!("H{b:?}: {} vs {}", i.hilbert_function(&b), lex.hilbert_function(&b));
    }
}
