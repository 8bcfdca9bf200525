//! The F table of a polynomial at an anchor and its partial polynomials.
//!
//! cargo run --example standard_decomposition

use hilbert_persistence::hilbpoly::{check_admissible, partial_poly, standard_decomposition};
use hilbert_persistence::poly::parse_poly;
use hilbert_persistence::ProductRing;

fn main() {
    let ring = ProductRing::new(vec![1, 2, 1]).unwrap();
    let p = parse_poly("t3+1", 3).unwrap();
    let f = standard_decomposition(&p, &[2, 2, 2], &ring).unwrap();
    for (key, entry) in &f.entries {
        println!("F{key:?} = {entry}");
    }
    for b in [[2, 0], [2, 1], [2, 2]] {
        println!("P^2_{b:?} = {}", partial_poly(&f, 2, &b).unwrap().poly);
    }
    println!("P^3_[2, 2] = {}", partial_poly(&f, 3, &[2, 2]).unwrap().poly);

    for text in ["t3-5", "t2^3"] {
        let q = parse_poly(text, 3).unwrap();
        match check_admissible(&q, &[2, 2, 2], &ring) {
            Ok(_) => println!("{q}: admissible"),
            Err(e) => println!("{q}: {e}"),
        }
    }
}
