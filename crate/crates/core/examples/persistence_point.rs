//! Deciding whether a polynomial is the Hilbert polynomial of an ideal by checking
//! the Hilbert function at 2^s points.
//!
//! cargo run --example persistence_point

use hilbert_persistence::persistence::{find_persistence_point, verify_polynomial};
use hilbert_persistence::poly::parse_poly;
use hilbert_persistence::{MonomialIdeal, PersistenceOptions, ProductRing};

fn main() {
    let ring = ProductRing::new(vec![1, 2, 1]).unwrap();
    let gens = [[0, 0, 1, 0, 0, 0, 0], [1, 0, 0, 1, 0, 0, 0], [1, 0, 0, 0, 1, 0, 0], [0, 1, 0, 1, 0, 0, 0]];
    let i = MonomialIdeal::from_dense(ring.clone(), &gens.map(|g| g.to_vec())).unwrap();
    let opts = PersistenceOptions::default();

    let p = parse_poly("t3+1", 3).unwrap();
    let point = find_persistence_point(&p, &[2, 2, 2], &ring, &opts).unwrap();
    println!("d = {}", point.d);

    for text in ["t3+1", "t3+2", "t3-5"] {
        let q = parse_poly(text, 3).unwrap();
        let v = verify_polynomial(&i, &q, &[2, 2, 2], &opts).unwrap();
        match &v.verdict.rejection {
            None => println!("{q}: confirmed at {} points", v.verdict.checked.len()),
            Some(r) => println!("{q}: rejected, {r}"),
        }
    }
}
