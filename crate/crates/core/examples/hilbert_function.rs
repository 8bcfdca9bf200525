//! Two ideals of P^3 x P^3 whose Hilbert functions agree on a box of four degrees
//! and still differ at (3,3).
//!
//! cargo run --example hilbert_function

use hilbert_persistence::persistence::interpolate_hilbert_polynomial;
use hilbert_persistence::{MonomialIdeal, ProductRing};

fn ideal(gens: &[&[(usize, usize, u32)]]) -> MonomialIdeal {
    let ring = ProductRing::new(vec![3, 3]).unwrap();
    let dense: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut e = vec![0; ring.num_vars()];
            for &(block, j, k) in *g {
                e[ring.var(block, j)] += k;
            }
            e
        })
        .collect();
    MonomialIdeal::from_dense(ring, &dense).unwrap()
}

fn main() {
    let (x, y) = (0, 1);
    let i = ideal(&[
        &[(x, 0, 1)],
        &[(x, 1, 1)],
        &[(y, 0, 1)],
        &[(y, 1, 2)],
        &[(x, 2, 1), (y, 1, 1)],
        &[(x, 2, 1), (y, 2, 3)],
    ]);
    let j = ideal(&[
        &[(x, 0, 1)],
        &[(y, 0, 1)],
        &[(x, 1, 1), (y, 1, 1)],
        &[(x, 1, 1), (y, 2, 1)],
        &[(x, 2, 1), (y, 1, 1)],
        &[(x, 2, 1), (y, 2, 1)],
        &[(y, 1, 3)],
        &[(y, 1, 2), (y, 2, 1)],
    ]);
    println!("I = {}", i.format_generators());
    println!("J = {}", j.format_generators());
    println!("b\tH_I\tH_J");
    for b in [[1, 3], [2, 3], [1, 4], [2, 4], [3, 3]] {
        println!("{b:?}\t{}\t{}", i.hilbert_function(&b), j.hilbert_function(&b));
    }
    println!("P_I = {}", interpolate_hilbert_polynomial(&i, &[1, 3]).unwrap());
    println!("P_J = {}", interpolate_hilbert_polynomial(&j, &[1, 3]).unwrap());
}
