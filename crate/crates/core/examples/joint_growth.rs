//! An ideal of P^1 x P^2 whose Hilbert function never grows maximally in both
//! directions at once, although its Hilbert polynomial is still verified.
//!
//! cargo run --release --example joint_growth

use hilbert_persistence::macaulay::gotzmann_number;
use hilbert_persistence::persistence::{interpolate_hilbert_polynomial, simultaneous_growth_points, verify_polynomial};
use hilbert_persistence::poly::parse_poly;
use hilbert_persistence::{MonomialIdeal, PersistenceOptions, ProductRing};

fn main() {
    let ring = ProductRing::new(vec![1, 2]).unwrap();
    let i = MonomialIdeal::from_dense(ring, &[vec![0, 0, 2, 0, 0], vec![1, 0, 1, 0, 0], vec![1, 0, 0, 3, 0]]).unwrap();
    let p = interpolate_hilbert_polynomial(&i, &[2, 3]).unwrap();
    println!("P = {p}");

    for d2 in 3..=5 {
        let q = parse_poly(&format!("3*t1+{}", 2 * d2 + 1), 1).unwrap().to_std(0).unwrap();
        println!("t2 = {d2}: Gotzmann number of {q} is {}", gotzmann_number(&q).unwrap());
    }
    for d1 in 1..=3 {
        let q = parse_poly(&format!("2*t1+{}", 3 * d1 + 1), 1).unwrap().to_std(0).unwrap();
        println!("t1 = {d1}: Gotzmann number of {q} is {}", gotzmann_number(&q).unwrap());
    }

    let joint = simultaneous_growth_points(&i, &[1, 1], &[25, 25]).unwrap();
    println!("points in [1,25]^2 with maximal growth in both directions: {}", joint.len());

    let v = verify_polynomial(&i, &p, &[2, 3], &PersistenceOptions::default()).unwrap();
    println!("verified at d = {}: {}", v.point.unwrap().d, v.verdict.confirmed());
}
