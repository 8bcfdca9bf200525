//! A Picard rank 3 toric variety with a non-standard nef basis: the zonotope of
//! test degrees and the transported persistence check.
//!
//! cargo run --example toric_rank3

use hilbert_persistence::poly::parse_poly;
use hilbert_persistence::toric::{f_map, f_sharp, verify_toric, zonotope};
use hilbert_persistence::{CoxIdeal, CoxRing, NefBasis, PersistenceOptions};

fn main() {
    let cols = vec![vec![-1, 1, 0], vec![1, 0, 0], vec![-1, 1, 0], vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 1]];
    let names = (0..6).map(|k| format!("y{k}")).collect();
    let r = CoxRing::with_names(cols, names).unwrap();
    let c = NefBasis::new(vec![vec![-1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
    let j = CoxIdeal::from_dense(r, &[vec![0, 0, 0, 1, 0, 0], vec![2, 1, 0, 0, 0, 0], vec![1, 1, 1, 0, 0, 0]]).unwrap();
    println!("J = {}", j.format_generators());

    println!("f(2,2,2) = {}", f_map(&c, &[2, 2, 2]));
    let z: Vec<String> = zonotope(&c, &[2, 2, 2]).iter().map(|v| v.to_string()).collect();
    println!("zonotope: {}", z.join(" "));

    let p = parse_poly("t3+1", 3).unwrap();
    println!("f#P = {}", f_sharp(&c, &p).unwrap());
    let v = verify_toric(&j, &p, &c, &[2, 2, 2], &PersistenceOptions::default()).unwrap();
    for t in &v.slices {
        println!("{} -> {}: {}/{} images, H = {}", t.degree, t.target_degree, t.images, t.target_size, t.surviving);
    }
    println!("confirmed: {}", v.verdict.confirmed());
}
