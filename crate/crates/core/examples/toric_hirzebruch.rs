//! The Hirzebruch surface H_1: degree slices, the companion product ring and a
//! verified Hilbert polynomial.
//!
//! cargo run --example toric_hirzebruch

use hilbert_persistence::poly::parse_poly;
use hilbert_persistence::toric::{companion_ring, kleinschmidt_cox, toric_degree_slice, verify_toric, KleinschmidtSpec};
use hilbert_persistence::{CoxIdeal, CoxRing, NefBasis, PersistenceOptions};

fn main() {
    let r = CoxRing::new(vec![vec![1, 0], vec![-1, 1], vec![1, 0], vec![0, 1]]).unwrap();
    for b in [[1, 0], [0, 1], [2, 1]] {
        let slice = toric_degree_slice(&r, &b).unwrap();
        let names: Vec<String> = slice.iter().map(|m| r.format_monomial(m)).collect();
        println!("R{b:?} = {{{}}}", names.join(", "));
    }

    let c = NefBasis::standard(2);
    println!("companion blocks {:?}", companion_ring(&r, &c).unwrap().ring.blocks());

    let j = CoxIdeal::from_dense(r, &[vec![1, 0, 0, 0]]).unwrap();
    let p = parse_poly("t2+1", 2).unwrap();
    let v = verify_toric(&j, &p, &c, &[2, 2], &PersistenceOptions::default()).unwrap();
    for t in &v.slices {
        println!("b = {}: H = {}, surjective {}", t.degree, t.surviving, t.surjective);
    }
    println!("P_J = {p}: {}", v.verdict.confirmed());

    let k = kleinschmidt_cox(&KleinschmidtSpec { d: 3, a: vec![1, 2] }).unwrap();
    println!("X_3(1,2) degrees {:?}", k.columns());
}
