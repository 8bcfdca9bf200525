//! Macaulay representations, the growth bound, Gotzmann numbers and Crona's bound.
//!
//! cargo run --example macaulay_growth

use hilbert_persistence::macaulay::{crona_growth, gotzmann_rep, macaulay_growth, macaulay_rep, persists_on};
use hilbert_persistence::poly::parse_poly;

fn main() {
    for (alpha, d) in [(6, 3), (5, 2), (100, 4)] {
        let rep = macaulay_rep(alpha, d).unwrap();
        println!("{alpha} in degree {d}: kappa = {:?}, growth {}", rep.kappas, macaulay_growth(alpha, d).unwrap());
    }

    for text in ["t1+1", "3*t1+2*3+1", "1/2*t1^2+3/2*t1+1"] {
        let p = parse_poly(text, 1).unwrap().to_std(0).unwrap();
        let rep = gotzmann_rep(&p).unwrap();
        let d = rep.number() as i64;
        println!(
            "P = {p}: D = {d}, a = {:?}, P(t+1) = P(t)^<t> on [D, D+10]: {}, at t = D-1: {}",
            rep.a,
            persists_on(&p, d..=d + 10),
            persists_on(&p, d - 1..=d - 1)
        );
    }

    // Growth of a slice of P^2 x P^m in degree b_1 = 3 with value 6.
    println!("Crona bound for 6 with n = 2, b = 3: {}", crona_growth(6, 2, 3).unwrap());
}
