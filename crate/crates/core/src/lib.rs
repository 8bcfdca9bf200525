//! Exact computation of multigraded Hilbert functions and Hilbert polynomials
//! of monomial ideals, for Cox rings of products of projective spaces and of
//! smooth projective toric varieties.
//!
//! The central result implemented here is a persistence theorem: for an ideal
//! `I` in the Cox ring of `P^{n_1} x ... x P^{n_s}` and a candidate polynomial
//! `P`, there is a point `d` such that agreement of `H_I` and `P` on the `2^s`
//! vertices of the unit cube at `d` proves `P_I = P`. See
//! [`persistence::verify_polynomial`] and [`toric::verify_toric`].
//!
//! All arithmetic is exact: Hilbert values are machine integers with checked
//! intermediate products, polynomial coefficients are big rationals.

pub mod cli;
pub mod error;
pub mod hilbpoly;
pub mod macaulay;
pub mod manifest;
pub mod poly;
pub mod persistence;
pub mod ring;
pub mod stable;
pub mod stanley;
pub mod toric;

pub use error::{Error, Result};
pub use hilbpoly::{FTable, PartialPoly};
pub use macaulay::{CronaDivision, GotzmannRep, MacaulayRep};
pub use persistence::{PersistenceOptions, PersistencePoint, Verdict};
pub use poly::{MultiPoly, StdPoly};
pub use ring::{DegreeVector, Monomial, MonomialIdeal, ProductRing};
pub use stable::MonomialSet;
pub use stanley::{PartialDecomposition, StanleyPair};
pub use toric::{CoxIdeal, CoxRing, NefBasis};
