//! Characteristic polynomials of automorphisms of hyperelliptic curves acting
//! on the Jacobian.
//!
//! [`theorem`] gives the closed forms in terms of the genus `g`, the order
//! `n` of the automorphism and the order `nbar` of the automorphism it
//! induces on the quotient line. [`oracle`] rebuilds the same polynomials
//! from fixed-point counts on explicit rotation models, and
//! [`oracle::verify_range`] checks the two against each other.

pub mod cli;
pub mod exactpoly;
pub mod numtheory;
pub mod oracle;
pub mod spectrum;
pub mod theorem;

pub use exactpoly::{Degree, Poly, PolyError};
pub use spectrum::CyclotomicProfile;
pub use theorem::{charpoly_cases, classify, CaseTag, CharPolyResult, Triple};
