//! Exact verification engine for trigonometric Lie algebras, their covariant
//! realizations, the associated vacuum modules and the level-one Fock
//! realization.
//!
//! All arithmetic is exact over `Z[q, q^{-1}]` and its extensions; see
//! [`qring::Scalar`].

pub mod fock;
pub mod liealg;
pub mod lin;
pub mod qring;
pub mod rank;
pub mod series;
pub mod suite;
pub mod vacuum;
