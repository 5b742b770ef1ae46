//! Exact coefficient ring: rational functions in `q` with Laurent parameters.

mod laurent;
mod poly;
mod scalar;
mod text;

pub use laurent::LaurentQ;
pub use poly::PolyQ;
pub use scalar::{Scalar, UExp};

pub(crate) use laurent::rat;

use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QringError {
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("not invertible in this ring: {0}")]
    NotInvertible(String),
    #[error("denominator vanishes at q = {0}")]
    Pole(String),
    #[error("invalid specialization point: {0}")]
    BadPoint(String),
    #[error("no value supplied for parameter u{0}")]
    MissingParameter(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Parses `p/q` or an integer into a rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let d: num_bigint::BigInt = b.trim().parse().ok()?;
            if d == 0.into() {
                return None;
            }
            Some(BigRational::new(a.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}
