//! Lie algebras: `gl(infinity)`, its affinization, the trigonometric algebras,
//! covariant algebras and the isomorphisms between them.

pub mod affine;
pub mod covariant;
pub mod dq;
pub mod gl;
pub mod iso;
pub mod jacobi;
pub mod trig;

use thiserror::Error;

pub use affine::{affine_bracket, AffElem};
pub use covariant::{cov_bracket, BaseAlg, CovElem, CovSetup, Group};
pub use gl::{gl_bracket, gl_form, GlElem};
pub use iso::{iso_check, IsoDictionary, IsoOutcome};
pub use trig::{trig_bracket, StructureFn, TrigElem, TrigKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("elements of different kinds: {0} and {1}")]
    KindMismatch(TrigKind, TrigKind),
    #[error("elements of different covariant algebras")]
    SetupMismatch,
    #[error("invalid covariant setup: {0}")]
    InvalidSetup(String),
    #[error("E_({0},{1}) is not in the even subalgebra")]
    NotInSubalgebra(i32, i32),
}
