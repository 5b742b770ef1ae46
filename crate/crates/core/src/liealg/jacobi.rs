//! Generic skew-symmetry and Jacobi checks.

use super::affine::{affine_bracket, AffElem};
use super::covariant::{cov_bracket, CovElem};
use super::gl::{gl_bracket, GlElem};
use super::trig::{trig_bracket_with, StructureFn, TrigElem};
use super::LieError;

/// A Lie bracket on some element type.
pub trait LieBracket {
    type Elem: Clone;
    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, LieError>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

/// Trigonometric algebra bracket with a selectable structure function.
#[derive(Clone, Copy, Debug, Default)]
pub struct TrigCtx {
    pub structure: StructureFn,
}

impl LieBracket for TrigCtx {
    type Elem = TrigElem;
    fn bracket(&self, a: &TrigElem, b: &TrigElem) -> Result<TrigElem, LieError> {
        trig_bracket_with(a, b, self.structure)
    }
    fn add(&self, a: &TrigElem, b: &TrigElem) -> TrigElem {
        a.add(b)
    }
    fn is_zero(&self, a: &TrigElem) -> bool {
        a.is_zero()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CovCtx;

impl LieBracket for CovCtx {
    type Elem = CovElem;
    fn bracket(&self, a: &CovElem, b: &CovElem) -> Result<CovElem, LieError> {
        cov_bracket(a, b)
    }
    fn add(&self, a: &CovElem, b: &CovElem) -> CovElem {
        a.add(b)
    }
    fn is_zero(&self, a: &CovElem) -> bool {
        a.is_zero()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct GlCtx;

impl LieBracket for GlCtx {
    type Elem = GlElem;
    fn bracket(&self, a: &GlElem, b: &GlElem) -> Result<GlElem, LieError> {
        Ok(gl_bracket(a, b))
    }
    fn add(&self, a: &GlElem, b: &GlElem) -> GlElem {
        a.add(b)
    }
    fn is_zero(&self, a: &GlElem) -> bool {
        a.is_zero()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AffCtx;

impl LieBracket for AffCtx {
    type Elem = AffElem;
    fn bracket(&self, a: &AffElem, b: &AffElem) -> Result<AffElem, LieError> {
        Ok(affine_bracket(a, b))
    }
    fn add(&self, a: &AffElem, b: &AffElem) -> AffElem {
        a.add(b)
    }
    fn is_zero(&self, a: &AffElem) -> bool {
        a.is_zero()
    }
}

/// `[x,y] + [y,x]`; zero for a skew bracket.
pub fn skew_residual<C: LieBracket>(
    ctx: &C,
    x: &C::Elem,
    y: &C::Elem,
) -> Result<C::Elem, LieError> {
    Ok(ctx.add(&ctx.bracket(x, y)?, &ctx.bracket(y, x)?))
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`; zero when the Jacobi identity holds.
pub fn jacobi_residual<C: LieBracket>(
    ctx: &C,
    x: &C::Elem,
    y: &C::Elem,
    z: &C::Elem,
) -> Result<C::Elem, LieError> {
    let a = ctx.bracket(x, &ctx.bracket(y, z)?)?;
    let b = ctx.bracket(y, &ctx.bracket(z, x)?)?;
    let c = ctx.bracket(z, &ctx.bracket(x, y)?)?;
    Ok(ctx.add(&ctx.add(&a, &b), &c))
}

/// `None` if the Jacobi identity holds on the triple, otherwise the residual.
pub fn jacobi_check<C: LieBracket>(
    ctx: &C,
    x: &C::Elem,
    y: &C::Elem,
    z: &C::Elem,
) -> Result<Option<C::Elem>, LieError> {
    let r = jacobi_residual(ctx, x, y, z)?;
    Ok((!ctx.is_zero(&r)).then_some(r))
}

/// `None` if `[x,y] = -[y,x]`, otherwise the residual.
pub fn skew_check<C: LieBracket>(
    ctx: &C,
    x: &C::Elem,
    y: &C::Elem,
) -> Result<Option<C::Elem>, LieError> {
    let r = skew_residual(ctx, x, y)?;
    Ok((!ctx.is_zero(&r)).then_some(r))
}
