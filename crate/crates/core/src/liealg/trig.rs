//! The trigonometric (sine) algebra and its three twisted subalgebras.
//!
//! Everything is expressed with the formal symbol `q`; the sine factor
//! `2i sin(hbar s)` becomes `q^s - q^{-s}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::LieError;
use crate::lin::Lin;
use crate::qring::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TrigKind {
    A,
    B,
    C,
    D,
}

impl TrigKind {
    pub const ALL: [TrigKind; 4] = [TrigKind::A, TrigKind::B, TrigKind::C, TrigKind::D];
}

impl fmt::Display for TrigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Selects the structure function used by the bracket.
///
/// `Cosine` replaces `q^s - q^{-s}` by `q^s + q^{-s}`; it exists only to
/// demonstrate that the checks reject a wrong algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum StructureFn {
    #[default]
    Sine,
    Cosine,
}

impl StructureFn {
    fn eval(self, s: i32) -> Scalar {
        match self {
            StructureFn::Sine => Scalar::sin_bracket(s),
            StructureFn::Cosine => &Scalar::q_pow(s) + &Scalar::q_pow(-s),
        }
    }
}

/// Element of a trigonometric algebra: generators `X_{α,m}` in canonical form
/// plus a multiple of the central element `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigElem {
    pub kind: TrigKind,
    pub terms: Lin<(i32, i32)>,
    pub central: Scalar,
}

fn sign(m: i32) -> i64 {
    if m.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Rewrites `X_{α,m}` in terms of a canonical generator.
///
/// Returns the factor and canonical label, or `None` when the generator is zero.
/// Canonical labels: all for `A`; `α ≥ 1`, or `α = 0` with `m` odd, for `B`, `C`;
/// `α ≥ 1` for `D`.
pub fn canonical(kind: TrigKind, alpha: i32, m: i32) -> Option<(Scalar, (i32, i32))> {
    match kind {
        TrigKind::A => Some((Scalar::one(), (alpha, m))),
        TrigKind::B | TrigKind::C if alpha == 0 => {
            (m.rem_euclid(2) == 1).then(|| (Scalar::one(), (0, m)))
        }
        TrigKind::D if alpha == 0 => None,
        _ if alpha > 0 => Some((Scalar::one(), (alpha, m))),
        TrigKind::B => Some((Scalar::from_int(-sign(m)), (-alpha, m))),
        TrigKind::C => Some((
            Scalar::q_pow(2 * alpha).scale_rational(&crate::qring::rat(-sign(m))),
            (-alpha, m),
        )),
        TrigKind::D => Some((-Scalar::q_pow(2 * alpha), (-alpha, m))),
    }
}

impl TrigElem {
    pub fn zero(kind: TrigKind) -> Self {
        Self {
            kind,
            terms: Lin::zero(),
            central: Scalar::zero(),
        }
    }

    /// `X_{α,m}`, rewritten canonically.
    pub fn generator(kind: TrigKind, alpha: i32, m: i32) -> Self {
        let mut x = Self::zero(kind);
        x.add_raw(alpha, m, Scalar::one());
        x
    }

    pub fn central_elem(kind: TrigKind, c: Scalar) -> Self {
        Self {
            kind,
            terms: Lin::zero(),
            central: c,
        }
    }

    /// Adds `c * X_{α,m}` for an arbitrary (possibly non-canonical) label.
    pub fn add_raw(&mut self, alpha: i32, m: i32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        if let Some((f, key)) = canonical(self.kind, alpha, m) {
            self.terms.add_term(key, &f * &c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero() && self.central.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.kind, o.kind);
        Self {
            kind: self.kind,
            terms: self.terms.add(&o.terms),
            central: &self.central + &o.central,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            kind: self.kind,
            terms: self.terms.neg(),
            central: -&self.central,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            kind: self.kind,
            terms: self.terms.scale(c),
            central: &self.central * c,
        }
    }

    /// Rewrites in the `A` basis using `X_{α,m} = A_{α,m} + f A_{-α,m}`.
    pub fn expand_to_a(&self) -> TrigElem {
        let mut out = TrigElem::central_elem(TrigKind::A, self.central.clone());
        for (&(a, m), c) in self.terms.iter() {
            out.add_raw(a, m, c.clone());
            let f = match self.kind {
                TrigKind::A => continue,
                TrigKind::B => Scalar::from_int(-sign(m)),
                TrigKind::C => Scalar::q_pow(2 * a).scale_rational(&crate::qring::rat(-sign(m))),
                TrigKind::D => -Scalar::q_pow(2 * a),
            };
            out.add_raw(-a, m, &f * c);
        }
        out
    }
}

impl fmt::Display for TrigElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, m), c)| format!("({c})*{}[{a},{m}]", self.kind))
            .collect();
        if !self.central.is_zero() {
            parts.push(format!("({})*c", self.central));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn delta(b: bool) -> i64 {
    b as i64
}

/// Bracket of two canonical generators, before canonicalizing the output labels.
fn generator_bracket(
    kind: TrigKind,
    (a, m): (i32, i32),
    (b, n): (i32, i32),
    sf: StructureFn,
    out: &mut TrigElem,
    coef: &Scalar,
) {
    let s1 = m * b - n * a;
    out.add_raw(a + b, m + n, coef * &sf.eval(s1));
    let s2 = m * b + n * a;
    let k0 = m + n == 0;
    match kind {
        TrigKind::A => {
            if a + b == 0 && k0 {
                out.central += coef * &Scalar::from_int(m as i64);
            }
        }
        TrigKind::B => {
            out.add_raw(
                a - b,
                m + n,
                coef * &sf.eval(s2).scale_rational(&crate::qring::rat(sign(n))),
            );
            if k0 {
                let c = 2 * m as i64 * (delta(a + b == 0) - sign(m) * delta(a == b));
                out.central += coef * &Scalar::from_int(c);
            }
        }
        TrigKind::C => {
            let f =
                &Scalar::q_pow(2 * b) * &sf.eval(s2).scale_rational(&crate::qring::rat(sign(n)));
            out.add_raw(a - b, m + n, coef * &f);
            if k0 {
                let mut c = Scalar::from_int(2 * m as i64 * delta(a + b == 0));
                if a == b {
                    c -= &Scalar::q_pow(2 * a)
                        .scale_rational(&crate::qring::rat(2 * m as i64 * sign(m)));
                }
                out.central += coef * &c;
            }
        }
        TrigKind::D => {
            let f = &Scalar::q_pow(2 * b) * &sf.eval(s2);
            out.add_raw(a - b, m + n, coef * &f);
            if k0 {
                let mut c = Scalar::from_int(2 * m as i64 * delta(a + b == 0));
                if a == b {
                    c -= &Scalar::q_pow(2 * a).scale_rational(&crate::qring::rat(2 * m as i64));
                }
                out.central += coef * &c;
            }
        }
    }
}

/// The Lie bracket of the trigonometric algebra of the elements' kind.
pub fn trig_bracket(x: &TrigElem, y: &TrigElem) -> Result<TrigElem, LieError> {
    trig_bracket_with(x, y, StructureFn::Sine)
}

pub fn trig_bracket_with(
    x: &TrigElem,
    y: &TrigElem,
    sf: StructureFn,
) -> Result<TrigElem, LieError> {
    if x.kind != y.kind {
        return Err(LieError::KindMismatch(x.kind, y.kind));
    }
    let mut out = TrigElem::zero(x.kind);
    for (&k1, c1) in x.terms.iter() {
        for (&k2, c2) in y.terms.iter() {
            generator_bracket(x.kind, k1, k2, sf, &mut out, &(c1 * c2));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i32) -> Scalar {
        Scalar::q_pow(e)
    }

    #[test]
    fn b_example_bracket() {
        let x = TrigElem::generator(TrigKind::B, 1, 0);
        let y = TrigElem::generator(TrigKind::B, 1, 1);
        let z = trig_bracket(&x, &y).unwrap();
        let f = &q(-1) - &q(1);
        let mut expect = TrigElem::zero(TrigKind::B);
        expect.add_raw(2, 1, f.clone());
        expect.add_raw(0, 1, f);
        assert_eq!(z, expect);
    }

    #[test]
    fn d_example_bracket() {
        let x = TrigElem::generator(TrigKind::D, 1, 1);
        let y = TrigElem::generator(TrigKind::D, -1, -1);
        let z = trig_bracket(&x, &y).unwrap();
        let mut expect = TrigElem::central_elem(TrigKind::D, Scalar::from_int(2));
        expect.add_raw(2, 0, &q(-2) * &(&q(-2) - &q(2)));
        assert_eq!(z, expect);
    }

    #[test]
    fn b_reflection_relation() {
        for m in -3..=3 {
            let lhs = TrigElem::generator(TrigKind::B, -2, m);
            let rhs = TrigElem::generator(TrigKind::B, 2, m).scale(&Scalar::from_int(-sign(m)));
            assert_eq!(lhs, rhs);
        }
        assert!(TrigElem::generator(TrigKind::B, 0, 2).is_zero());
        assert!(TrigElem::generator(TrigKind::D, 0, 1).is_zero());
    }

    #[test]
    fn subalgebra_brackets_match_a_expansion() {
        for kind in [TrigKind::B, TrigKind::C, TrigKind::D] {
            for a in -2..=2 {
                for m in -2..=2 {
                    for b in -2..=2 {
                        for n in -2..=2 {
                            let x = TrigElem::generator(kind, a, m);
                            let y = TrigElem::generator(kind, b, n);
                            let lhs = trig_bracket(&x, &y).unwrap().expand_to_a();
                            let rhs = trig_bracket(&x.expand_to_a(), &y.expand_to_a()).unwrap();
                            assert_eq!(lhs, rhs, "{kind} ({a},{m}) ({b},{n})");
                        }
                    }
                }
            }
        }
    }
}
