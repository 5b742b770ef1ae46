//! The central extension of the quantum torus Lie algebra `D_q` and its
//! identification with the sine algebra.

use super::trig::{trig_bracket, TrigElem, TrigKind};
use super::LieError;
use crate::lin::Lin;
use crate::qring::Scalar;

/// Element of `D_q`: terms `T_{m,n}` plus a multiple of the central `C`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DqElem {
    pub terms: Lin<(i32, i32)>,
    pub central: Scalar,
}

impl DqElem {
    pub fn generator(m: i32, n: i32) -> Self {
        Self {
            terms: Lin::basis((m, n)),
            central: Scalar::zero(),
        }
    }
}

/// `[T_{m,n}, T_{m',n'}] = (q^{m'n - mn'} - q^{mn' - m'n}) T_{m+m',n+n'}
///   + m δ_{m+m',0} δ_{n+n',0} C`, with `q = e^h`.
pub fn dq_bracket(x: &DqElem, y: &DqElem) -> DqElem {
    let mut out = DqElem::default();
    for (&(m, n), a) in x.terms.iter() {
        for (&(m2, n2), b) in y.terms.iter() {
            let ab = a * b;
            let s = m2 * n - m * n2;
            out.terms
                .add_term((m + m2, n + n2), &ab * &Scalar::sin_bracket(s));
            if m + m2 == 0 && n + n2 == 0 && m != 0 {
                out.central += &(&ab * &Scalar::from_int(m as i64));
            }
        }
    }
    out
}

/// `T_{m,n} ↦ -A_{n,m}`, `C ↦ c`.
pub fn dq_translate(x: &DqElem) -> TrigElem {
    let mut out = TrigElem::central_elem(TrigKind::A, x.central.clone());
    for (&(m, n), c) in x.terms.iter() {
        out.add_raw(n, m, -c);
    }
    out
}

/// Labels `(m, n)` of two generators `T_{m,n}`.
pub type LabelPair = ((i32, i32), (i32, i32));

/// Checks that the translation is a homomorphism on all generator pairs in a box.
/// Returns the first failing pair.
pub fn dq_check(bound: i32) -> Result<Option<LabelPair>, LieError> {
    let labels: Vec<(i32, i32)> = (-bound..=bound)
        .flat_map(|m| (-bound..=bound).map(move |n| (m, n)))
        .collect();
    for &k1 in &labels {
        for &k2 in &labels {
            let x = DqElem::generator(k1.0, k1.1);
            let y = DqElem::generator(k2.0, k2.1);
            let lhs = dq_translate(&dq_bracket(&x, &y));
            let rhs = trig_bracket(&dq_translate(&x), &dq_translate(&y))?;
            if lhs != rhs {
                return Ok(Some((k1, k2)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn translation_is_a_homomorphism() {
        assert_eq!(dq_check(3).unwrap(), None);
    }
}
