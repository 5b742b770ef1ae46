//! The affinization `gl(infinity) ⊗ C[t, t^{-1}] ⊕ C k`.

use std::fmt;

use super::gl::{gl_bracket, gl_form, GlElem};
use crate::lin::Lin;
use crate::qring::Scalar;

/// Element of the affine algebra: terms `E_{ij} ⊗ t^p` plus a multiple of `k`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AffElem {
    pub terms: Lin<((i32, i32), i32)>,
    pub central: Scalar,
}

impl AffElem {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `a ⊗ t^p`.
    pub fn loop_elem(a: &GlElem, p: i32) -> Self {
        Self {
            terms: a.map_keys(|&k| (k, p)),
            central: Scalar::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero() && self.central.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            terms: self.terms.add(&o.terms),
            central: &self.central + &o.central,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.neg(),
            central: -&self.central,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            terms: self.terms.scale(c),
            central: &self.central * c,
        }
    }

    /// Groups the loop part by powers of `t`.
    pub fn by_power(&self) -> std::collections::BTreeMap<i32, GlElem> {
        let mut out: std::collections::BTreeMap<i32, GlElem> = Default::default();
        for (&(k, p), c) in self.terms.iter() {
            out.entry(p).or_default().add_term(k, c.clone());
        }
        out
    }
}

/// `[a ⊗ t^m, b ⊗ t^n] = [a,b] ⊗ t^{m+n} + m δ_{m+n,0} <a,b> k`.
pub fn affine_bracket(x: &AffElem, y: &AffElem) -> AffElem {
    let mut out = AffElem::zero();
    for (m, a) in x.by_power() {
        for (n, b) in y.by_power() {
            let br = gl_bracket(&a, &b);
            for (&k, c) in br.iter() {
                out.terms.add_term((k, m + n), c.clone());
            }
            if m + n == 0 && m != 0 {
                out.central += &(&gl_form(&a, &b) * &Scalar::from_int(m as i64));
            }
        }
    }
    out
}

impl fmt::Display for AffElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&((i, j), p), c)| format!("({c})*E[{i},{j}]t^{p}"))
            .collect();
        if !self.central.is_zero() {
            parts.push(format!("({})*k", self.central));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::gl::e;

    #[test]
    fn central_term_appears() {
        let x = AffElem::loop_elem(&e(0, 1), 2);
        let y = AffElem::loop_elem(&e(1, 0), -2);
        let z = affine_bracket(&x, &y);
        assert_eq!(z.central, Scalar::from_int(2));
        assert_eq!(z.terms.len(), 2);
    }
}
