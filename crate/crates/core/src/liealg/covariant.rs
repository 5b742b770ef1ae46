//! Covariant algebras of the affinization of `A = span{E_{mn} : m+n even}`
//! (or its τ-fixed part) under a group of shift automorphisms.
//!
//! The bracket of `a ⊗ t^m` and `b ⊗ t^n` is
//! `Σ_g φ(g)^m ([g a, b] ⊗ t^{m+n} + m <g a, b> δ_{m+n,0} k)`, and the result is
//! reduced modulo the relations `g(a) ⊗ t^p ~ φ(g)^{-p} a ⊗ t^p`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::gl::{e_to_g, g, g_tau, gl_bracket, gl_form, sigma, support, tau, GlElem};
use super::LieError;
use crate::lin::Lin;
use crate::qring::{rat, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseAlg {
    /// The subalgebra `A` of `gl(infinity)`.
    Full,
    /// The τ-fixed subalgebra of `A`.
    TauFixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Group {
    Z,
    Z2xZ,
}

/// A base algebra, an acting group and a linear character.
///
/// The character sends `σ_r` to `q^{char_exp * r}` and `τ` to `tau_value`.
/// `reduce_exp` is the exponent used when reducing `G_{α,s} ⊗ t^p` to `s = 0`;
/// it equals `char_exp` for every genuine covariant algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CovSetup {
    pub base: BaseAlg,
    pub group: Group,
    pub tau_value: i32,
    pub char_exp: i32,
    pub reduce_exp: i32,
}

impl CovSetup {
    /// `(A, Z, χ_q)`.
    pub fn type_a() -> Self {
        Self::new(BaseAlg::Full, Group::Z, 1).unwrap()
    }

    /// `(A, Z2 × Z, χ_q^B)` with `χ(τ) = -1`.
    pub fn type_b() -> Self {
        Self::new(BaseAlg::Full, Group::Z2xZ, -1).unwrap()
    }

    /// `(A, Z2 × Z, χ_q^D)` with `χ(τ) = 1`.
    pub fn type_d() -> Self {
        Self::new(BaseAlg::Full, Group::Z2xZ, 1).unwrap()
    }

    /// `(A^τ, Z, χ_q)`.
    pub fn tau_fixed() -> Self {
        Self::new(BaseAlg::TauFixed, Group::Z, 1).unwrap()
    }

    pub fn all() -> [CovSetup; 4] {
        [
            Self::type_a(),
            Self::type_b(),
            Self::type_d(),
            Self::tau_fixed(),
        ]
    }

    pub fn new(base: BaseAlg, group: Group, tau_value: i32) -> Result<Self, LieError> {
        if tau_value.abs() != 1 {
            return Err(LieError::InvalidSetup(format!(
                "χ(τ) must be ±1, got {tau_value}"
            )));
        }
        if base == BaseAlg::TauFixed && group == Group::Z2xZ {
            return Err(LieError::InvalidSetup(
                "τ acts trivially on the τ-fixed algebra; use the group Z".into(),
            ));
        }
        Ok(Self {
            base,
            group,
            tau_value,
            char_exp: 1,
            reduce_exp: 1,
        })
    }

    /// Uses `χ(σ_r) = q^{e r}` consistently in bracket and reduction.
    pub fn with_character_exponent(mut self, e: i32) -> Self {
        self.char_exp = e;
        self.reduce_exp = e;
        self
    }

    /// Changes only the reduction exponent, producing an inconsistent quotient.
    pub fn with_reduction_exponent(mut self, e: i32) -> Self {
        self.reduce_exp = e;
        self
    }

    pub fn label(&self) -> String {
        let base = match self.base {
            BaseAlg::Full => "A",
            BaseAlg::TauFixed => "A^tau",
        };
        let grp = match self.group {
            Group::Z => "Z".to_string(),
            Group::Z2xZ => format!("Z2xZ,tau={}", self.tau_value),
        };
        let mut s = format!("({base},{grp},q^{})", self.char_exp);
        if self.reduce_exp != self.char_exp {
            s.push_str(&format!(",reduce q^{}", self.reduce_exp));
        }
        s
    }

    fn tau_pow(&self, p: i32) -> i64 {
        if self.tau_value == -1 && p.rem_euclid(2) == 1 {
            -1
        } else {
            1
        }
    }

    /// Rewrites `Gbar_{γ,0} ⊗ t^p` in terms of a canonical representative.
    fn canonical(&self, gamma: i32, p: i32) -> Option<(i64, (i32, i32))> {
        match (self.base, self.group) {
            (BaseAlg::Full, Group::Z) => Some((1, (gamma, p))),
            (BaseAlg::Full, Group::Z2xZ) => {
                if gamma > 0 {
                    Some((1, (gamma, p)))
                } else if gamma < 0 {
                    Some((-self.tau_pow(p), (-gamma, p)))
                } else {
                    (self.tau_pow(p) == -1).then_some((1, (0, p)))
                }
            }
            (BaseAlg::TauFixed, _) => match gamma.cmp(&0) {
                std::cmp::Ordering::Greater => Some((1, (gamma, p))),
                std::cmp::Ordering::Less => Some((-1, (-gamma, p))),
                std::cmp::Ordering::Equal => None,
            },
        }
    }

    /// The `gl(infinity)` element lifting the representative with label `α`.
    fn lift(&self, alpha: i32) -> GlElem {
        match self.base {
            BaseAlg::Full => g(alpha, 0),
            BaseAlg::TauFixed => g_tau(alpha, 0),
        }
    }
}

/// Element of a covariant algebra: canonical representatives
/// `Gbar_{α,0} ⊗ t^p` (or `Gbar^τ_{α,0} ⊗ t^p`) plus a multiple of `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovElem {
    pub setup: CovSetup,
    pub terms: Lin<(i32, i32)>,
    pub central: Scalar,
}

impl CovElem {
    pub fn zero(setup: CovSetup) -> Self {
        Self {
            setup,
            terms: Lin::zero(),
            central: Scalar::zero(),
        }
    }

    /// The class of `G_{α,0} ⊗ t^p` (of `G^τ_{α,0} ⊗ t^p` for the τ-fixed base).
    pub fn rep(setup: CovSetup, alpha: i32, p: i32) -> Self {
        let mut x = Self::zero(setup);
        x.add_rep(alpha, p, Scalar::one());
        x
    }

    pub fn central_elem(setup: CovSetup, c: Scalar) -> Self {
        Self {
            setup,
            terms: Lin::zero(),
            central: c,
        }
    }

    /// Adds `c` times the class of the representative with label `(α, p)`.
    pub fn add_rep(&mut self, alpha: i32, p: i32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        if let Some((f, key)) = self.setup.canonical(alpha, p) {
            self.terms.add_term(key, c.scale_rational(&rat(f)));
        }
    }

    /// Adds `c` times the class of `x ⊗ t^p` for an arbitrary element `x` of
    /// the base algebra, given in matrix units.
    pub fn add_loop(&mut self, x: &GlElem, p: i32, c: &Scalar) -> Result<(), LieError> {
        for (&(i, j), v) in x.iter() {
            let (gamma, s) = e_to_g(i, j).ok_or(LieError::NotInSubalgebra(i, j))?;
            if self.setup.base == BaseAlg::TauFixed && gamma <= 0 {
                // The coefficient of G_{γ,s} for γ ≥ 1 determines a τ-fixed element.
                continue;
            }
            let f = Scalar::q_pow(-s * p * self.setup.reduce_exp);
            self.add_rep(gamma, p, &(v * c) * &f);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero() && self.central.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            setup: self.setup,
            terms: self.terms.add(&o.terms),
            central: &self.central + &o.central,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            setup: self.setup,
            terms: self.terms.neg(),
            central: -&self.central,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            setup: self.setup,
            terms: self.terms.scale(c),
            central: &self.central * c,
        }
    }
}

impl fmt::Display for CovElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = match self.setup.base {
            BaseAlg::Full => "G",
            BaseAlg::TauFixed => "Gtau",
        };
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, p), c)| format!("({c})*{g}[{a},0]t^{p}"))
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

/// Range of shifts `r` for which `[σ_r a, b]` or `<σ_r a, b>` can be nonzero:
/// with supports `[p1, p2]` of `a` and `[r1, r2]` of `b`, it is `[r1 - p2, r2 - p1]`.
pub fn shift_window(a: &GlElem, b: &GlElem) -> Option<(i32, i32)> {
    let (p1, p2) = support(a)?;
    let (r1, r2) = support(b)?;
    Some((r1 - p2, r2 - p1))
}

/// Shifts in `[lo, hi]` for which the shifted bracket or pairing is nonzero.
pub fn nonzero_shifts(a: &GlElem, b: &GlElem, lo: i32, hi: i32) -> Vec<i32> {
    (lo..=hi)
        .filter(|&r| {
            let sa = sigma(r, a);
            !gl_bracket(&sa, b).is_zero() || !gl_form(&sa, b).is_zero()
        })
        .collect()
}

fn group_terms(setup: &CovSetup, a: &GlElem, r: i32, m: i32) -> Vec<(GlElem, Scalar)> {
    let sa = sigma(r, a);
    let phi = Scalar::q_pow(r * m * setup.char_exp);
    let mut out = Vec::with_capacity(2);
    if setup.group == Group::Z2xZ {
        out.push((tau(&sa), phi.scale_rational(&rat(setup.tau_pow(m)))));
    }
    out.push((sa, phi));
    out
}

/// The covariant bracket, computed as a finite sum over the shift window.
pub fn cov_bracket(x: &CovElem, y: &CovElem) -> Result<CovElem, LieError> {
    if x.setup != y.setup {
        return Err(LieError::SetupMismatch);
    }
    let setup = x.setup;
    let mut out = CovElem::zero(setup);
    for (&(alpha, m), c1) in x.terms.iter() {
        let a = setup.lift(alpha);
        for (&(beta, n), c2) in y.terms.iter() {
            let b = setup.lift(beta);
            let c12 = c1 * c2;
            let (lo, hi) = shift_window(&a, &b).expect("nonzero representatives");
            for r in lo..=hi {
                for (ga, phi) in group_terms(&setup, &a, r, m) {
                    let coef = &c12 * &phi;
                    out.add_loop(&gl_bracket(&ga, &b), m + n, &coef)?;
                    if m + n == 0 && m != 0 {
                        let form = gl_form(&ga, &b);
                        if !form.is_zero() {
                            out.central += &(&(&coef * &form) * &Scalar::from_int(m as i64));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::gl::e;

    #[test]
    fn window_contains_nonzero_shifts() {
        let a = e(0, 2);
        let b = e(5, 5);
        let (lo, hi) = shift_window(&a, &b).unwrap();
        assert_eq!((lo, hi), (3, 5));
        for r in nonzero_shifts(&a, &b, -50, 50) {
            assert!(lo <= r && r <= hi);
        }
    }

    #[test]
    fn tau_fixed_rejects_z2() {
        assert!(CovSetup::new(BaseAlg::TauFixed, Group::Z2xZ, 1).is_err());
        assert!(CovSetup::new(BaseAlg::Full, Group::Z2xZ, 2).is_err());
    }

    #[test]
    fn b_representatives_reflect() {
        let s = CovSetup::type_b();
        assert_eq!(CovElem::rep(s, -2, 3), CovElem::rep(s, 2, 3));
        assert_eq!(CovElem::rep(s, -2, 2), CovElem::rep(s, 2, 2).neg());
        assert!(CovElem::rep(s, 0, 2).is_zero());
        assert!(!CovElem::rep(s, 0, 1).is_zero());
        assert!(CovElem::rep(CovSetup::type_d(), 0, 1).is_zero());
    }

    #[test]
    fn type_a_matches_sine_bracket() {
        let s = CovSetup::type_a();
        let x = CovElem::rep(s, 1, 2);
        let y = CovElem::rep(s, -1, -2);
        let z = cov_bracket(&x, &y).unwrap();
        // (q^{mβ-nα} - q^{nα-mβ}) with α=1, m=2, β=-1, n=-2 gives s = 0.
        assert!(z.terms.is_zero());
        assert_eq!(z.central, Scalar::from_int(2));
    }
}
