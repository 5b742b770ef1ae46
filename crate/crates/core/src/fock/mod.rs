//! Level-one free-field realization of the sine algebra on truncated polynomial
//! spaces, tensor products of it, and the operator-product checks built on it.

mod space;

pub mod ope;
pub mod quasi;
pub mod relations;
pub mod tensor;
pub mod vanish;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::lin::Lin;
use crate::qring::{LaurentQ, PolyQ, Scalar, UExp};

pub use ope::{build_locality_poly, contraction_factor, locality_check, ope_check, Contraction};
pub use quasi::{quasi_commutator_check, quasi_commutator_suite, QuasiOutcome};
pub use relations::{
    probe_shift, relation_check, relation_combination, small_parts, unitary_weight, weight_check,
    RelationFailure,
};
pub use space::{a_coeff, c_coeff, raw_mono, raw_one, raw_to_poly, FockSpace};
pub use tensor::{TensorFock, TensorFockVec};
pub use vanish::{coincidence_vanish_check, slot_coefficient, VanishOutcome};

/// Exponent vector on `x_1, x_2, ...`; entry `i` is the power of `x_{i+1}`.
/// Trailing zeros are never stored.
pub type Mono = Vec<u16>;

/// Vector of the level-one module `C[x_1, x_2, ...]` with scalar coefficients.
///
/// The truncation and the unit `u` live in the [`FockSpace`] acting on it.
pub type FockPoly = Lin<Mono>;

/// Polynomial with coefficients in `Z[q, q^{-1}]` (rationally), used for the
/// raw vertex-operator actions before the scalar `a_α` is attached.
pub type RawPoly = BTreeMap<Mono, LaurentQ>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("output degree {degree} exceeds the truncation bound {bound}")]
    DegreeOverflow { degree: i64, bound: u32 },
    #[error("invalid truncation: {0}")]
    InvalidTrunc(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Truncation of the polynomial module: `k` variables, weighted degree at most
/// `d` (`x_m` has weight `m`) and two-variable series order `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Trunc {
    pub k: u32,
    pub d: u32,
    pub n: u32,
}

impl Trunc {
    pub fn new(k: u32, d: u32, n: u32) -> Result<Self, FockError> {
        let t = Self { k, d, n };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<(), FockError> {
        if self.d < 1 || self.k < self.d {
            return Err(FockError::InvalidTrunc(format!(
                "need K >= D >= 1, got K={}, D={}",
                self.k, self.d
            )));
        }
        if self.n < 1 {
            return Err(FockError::InvalidTrunc("need N >= 1".into()));
        }
        Ok(())
    }
}

/// Weighted degree `Σ m e_m`.
pub fn mono_degree(m: &Mono) -> u32 {
    m.iter()
        .enumerate()
        .map(|(i, &e)| (i as u32 + 1) * e as u32)
        .sum()
}

/// All monomials of weighted degree exactly `d` (one per partition of `d`).
pub fn monomials_of_degree(d: u32) -> Vec<Mono> {
    fn rec(left: u32, max_part: u32, cur: &mut Vec<u16>, out: &mut Vec<Mono>) {
        if left == 0 {
            let mut m = cur.clone();
            while m.last() == Some(&0) {
                m.pop();
            }
            out.push(m);
            return;
        }
        for p in (1..=max_part.min(left)).rev() {
            if cur.len() < p as usize {
                cur.resize(p as usize, 0);
            }
            cur[p as usize - 1] += 1;
            rec(left - p, p, cur, out);
            cur[p as usize - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All monomials of weighted degree at most `d`.
pub fn monomials_up_to(d: u32) -> Vec<Mono> {
    (0..=d).flat_map(monomials_of_degree).collect()
}

/// Renders a monomial as `x1^2*x3`, or `1`.
pub fn mono_to_string(m: &Mono) -> String {
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, e)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Accumulates `Σ s_i · p_i` for scalars `s_i` and raw polynomials `p_i` over a
/// common denominator, so that zero tests never divide.
pub struct Combination<K: Ord + Clone = Mono> {
    terms: Vec<(Scalar, BTreeMap<K, LaurentQ>)>,
}

impl<K: Ord + Clone> Default for Combination<K> {
    fn default() -> Self {
        Self { terms: Vec::new() }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, s: Scalar, p: BTreeMap<K, LaurentQ>) {
        if !s.is_zero() && !p.is_empty() {
            self.terms.push((s, p));
        }
    }

    /// Combined numerator keyed by `(monomial, u-exponent)`.
    fn cleared(&self) -> BTreeMap<(K, UExp), LaurentQ> {
        let mut lcm = PolyQ::one();
        for (s, _) in &self.terms {
            let d = s.denominator();
            if d.is_one() {
                continue;
            }
            let g = lcm.gcd(d);
            lcm = lcm.mul(&d.div_rem(&g).0);
        }
        let mut acc: BTreeMap<(K, UExp), LaurentQ> = BTreeMap::new();
        for (s, p) in &self.terms {
            let (f, r) = lcm.div_rem(s.denominator());
            debug_assert!(r.is_zero());
            let f = LaurentQ::from_poly(0, &f);
            for (u, n) in s.numerator() {
                let c = n * &f;
                for (m, v) in p {
                    let e = acc
                        .entry((m.clone(), u.clone()))
                        .or_insert_with(LaurentQ::zero);
                    *e += &(&c * v);
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.cleared().is_empty()
    }

    /// First monomial carrying a nonzero coefficient, if any.
    pub fn first_nonzero(&self) -> Option<K> {
        self.cleared().into_keys().next().map(|(m, _)| m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=6).map(|d| monomials_of_degree(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11]);
        for d in 0..=6 {
            for m in monomials_of_degree(d) {
                assert_eq!(mono_degree(&m), d);
            }
        }
    }

    #[test]
    fn trunc_validation() {
        assert!(Trunc::new(8, 8, 6).is_ok());
        assert!(Trunc::new(3, 4, 6).is_err());
        assert!(Trunc::new(4, 0, 6).is_err());
        assert!(Trunc::new(4, 4, 0).is_err());
    }

    #[test]
    fn combination_clears_denominators() {
        let a = a_coeff(1, 0);
        let mut c = Combination::new();
        c.push(a.clone(), raw_one());
        c.push(-(&a), raw_one());
        assert!(c.is_zero());
        let mut c = Combination::new();
        c.push(a, raw_one());
        c.push(Scalar::one(), raw_one());
        assert_eq!(c.first_nonzero(), Some(Vec::new()));
    }
}
