//! Explicit isomorphisms between the trigonometric algebras and covariant algebras,
//! checked generator pair by generator pair.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::covariant::{cov_bracket, CovElem, CovSetup};
use super::trig::{trig_bracket, TrigElem, TrigKind};
use super::LieError;
use crate::qring::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IsoDictionary {
    /// `A_{α,m} ↦ Gbar_{α,0} ⊗ t^m`, `c ↦ k`, in `(A, Z, χ_q)`.
    A,
    /// `B_{α,m} ↦ Gbar_{α,0} ⊗ t^m`, `c ↦ k/2`, in `(A, Z2 × Z, χ_q^B)`.
    B,
    /// `C_{α,m} ↦ q^α B_{α,m}`, `c ↦ c`, then composed with dictionary `B`.
    CtoB,
    /// `D_{α,m} ↦ q^α Gbar_{α,0} ⊗ t^m`, `c ↦ k/2`, in `(A, Z2 × Z, χ_q^D)`.
    D,
    /// `D_{α,m} ↦ q^α Gbar^τ_{α,0} ⊗ t^m`, `c ↦ k`, in `(A^τ, Z, χ_q)`.
    DTau,
}

impl IsoDictionary {
    pub const ALL: [IsoDictionary; 5] = [
        IsoDictionary::A,
        IsoDictionary::B,
        IsoDictionary::CtoB,
        IsoDictionary::D,
        IsoDictionary::DTau,
    ];

    pub fn source_kind(self) -> TrigKind {
        match self {
            IsoDictionary::A => TrigKind::A,
            IsoDictionary::B => TrigKind::B,
            IsoDictionary::CtoB => TrigKind::C,
            IsoDictionary::D | IsoDictionary::DTau => TrigKind::D,
        }
    }

    /// Target covariant setup, with character `σ_r ↦ q^{char_exp r}`.
    pub fn target(self, char_exp: i32) -> CovSetup {
        let s = match self {
            IsoDictionary::A => CovSetup::type_a(),
            IsoDictionary::B | IsoDictionary::CtoB => CovSetup::type_b(),
            IsoDictionary::D => CovSetup::type_d(),
            IsoDictionary::DTau => CovSetup::tau_fixed(),
        };
        s.with_character_exponent(char_exp)
    }

    pub fn name(self) -> &'static str {
        match self {
            IsoDictionary::A => "A",
            IsoDictionary::B => "B",
            IsoDictionary::CtoB => "C-to-B",
            IsoDictionary::D => "D",
            IsoDictionary::DTau => "D-tau",
        }
    }
}

impl fmt::Display for IsoDictionary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `C_{α,m} ↦ q^α B_{α,m}`, `c ↦ c`.
pub fn c_to_b(x: &TrigElem) -> TrigElem {
    debug_assert_eq!(x.kind, TrigKind::C);
    let mut out = TrigElem::central_elem(TrigKind::B, x.central.clone());
    for (&(a, m), c) in x.terms.iter() {
        out.add_raw(a, m, c * &Scalar::q_pow(a));
    }
    out
}

/// Applies the dictionary, landing in the covariant algebra `setup`.
pub fn to_covariant(dict: IsoDictionary, x: &TrigElem, setup: CovSetup) -> CovElem {
    let x = match dict {
        IsoDictionary::CtoB => c_to_b(x),
        _ => x.clone(),
    };
    let (twist, central) = match dict {
        IsoDictionary::A => (false, Scalar::one()),
        IsoDictionary::B | IsoDictionary::CtoB => (false, Scalar::half()),
        IsoDictionary::D => (true, Scalar::half()),
        IsoDictionary::DTau => (true, Scalar::one()),
    };
    let mut out = CovElem::central_elem(setup, &x.central * &central);
    for (&(a, m), c) in x.terms.iter() {
        let f = if twist {
            c * &Scalar::q_pow(a)
        } else {
            c.clone()
        };
        out.add_rep(a, m, f);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoMismatch {
    pub left: (i32, i32),
    pub right: (i32, i32),
    pub image_of_bracket: String,
    pub bracket_of_images: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoOutcome {
    pub dictionary: IsoDictionary,
    pub pairs_checked: usize,
    pub mismatch: Option<IsoMismatch>,
}

impl IsoOutcome {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Checks `φ([x,y]) = [φ(x), φ(y)]` for all generator pairs with labels in
/// `[-bound, bound]^2`, stopping at the first mismatch.
///
/// For `CtoB` the intermediate map into the type-B algebra is checked as well.
pub fn iso_check(dict: IsoDictionary, bound: i32, char_exp: i32) -> Result<IsoOutcome, LieError> {
    let kind = dict.source_kind();
    let setup = dict.target(char_exp);
    let gens: Vec<((i32, i32), TrigElem)> = (-bound..=bound)
        .flat_map(|a| (-bound..=bound).map(move |m| (a, m)))
        .map(|(a, m)| ((a, m), TrigElem::generator(kind, a, m)))
        .filter(|(_, x)| !x.is_zero())
        .collect();
    let mut checked = 0;
    for (k1, x) in &gens {
        for (k2, y) in &gens {
            checked += 1;
            let xy = trig_bracket(x, y)?;
            if dict == IsoDictionary::CtoB {
                let lhs = c_to_b(&xy);
                let rhs = trig_bracket(&c_to_b(x), &c_to_b(y))?;
                if lhs != rhs {
                    return Ok(IsoOutcome {
                        dictionary: dict,
                        pairs_checked: checked,
                        mismatch: Some(IsoMismatch {
                            left: *k1,
                            right: *k2,
                            image_of_bracket: lhs.to_string(),
                            bracket_of_images: rhs.to_string(),
                        }),
                    });
                }
            }
            let lhs = to_covariant(dict, &xy, setup);
            let rhs = cov_bracket(&to_covariant(dict, x, setup), &to_covariant(dict, y, setup))?;
            if lhs != rhs {
                return Ok(IsoOutcome {
                    dictionary: dict,
                    pairs_checked: checked,
                    mismatch: Some(IsoMismatch {
                        left: *k1,
                        right: *k2,
                        image_of_bracket: lhs.to_string(),
                        bracket_of_images: rhs.to_string(),
                    }),
                });
            }
        }
    }
    Ok(IsoOutcome {
        dictionary: dict,
        pairs_checked: checked,
        mismatch: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_dictionary_is_a_homomorphism_on_a_small_box() {
        for d in IsoDictionary::ALL {
            let out = iso_check(d, 2, 1).unwrap();
            assert!(out.passed(), "{d}: {:?}", out.mismatch);
        }
    }

    #[test]
    fn squared_character_breaks_every_dictionary() {
        for d in IsoDictionary::ALL {
            let out = iso_check(d, 2, 2).unwrap();
            assert!(!out.passed(), "{d}");
        }
    }
}
