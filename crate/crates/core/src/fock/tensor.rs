//! Tensor products of level-one modules, giving level-`ℓ` realizations.

use std::collections::BTreeMap;

use super::space::{a_coeff, FockSpace};
use super::{FockError, Mono, Trunc};
use crate::lin::Lin;
use crate::qring::Scalar;

/// Vector of a tensor product: pure tensors are keyed by one monomial per slot.
pub type TensorFockVec = Lin<Vec<Mono>>;

/// `⊗_j (M(1)^{[u_j]})^{⊗ n_j}` with the diagonal action.
pub struct TensorFock {
    parts: Vec<(u32, usize)>,
    slots: Vec<usize>,
    space: FockSpace,
}

impl TensorFock {
    /// `parts` lists `(multiplicity n_j, unit index j)`.
    pub fn new(trunc: Trunc, parts: &[(u32, usize)]) -> Result<Self, FockError> {
        if parts.is_empty() || parts.iter().any(|&(n, _)| n == 0) {
            return Err(FockError::Precondition(
                "parts must be nonempty with positive multiplicities".into(),
            ));
        }
        let slots = parts
            .iter()
            .flat_map(|&(n, u)| std::iter::repeat_n(u, n as usize))
            .collect();
        Ok(Self {
            parts: parts.to_vec(),
            slots,
            space: FockSpace::new(trunc, 0)?,
        })
    }

    pub fn with_shift(mut self, s: i32) -> Self {
        self.space = self.space.with_shift(s);
        self
    }

    pub fn parts(&self) -> &[(u32, usize)] {
        &self.parts
    }

    /// Unit index of each tensor slot.
    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    /// The central element acts as `Σ n_j`.
    pub fn level(&self) -> u32 {
        self.parts.iter().map(|p| p.0).sum()
    }

    pub fn space(&self) -> &FockSpace {
        &self.space
    }

    pub fn vacuum(&self) -> TensorFockVec {
        Lin::basis(vec![Vec::new(); self.slots.len()])
    }

    /// `A_{α,n}` acting as `Σ_slots 1 ⊗ ... ⊗ A_{α,n} ⊗ ... ⊗ 1`.
    pub fn mode(&self, alpha: i32, n: i32, v: &TensorFockVec) -> Result<TensorFockVec, FockError> {
        let mut out = TensorFockVec::zero();
        for (slot, &param) in self.slots.iter().enumerate() {
            let mut acc: BTreeMap<Vec<Mono>, Scalar> = BTreeMap::new();
            for (key, c) in v.iter() {
                let img = self.space.raw_mode_mono(alpha, n, &key[slot])?;
                for (m, l) in img.iter() {
                    let mut k2 = key.clone();
                    k2[slot] = m.clone();
                    *acc.entry(k2).or_default() += &c.mul_laurent(l);
                }
            }
            let pre = if alpha == 0 {
                Scalar::one()
            } else {
                a_coeff(alpha, param)
            };
            for (k, c) in acc {
                out.add_term(k, &c * &pre);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tf(parts: &[(u32, usize)]) -> TensorFock {
        TensorFock::new(Trunc::new(4, 4, 4).unwrap(), parts).unwrap()
    }

    #[test]
    fn level_adds() {
        assert_eq!(tf(&[(1, 0), (1, 1)]).level(), 2);
        assert_eq!(tf(&[(2, 0), (1, 1)]).level(), 3);
    }

    #[test]
    fn zero_mode_on_vacuum_is_diagonal() {
        let t = tf(&[(1, 0), (1, 1)]);
        let v = t.vacuum();
        let w = t.mode(1, 0, &v).unwrap();
        let expect = v.scale(&(&a_coeff(1, 0) + &a_coeff(1, 1)));
        assert_eq!(w, expect);
    }

    #[test]
    fn positive_heisenberg_kills_vacuum() {
        let t = tf(&[(1, 0), (1, 1)]);
        assert!(t.mode(0, 2, &t.vacuum()).unwrap().is_zero());
    }

    #[test]
    fn heisenberg_pair_gives_level() {
        let t = tf(&[(2, 0), (1, 1)]);
        let v = t.vacuum();
        let a = t.mode(0, 1, &t.mode(0, -1, &v).unwrap()).unwrap();
        let b = t.mode(0, -1, &t.mode(0, 1, &v).unwrap()).unwrap();
        assert_eq!(a.sub(&b), v.scale(&Scalar::from_int(3)));
    }
}
