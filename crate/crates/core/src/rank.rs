//! Sparse row echelon forms over the rationals.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Sparse vector keyed by column labels.
pub type SparseVec<K> = BTreeMap<K, BigRational>;

/// Incrementally built echelon basis. Every stored row has leading coefficient 1
/// at its pivot, and pivots are distinct.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self {
            rows: BTreeMap::new(),
        }
    }
}

fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &BigRational, row: &SparseVec<K>) {
    for (k, x) in row {
        let t = c * x;
        match v.get_mut(k) {
            Some(y) => {
                *y += t;
                if y.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                v.insert(k.clone(), t);
            }
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces leading terms until the leading column is not a pivot.
    /// The result is zero exactly when `v` lies in the span.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        v.retain(|_, x| !x.is_zero());
        loop {
            let Some((k, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
                return v;
            };
            match self.rows.get(&k) {
                Some(row) => axpy(&mut v, &-c, row),
                None => return v,
            }
        }
    }

    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let v = self.reduce(v);
        let Some((k, lead)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = BigRational::one() / lead;
        let row = v.into_iter().map(|(k, x)| (k, x * &inv)).collect();
        self.rows.insert(k, row);
        true
    }
}
