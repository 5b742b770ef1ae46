use std::collections::BTreeMap;

use crate::qring::Scalar;

/// Finite formal linear combination of basis labels `K` with scalar coefficients.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lin<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for Lin<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::single(k, Scalar::one())
    }

    pub fn single(k: K, c: Scalar) -> Self {
        let mut s = Self::zero();
        s.add_term(k, c);
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Scalar)>>(it: I) -> Self {
        let mut s = Self::zero();
        for (k, c) in it {
            s.add_term(k, c);
        }
        s
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for (k, v) in &other.terms {
            s.add_term(k.clone(), v.clone());
        }
        s
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for (k, v) in &other.terms {
            s.add_term(k.clone(), -v);
        }
        s
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, k: &K) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Relabels every term, merging collisions.
    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> Lin<L> {
        Lin::from_terms(self.terms.iter().map(|(k, v)| (f(k), v.clone())))
    }

    /// Applies a coefficient map, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), f(v))))
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Lin<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(it: I) -> Self {
        Self::from_terms(it)
    }
}
