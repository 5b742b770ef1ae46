//! Truncated formal power series in one variable and windowed two-variable series.

use std::collections::BTreeMap;

use crate::qring::{rat, LaurentQ};

/// `Σ_{k=0}^{N} c_k t^k` with coefficients Laurent polynomials in `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<LaurentQ>,
}

impl QSeries {
    /// The zero series to order `n`.
    pub fn zero(n: usize) -> Self {
        Self {
            coeffs: vec![LaurentQ::zero(); n + 1],
        }
    }

    pub fn one(n: usize) -> Self {
        let mut s = Self::zero(n);
        s.coeffs[0] = LaurentQ::one();
        s
    }

    /// Truncates or zero-extends a coefficient list to order `n`.
    pub fn from_coeffs(mut coeffs: Vec<LaurentQ>, n: usize) -> Self {
        coeffs.resize(n + 1, LaurentQ::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &LaurentQ {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[LaurentQ] {
        &self.coeffs
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut out = Self::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if !o.coeffs[j].is_zero() {
                    out.coeffs[i + j] += &(&self.coeffs[i] * &o.coeffs[j]);
                }
            }
        }
        out
    }

    /// `exp(g)` for a series with zero constant term, via `i e_i = Σ k g_k e_{i-k}`.
    pub fn exp(g: &Self) -> Self {
        assert!(g.coeffs[0].is_zero(), "exp needs a zero constant term");
        let n = g.order();
        let mut e = Self::zero(n);
        e.coeffs[0] = LaurentQ::one();
        for i in 1..=n {
            let mut acc = LaurentQ::zero();
            for k in 1..=i {
                if !g.coeffs[k].is_zero() {
                    acc += &(&g.coeffs[k] * &e.coeffs[i - k]).scale(&rat(k as i64));
                }
            }
            e.coeffs[i] = acc.scale(&rat(i as i64).recip());
        }
        e
    }

    /// `1 / (1 - a t) = Σ a^k t^k`.
    pub fn geometric(a: &LaurentQ, n: usize) -> Self {
        let mut s = Self::zero(n);
        let mut p = LaurentQ::one();
        for k in 0..=n {
            s.coeffs[k] = p.clone();
            p = &p * a;
        }
        s
    }

    /// `1 - a t`.
    pub fn linear(a: &LaurentQ, n: usize) -> Self {
        let mut s = Self::one(n);
        if n >= 1 {
            s.coeffs[1] = -a;
        }
        s
    }

    /// Largest index with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Sum of all coefficients (evaluation at `t = 1` of the truncation).
    pub fn sum(&self) -> LaurentQ {
        self.coeffs.iter().fold(LaurentQ::zero(), |acc, c| &acc + c)
    }
}

/// Coefficients of `z^j w^k` for `(j, k)` inside an explicit window.
///
/// Every comparison is quantified over the window only; entries outside it are
/// never consulted.
#[derive(Clone, Debug, PartialEq)]
pub struct BiSeries<V> {
    pub z_range: (i32, i32),
    pub w_range: (i32, i32),
    pub coeffs: BTreeMap<(i32, i32), V>,
}

impl<V> BiSeries<V> {
    pub fn new(z_range: (i32, i32), w_range: (i32, i32)) -> Self {
        Self {
            z_range,
            w_range,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn in_window(&self, j: i32, k: i32) -> bool {
        self.z_range.0 <= j && j <= self.z_range.1 && self.w_range.0 <= k && k <= self.w_range.1
    }

    pub fn insert(&mut self, j: i32, k: i32, v: V) {
        assert!(self.in_window(j, k), "({j},{k}) outside the window");
        self.coeffs.insert((j, k), v);
    }

    pub fn get(&self, j: i32, k: i32) -> Option<&V> {
        self.coeffs.get(&(j, k))
    }
}

/// True if every coefficient of `s` is zero.
pub fn all_zero(s: &QSeries) -> bool {
    s.coeffs().iter().all(|c| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_of_log_geometric() {
        // exp(Σ t^k/k) = 1/(1-t)
        let n = 6;
        let g = QSeries::from_coeffs(
            (0..=n)
                .map(|k| {
                    if k == 0 {
                        LaurentQ::zero()
                    } else {
                        LaurentQ::constant(rat(k as i64).recip())
                    }
                })
                .collect(),
            n,
        );
        assert_eq!(QSeries::exp(&g), QSeries::geometric(&LaurentQ::one(), n));
    }

    #[test]
    fn linear_times_geometric_is_one() {
        let a = LaurentQ::q_pow(3);
        let p = QSeries::linear(&a, 5).mul(&QSeries::geometric(&a, 5));
        assert_eq!(p, QSeries::one(5));
    }
}
