//! Vacuum modules `V(ℓ,0)` of the affinization of a finite-interval subalgebra
//! `A_I = span{E_{m,n} : m, n ∈ I, m + n even}` of `gl(infinity)`, truncated by degree.
//!
//! Vectors are combinations of PBW monomials `x_1 x_2 ... x_k 1` where each
//! `x_i = a_i(n_i)` has `n_i <= -1`. Monomials are stored as lists of
//! `(-n, basis index)` sorted non-increasingly.

mod ops;
mod quotient;
mod singular;

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use thiserror::Error;

use crate::lin::Lin;
use crate::qring::Scalar;

pub use ops::{r_axiom_check, RAxiomFailure};
pub use quotient::{graded_dim_l, nilpotency_check_l, JPrime, NilpotencyOutcome};
pub use singular::{singular_check, singular_vector, SingularOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VacError {
    #[error("interval [{0},{1}] needs at least two points")]
    BadInterval(i32, i32),
    #[error("E[{0},{1}] is not a basis element of the interval algebra")]
    NotInBasis(i32, i32),
    #[error("shift by {r} leaves the interval; widen it to contain E[{m},{n}]")]
    WideningRequired { r: i32, m: i32, n: i32 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("rank disagrees between specializations: {0:?}")]
    SpecializationDisagreement(Vec<usize>),
    #[error("specialization failed: {0}")]
    Specialization(String),
}

/// One mode `a(n)` stored as `(-n, basis index)`.
pub type ModeKey = (i32, usize);

/// PBW monomial: non-increasing list of modes with `-n >= 1`.
pub type PbwMono = Vec<ModeKey>;

/// Vector of `V(ℓ,0)`.
pub type PbwVector = Lin<PbwMono>;

/// `A_I` with its basis in lexicographic order of `(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalAlg {
    lo: i32,
    hi: i32,
    basis: Vec<(i32, i32)>,
    index: HashMap<(i32, i32), usize>,
    bracket: Vec<Vec<Vec<(usize, i64)>>>,
    form: Vec<Vec<i64>>,
}

impl IntervalAlg {
    pub fn new(lo: i32, hi: i32) -> Result<Self, VacError> {
        if hi <= lo {
            return Err(VacError::BadInterval(lo, hi));
        }
        let basis: Vec<(i32, i32)> = (lo..=hi)
            .flat_map(|m| (lo..=hi).map(move |n| (m, n)))
            .filter(|(m, n)| (m + n).rem_euclid(2) == 0)
            .collect();
        let index: HashMap<(i32, i32), usize> =
            basis.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let dim = basis.len();
        let mut bracket = vec![vec![Vec::new(); dim]; dim];
        let mut form = vec![vec![0i64; dim]; dim];
        for (a, &(i, j)) in basis.iter().enumerate() {
            for (b, &(k, l)) in basis.iter().enumerate() {
                let mut out = Vec::new();
                if j == k {
                    out.push((index[&(i, l)], 1));
                }
                if l == i {
                    out.push((index[&(k, j)], -1));
                }
                if out.len() == 2 && out[0].0 == out[1].0 {
                    out.clear();
                }
                bracket[a][b] = out;
                form[a][b] = i64::from(i == l && j == k);
            }
        }
        Ok(Self {
            lo,
            hi,
            basis,
            index,
            bracket,
            form,
        })
    }

    pub fn interval(&self) -> (i32, i32) {
        (self.lo, self.hi)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(i32, i32)] {
        &self.basis
    }

    pub fn label(&self, a: usize) -> (i32, i32) {
        self.basis[a]
    }

    pub fn index_of(&self, m: i32, n: i32) -> Result<usize, VacError> {
        self.index
            .get(&(m, n))
            .copied()
            .ok_or(VacError::NotInBasis(m, n))
    }

    /// `[E_a, E_b]` as `(index, coefficient)` pairs.
    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.bracket[a][b]
    }

    /// `⟨E_a, E_b⟩ = tr(E_a E_b)`.
    pub fn form(&self, a: usize, b: usize) -> i64 {
        self.form[a][b]
    }

    /// Indices of the Cartan elements `E_{m,m}`.
    pub fn cartan(&self) -> Vec<usize> {
        (self.lo..=self.hi).map(|m| self.index[&(m, m)]).collect()
    }

    /// Indices of the root vectors `E_{m,n}`, `m != n`.
    pub fn roots(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&a| self.basis[a].0 != self.basis[a].1)
            .collect()
    }

    /// Cartan weight of a monomial, indexed by `m - lo`.
    pub fn weight(&self, mono: &PbwMono) -> Vec<i32> {
        let mut w = vec![0; (self.hi - self.lo + 1) as usize];
        for &(_, a) in mono {
            let (m, n) = self.basis[a];
            w[(m - self.lo) as usize] += 1;
            w[(n - self.lo) as usize] -= 1;
        }
        w
    }
}

/// Degree `Σ (-n)` of a monomial.
pub fn mono_degree(m: &PbwMono) -> i32 {
    m.iter().map(|x| x.0).sum()
}

/// All PBW monomials of degree `d` over a basis of size `dim`.
pub fn pbw_monomials(dim: usize, d: i32) -> Vec<PbwMono> {
    fn rec(left: i32, max: ModeKey, dim: usize, cur: &mut PbwMono, out: &mut Vec<PbwMono>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for deg in (1..=left.min(max.0)).rev() {
            let top = if deg == max.0 { max.1 } else { dim - 1 };
            for a in (0..=top).rev() {
                cur.push((deg, a));
                rec(left - deg, (deg, a), dim, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if d >= 0 && dim > 0 {
        rec(d, (d, dim - 1), dim, &mut Vec::new(), &mut out);
    }
    out
}

/// `dim V(ℓ,0)_d`, the number of PBW monomials of degree `d`.
pub fn graded_dim_v(alg: &IntervalAlg, d: i32) -> usize {
    pbw_monomials(alg.dim(), d).len()
}

/// Renders a monomial as `E[1,3](-2)E[0,2](-1)1`.
pub fn mono_to_string(alg: &IntervalAlg, m: &PbwMono) -> String {
    let mut s = String::new();
    for &(d, a) in m {
        let (i, j) = alg.label(a);
        s.push_str(&format!("E[{i},{j}](-{d})"));
    }
    s.push('1');
    s
}

/// Renders a vector.
pub fn vector_to_string(alg: &IntervalAlg, v: &PbwVector) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.iter()
        .map(|(m, c)| format!("({c})*{}", mono_to_string(alg, m)))
        .collect::<Vec<_>>()
        .join(" + ")
}

type MemoKey = (i32, usize, PbwMono);

/// `V(ℓ,0)` over an interval algebra, with the level kept as a scalar (possibly a
/// formal parameter). Straightening results are memoized.
pub struct VacuumModule {
    alg: IntervalAlg,
    level: Scalar,
    memo: Mutex<HashMap<MemoKey, PbwVector>>,
}

impl fmt::Debug for VacuumModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VacuumModule")
            .field("interval", &self.alg.interval())
            .field("level", &self.level)
            .finish()
    }
}

impl VacuumModule {
    pub fn new(alg: IntervalAlg, level: Scalar) -> Self {
        Self {
            alg,
            level,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn alg(&self) -> &IntervalAlg {
        &self.alg
    }

    pub fn level(&self) -> &Scalar {
        &self.level
    }

    pub fn vacuum() -> PbwVector {
        PbwVector::basis(Vec::new())
    }

    /// `a(n)` applied to one monomial, straightened into PBW order.
    fn left_mul(&self, a: usize, n: i32, mono: &[ModeKey]) -> PbwVector {
        if mono.is_empty() {
            return if n >= 0 {
                PbwVector::zero()
            } else {
                PbwVector::basis(vec![(-n, a)])
            };
        }
        if n < 0 && (-n, a) >= mono[0] {
            let mut m = Vec::with_capacity(mono.len() + 1);
            m.push((-n, a));
            m.extend_from_slice(mono);
            return PbwVector::basis(m);
        }
        let key = (n, a, mono.to_vec());
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let (d, b) = mono[0];
        let m = -d;
        let rest = &mono[1..];
        // a(n) b(m) R = b(m) a(n) R + [a(n), b(m)] R
        let mut out = PbwVector::zero();
        for (m2, c) in self.left_mul(a, n, rest).iter() {
            out.add_scaled(&self.left_mul(b, m, m2), c);
        }
        for &(e, c) in self.alg.bracket(a, b) {
            out.add_scaled(&self.left_mul(e, n + m, rest), &Scalar::from_int(c));
        }
        if n + m == 0 && self.alg.form(a, b) != 0 {
            let c = &Scalar::from_int(n as i64 * self.alg.form(a, b)) * &self.level;
            out.add_term(rest.to_vec(), c);
        }
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    /// `a(n) v`.
    pub fn mode(&self, a: usize, n: i32, v: &PbwVector) -> PbwVector {
        let mut out = PbwVector::zero();
        for (m, c) in v.iter() {
            out.add_scaled(&self.left_mul(a, n, m), c);
        }
        out
    }

    /// `x_1 x_2 ... x_k v` for `word = [(a_1, n_1), ..., (a_k, n_k)]`.
    pub fn apply_word(&self, word: &[(usize, i32)], v: &PbwVector) -> PbwVector {
        word.iter()
            .rev()
            .fold(v.clone(), |acc, &(a, n)| self.mode(a, n, &acc))
    }

    /// The vector `x_1 ... x_k 1` of a monomial, as a word.
    pub fn word_of(mono: &PbwMono) -> Vec<(usize, i32)> {
        mono.iter().map(|&(d, a)| (a, -d)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module(lo: i32, hi: i32) -> VacuumModule {
        VacuumModule::new(IntervalAlg::new(lo, hi).unwrap(), Scalar::param(0))
    }

    #[test]
    fn basis_of_small_intervals() {
        assert_eq!(IntervalAlg::new(0, 1).unwrap().dim(), 2);
        assert_eq!(IntervalAlg::new(0, 3).unwrap().dim(), 8);
        assert!(IntervalAlg::new(1, 1).is_err());
    }

    #[test]
    fn graded_dims_match_the_partition_product() {
        let alg = IntervalAlg::new(0, 1).unwrap();
        let dims: Vec<usize> = (0..=4).map(|d| graded_dim_v(&alg, d)).collect();
        assert_eq!(dims, vec![1, 2, 5, 10, 20]);
        assert_eq!(graded_dim_v(&IntervalAlg::new(0, 3).unwrap(), 1), 8);
    }

    #[test]
    fn action_examples() {
        // G_{1,0} = E_{1,-1}, G_{-1,0} = E_{-1,1}
        let v = module(-1, 1);
        let alg = v.alg();
        let a = alg.index_of(1, -1).unwrap();
        let b = alg.index_of(-1, 1).unwrap();
        let x = v.mode(b, -1, &VacuumModule::vacuum());
        assert_eq!(x, PbwVector::basis(vec![(1, b)]));
        let y = v.mode(a, 1, &x);
        assert_eq!(y, VacuumModule::vacuum().scale(v.level()));
        let g01 = alg.index_of(1, 1).unwrap();
        assert!(v.mode(g01, 0, &VacuumModule::vacuum()).is_zero());
    }

    /// `[x(m), y(n)]` acts as `[x,y](m+n) + m δ_{m+n,0} ⟨x,y⟩ ℓ` on low-degree vectors.
    #[test]
    fn action_is_a_representation() {
        let v = module(0, 2);
        let alg = v.alg();
        let vectors: Vec<PbwVector> = (0..=2)
            .flat_map(|d| pbw_monomials(alg.dim(), d))
            .map(PbwVector::basis)
            .collect();
        for x in 0..alg.dim() {
            for y in 0..alg.dim() {
                for m in -2..=2 {
                    for n in -2..=2 {
                        for w in &vectors {
                            let lhs =
                                v.mode(x, m, &v.mode(y, n, w))
                                    .sub(&v.mode(y, n, &v.mode(x, m, w)));
                            let mut rhs = PbwVector::zero();
                            for &(e, c) in alg.bracket(x, y) {
                                rhs.add_scaled(&v.mode(e, m + n, w), &Scalar::from_int(c));
                            }
                            if m + n == 0 {
                                let c = Scalar::from_int(m as i64 * alg.form(x, y));
                                rhs.add_scaled(w, &(&c * v.level()));
                            }
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn monomials_are_sorted() {
        for m in pbw_monomials(3, 4) {
            assert!(m.windows(2).all(|w| w[0] >= w[1]));
            assert_eq!(mono_degree(&m), 4);
        }
    }
}
