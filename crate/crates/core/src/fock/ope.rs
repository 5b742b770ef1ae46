//! Operator products of the vertex operators: the contraction factor, the
//! normal-ordered form of a product and the locality polynomial.

use super::space::{raw_add_scaled, raw_mul, FockSpace};
use super::{mono_degree, mono_to_string, FockError, RawPoly, Trunc};
use crate::qring::{LaurentQ, Scalar};
use crate::series::QSeries;

/// Both expansions of the contraction factor in `t = w/z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    /// `exp(Σ_{m>=1} t^m/m (q^{mα}-q^{-mα})(q^{mβ}-q^{-mβ}))`.
    pub exponential: QSeries,
    /// `(1-q^{α-β}t)(1-q^{β-α}t) / ((1-q^{α+β}t)(1-q^{-α-β}t))`.
    pub rational: QSeries,
}

impl Contraction {
    pub fn agree(&self) -> bool {
        self.exponential == self.rational
    }

    /// Smallest order at which the two expansions differ.
    pub fn first_difference(&self) -> Option<usize> {
        (0..=self.exponential.order())
            .find(|&k| self.exponential.coeff(k) != self.rational.coeff(k))
    }
}

/// Contraction factor with the pole `q^{α+β}` moved to `q^{α+β+perturb}`.
pub fn contraction_factor_with(alpha: i32, beta: i32, n: usize, perturb: i32) -> Contraction {
    let g = QSeries::from_coeffs(
        (0..=n)
            .map(|m| {
                if m == 0 {
                    LaurentQ::zero()
                } else {
                    let m = m as i32;
                    (&LaurentQ::sin_bracket(m * alpha) * &LaurentQ::sin_bracket(m * beta))
                        .scale(&crate::qring::rat(m as i64).recip())
                }
            })
            .collect(),
        n,
    );
    let exponential = QSeries::exp(&g);
    let rational = QSeries::linear(&LaurentQ::q_pow(alpha - beta), n)
        .mul(&QSeries::linear(&LaurentQ::q_pow(beta - alpha), n))
        .mul(&QSeries::geometric(
            &LaurentQ::q_pow(alpha + beta + perturb),
            n,
        ))
        .mul(&QSeries::geometric(&LaurentQ::q_pow(-alpha - beta), n));
    Contraction {
        exponential,
        rational,
    }
}

/// Both expansions of the contraction factor to order `n`.
pub fn contraction_factor(alpha: i32, beta: i32, n: usize) -> Contraction {
    contraction_factor_with(alpha, beta, n, 0)
}

/// Raw `[z^a] X_α(z)`, or the Heisenberg mode `A_{0,-a}`. `space` must be unshifted.
fn coeff_op(space: &FockSpace, alpha: i32, a: i32, v: &RawPoly) -> Result<RawPoly, FockError> {
    space.raw_mode(alpha, -a, v)
}

fn max_degree(v: &RawPoly) -> u32 {
    v.keys().map(mono_degree).max().unwrap_or(0)
}

/// `[z^a w^b] ∘∘X_α(z) X_β(w)∘∘ v` without the scalar `a_α a_β`.
fn normal_ordered(
    space: &FockSpace,
    alpha: i32,
    beta: i32,
    a: i32,
    b: i32,
    v: &RawPoly,
) -> RawPoly {
    let d = space.trunc().d as i32;
    let sa = space.creation(alpha);
    let sb = space.creation(beta);
    let mut out = RawPoly::new();
    for (mono, c) in v {
        let deg = mono_degree(mono) as i32;
        for jb in 0..=deg {
            let ib = b + jb;
            if ib < 0 || ib > d {
                continue;
            }
            let t1 = space.annihilate(beta, jb as u32, mono);
            for (m1, c1) in &t1 {
                for ja in 0..=(mono_degree(m1) as i32) {
                    let ia = a + ja;
                    if ia < 0 || ia > d {
                        continue;
                    }
                    let t2 = space.annihilate(alpha, ja as u32, m1);
                    if t2.is_empty() {
                        continue;
                    }
                    let p = raw_mul(&raw_mul(&sa[ia as usize], &sb[ib as usize]), &t2);
                    raw_add_scaled(&mut out, &p, &(c * c1));
                }
            }
        }
    }
    out
}

/// Compares `[z^a w^b] X_α(z) X_β(w) v` with `Σ_k f_k [z^{a+k} w^{b-k}] ∘∘X_α X_β∘∘ v`
/// for all `b` with `0 <= b + deg v <= N` and every `a` keeping the output degree
/// within the truncation. `f` is the rational expansion of the contraction factor,
/// with its pole shifted by `perturb`.
///
/// Returns the first mismatching `(a, b)` and monomial.
pub fn ope_check_with(
    alpha: i32,
    beta: i32,
    v: &RawPoly,
    trunc: Trunc,
    perturb: i32,
) -> Result<Option<String>, FockError> {
    if alpha == 0 || beta == 0 {
        return Err(FockError::Precondition("ope_check needs α, β != 0".into()));
    }
    let space = FockSpace::new(trunc, 0)?;
    let n = trunc.n as i32;
    let d = trunc.d as i32;
    let f = contraction_factor_with(alpha, beta, n as usize, perturb).rational;
    let dv = max_degree(v) as i32;
    for b in -dv..=(n - dv) {
        let wv = coeff_op(&space, beta, b, v)?;
        for a in -(dv + b)..=(d - dv - b) {
            let lhs = coeff_op(&space, alpha, a, &wv)?;
            let mut rhs = RawPoly::new();
            for k in 0..=(b + dv) {
                let no = normal_ordered(&space, alpha, beta, a + k, b - k, v);
                raw_add_scaled(&mut rhs, &no, f.coeff(k as usize));
            }
            raw_add_scaled(&mut rhs, &lhs, &LaurentQ::from_int(-1));
            if let Some(m) = rhs.keys().next() {
                return Ok(Some(format!(
                    "coefficient z^{a} w^{b} differs at {}",
                    mono_to_string(m)
                )));
            }
        }
    }
    Ok(None)
}

/// [`ope_check_with`] with the exact contraction factor.
pub fn ope_check(
    alpha: i32,
    beta: i32,
    v: &RawPoly,
    trunc: Trunc,
) -> Result<Option<String>, FockError> {
    ope_check_with(alpha, beta, v, trunc, 0)
}

/// Coefficients `[c_0, c_1, c_2]` of
/// `(z - q^{2α})(z - q^{-2α}) / ((1 - q^{2α})(1 - q^{-2α}))`, which has value 1 at `z = 1`.
pub fn build_locality_poly(alpha: i32) -> Result<Vec<Scalar>, FockError> {
    if alpha == 0 {
        return Err(FockError::Precondition(
            "locality polynomial needs α != 0".into(),
        ));
    }
    let a = Scalar::q_pow(2 * alpha);
    let b = Scalar::q_pow(-2 * alpha);
    let norm = (&(&Scalar::one() - &a) * &(&Scalar::one() - &b))
        .invert()
        .expect("q^{2α} != 1");
    Ok(vec![&(&a * &b) * &norm, &(-(&a + &b)) * &norm, norm])
}

/// Evaluates a polynomial given by coefficients.
pub fn eval_poly(coeffs: &[Scalar], z: &Scalar) -> Scalar {
    coeffs
        .iter()
        .rev()
        .fold(Scalar::zero(), |acc, c| &(&acc * z) + c)
}

/// Checks that `(z - a w)(z - a^{-1} w)`, `a = q^{α+β}`, annihilates the
/// commutator series `Σ [X_α(z), X_β(w)] v` coefficient-wise for output indices in
/// `[-N, N]^2`, skipping coefficients that would leave the truncation. With
/// `single_factor` only `(z - a w)` is applied.
///
/// Returns the number of identities checked, or the first nonzero coefficient.
pub fn locality_check_with(
    alpha: i32,
    beta: i32,
    v: &RawPoly,
    trunc: Trunc,
    single_factor: bool,
) -> Result<Result<usize, String>, FockError> {
    let space = FockSpace::new(trunc, 0)?;
    let n = trunc.n as i32;
    let d = trunc.d as i32;
    let dv = max_degree(v) as i32;
    let comm = |a: i32, b: i32| -> Result<Option<RawPoly>, FockError> {
        if dv + a + b < 0 {
            return Ok(Some(RawPoly::new()));
        }
        if dv + a.max(b).max(a + b) > d {
            return Ok(None);
        }
        let mut x = coeff_op(&space, alpha, a, &coeff_op(&space, beta, b, v)?)?;
        let y = coeff_op(&space, beta, b, &coeff_op(&space, alpha, a, v)?)?;
        raw_add_scaled(&mut x, &y, &LaurentQ::from_int(-1));
        Ok(Some(x))
    };
    let a = LaurentQ::q_pow(alpha + beta);
    let ainv = LaurentQ::q_pow(-alpha - beta);
    let taps: Vec<((i32, i32), LaurentQ)> = if single_factor {
        vec![((1, 0), LaurentQ::one()), ((0, 1), -&a)]
    } else {
        vec![
            ((2, 0), LaurentQ::one()),
            ((1, 1), -(&a + &ainv)),
            ((0, 2), LaurentQ::one()),
        ]
    };
    let mut checked = 0;
    let mut nonzero_seen = false;
    'outer: for p in -n..=n {
        for t in -n..=n {
            let mut acc = RawPoly::new();
            for ((dz, dw), c) in &taps {
                match comm(p - dz, t - dw)? {
                    Some(x) => {
                        nonzero_seen |= !x.is_empty();
                        raw_add_scaled(&mut acc, &x, c);
                    }
                    None => continue 'outer,
                }
            }
            checked += 1;
            if let Some(m) = acc.keys().next() {
                return Ok(Err(format!(
                    "coefficient z^{p} w^{t} is nonzero at {}",
                    mono_to_string(m)
                )));
            }
        }
    }
    if !nonzero_seen {
        return Ok(Err("commutator vanished on the whole window".into()));
    }
    Ok(Ok(checked))
}

/// [`locality_check_with`] using both factors.
pub fn locality_check(
    alpha: i32,
    beta: i32,
    v: &RawPoly,
    trunc: Trunc,
) -> Result<Result<usize, String>, FockError> {
    locality_check_with(alpha, beta, v, trunc, false)
}

#[cfg(test)]
mod tests {
    use super::super::space::{raw_mono, raw_one};
    use super::*;

    fn x(m: usize) -> RawPoly {
        let mut v = vec![0u16; m];
        v[m - 1] = 1;
        raw_mono(&v)
    }

    #[test]
    fn contraction_first_coefficients() {
        let c = contraction_factor(1, 1, 3);
        assert!(c.agree());
        let s = LaurentQ::sin_bracket(1);
        assert_eq!(c.exponential.coeff(1), &(&s * &s));
        let c = contraction_factor(1, -1, 3);
        assert!(c.agree());
        assert_eq!(c.exponential.coeff(1), &-(&s * &s));
        let c = contraction_factor(1, 2, 0);
        assert_eq!(c.exponential, QSeries::one(0));
        assert!(c.agree());
    }

    #[test]
    fn perturbed_contraction_differs_at_order_one() {
        let c = contraction_factor_with(1, 1, 4, 1);
        assert_eq!(c.first_difference(), Some(1));
    }

    #[test]
    fn ope_examples() {
        let t = Trunc::new(6, 6, 4).unwrap();
        assert_eq!(ope_check(1, 1, &raw_one(), t).unwrap(), None);
        assert_eq!(ope_check(1, -1, &x(1), t).unwrap(), None);
        assert!(ope_check_with(1, 1, &raw_one(), t, 1).unwrap().is_some());
    }

    #[test]
    fn locality_polynomial_normalization() {
        let p = build_locality_poly(1).unwrap();
        assert!(eval_poly(&p, &Scalar::one()).is_one());
        assert!(eval_poly(&p, &Scalar::q_pow(2)).is_zero());
        assert!(eval_poly(&p, &Scalar::q_pow(-2)).is_zero());
    }

    #[test]
    fn locality_examples() {
        let t = Trunc::new(6, 6, 4).unwrap();
        assert!(locality_check(1, 1, &raw_one(), t).unwrap().is_ok());
        assert!(locality_check(1, -1, &x(1), t).unwrap().is_ok());
        assert!(locality_check(0, 1, &x(1), t).unwrap().is_ok());
        assert!(locality_check_with(1, 1, &raw_one(), t, true)
            .unwrap()
            .is_err());
        assert!(locality_check_with(1, -1, &x(1), t, true).unwrap().is_err());
    }
}
