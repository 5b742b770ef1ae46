//! The level-one free-field module `C[x_1, x_2, ...]` truncated by weighted degree.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use super::{mono_degree, FockError, FockPoly, Mono, RawPoly, Trunc};
use crate::qring::{rat, LaurentQ, Scalar};

/// `q^{mα} - q^{-mα}`.
pub fn c_coeff(alpha: i32, m: i32) -> LaurentQ {
    LaurentQ::sin_bracket(m * alpha)
}

/// `a_α = u^α q^α / (q^α - q^{-α})` for the unit with index `param`.
pub fn a_coeff(alpha: i32, param: usize) -> Scalar {
    assert!(alpha != 0, "a_0 is undefined");
    let den = Scalar::sin_bracket(alpha).invert().expect("nonzero");
    &(&Scalar::param_pow(param, alpha) * &Scalar::q_pow(alpha)) * &den
}

pub(crate) fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect()
}

fn trim(mut m: Mono) -> Mono {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

pub(crate) fn raw_add_scaled(acc: &mut RawPoly, p: &RawPoly, c: &LaurentQ) {
    if c.is_zero() {
        return;
    }
    for (m, v) in p {
        let t = v * c;
        match acc.get_mut(m) {
            Some(x) => {
                *x += &t;
                if x.is_zero() {
                    acc.remove(m);
                }
            }
            None => {
                if !t.is_zero() {
                    acc.insert(m.clone(), t);
                }
            }
        }
    }
}

pub(crate) fn raw_mul(a: &RawPoly, b: &RawPoly) -> RawPoly {
    let mut out = RawPoly::new();
    for (m1, c1) in a {
        for (m2, c2) in b {
            let m = mono_mul(m1, m2);
            let t = c1 * c2;
            let e = out.entry(m).or_insert_with(LaurentQ::zero);
            *e += &t;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn binom(n: u32, k: u32) -> i64 {
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}

type ImageKey = (i32, i32, Mono);

/// Exact mode action of the vertex operators
/// `X_α(z) = a_α exp(Σ z^m c_m(α) x_m) exp(Σ z^{-m} c_m(α) ∂_m / m)`
/// and of the Heisenberg modes `A_{0,m} = ∂_m`, `A_{0,-m} = m x_m`.
///
/// Raw actions omit the scalar `a_α`; they are Laurent polynomials in `q` and do
/// not depend on the unit. `A_{α,n}` is the coefficient of `z^{-n-s}` where `s`
/// is the mode shift (`0` unless overridden).
pub struct FockSpace {
    trunc: Trunc,
    param: usize,
    shift: i32,
    creation: Mutex<HashMap<i32, Arc<Vec<RawPoly>>>>,
    images: Mutex<HashMap<ImageKey, Arc<RawPoly>>>,
}

impl FockSpace {
    pub fn new(trunc: Trunc, param: usize) -> Result<Self, FockError> {
        trunc.validate()?;
        Ok(Self {
            trunc,
            param,
            shift: 0,
            creation: Mutex::new(HashMap::new()),
            images: Mutex::new(HashMap::new()),
        })
    }

    /// Uses `A_{α,n}` = coefficient of `z^{-n-s}`.
    pub fn with_shift(mut self, s: i32) -> Self {
        self.shift = s;
        self
    }

    pub fn trunc(&self) -> Trunc {
        self.trunc
    }

    pub fn param(&self) -> usize {
        self.param
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    /// `a_α` for `α != 0`, and `1` for the Heisenberg modes.
    pub fn prefactor(&self, alpha: i32) -> Scalar {
        if alpha == 0 {
            Scalar::one()
        } else {
            a_coeff(alpha, self.param)
        }
    }

    pub fn vacuum() -> FockPoly {
        FockPoly::basis(Vec::new())
    }

    /// `x_m`.
    pub fn var(m: usize) -> FockPoly {
        let mut v = vec![0u16; m];
        v[m - 1] = 1;
        FockPoly::basis(v)
    }

    /// Creation polynomials `S_0, ..., S_D` of `exp(Σ z^m c_m(α) x_m)`.
    pub fn creation(&self, alpha: i32) -> Arc<Vec<RawPoly>> {
        if let Some(c) = self.creation.lock().unwrap().get(&alpha) {
            return c.clone();
        }
        let d = self.trunc.d as usize;
        let mut s: Vec<RawPoly> = Vec::with_capacity(d + 1);
        let mut one = RawPoly::new();
        one.insert(Vec::new(), LaurentQ::one());
        s.push(one);
        for i in 1..=d {
            let mut acc = RawPoly::new();
            for k in 1..=i {
                let mut xk = vec![0u16; k];
                xk[k - 1] = 1;
                let mut g = RawPoly::new();
                g.insert(xk, c_coeff(alpha, k as i32).scale(&rat(k as i64)));
                raw_add_scaled(&mut acc, &raw_mul(&g, &s[i - k]), &LaurentQ::one());
            }
            let inv = rat(i as i64).recip();
            for v in acc.values_mut() {
                *v = v.scale(&inv);
            }
            s.push(acc);
        }
        let arc = Arc::new(s);
        self.creation.lock().unwrap().insert(alpha, arc.clone());
        arc
    }

    /// `T_j x^e`, the weight-`j` part of `exp(Σ z^{-m} c_m(α) ∂_m / m)` applied to a monomial.
    pub fn annihilate(&self, alpha: i32, j: u32, mono: &Mono) -> RawPoly {
        let mut out = RawPoly::new();
        let mut k = vec![0u16; mono.len()];
        fn rec(
            idx: usize,
            left: u32,
            mono: &Mono,
            k: &mut Vec<u16>,
            alpha: i32,
            out: &mut RawPoly,
        ) {
            if left == 0 {
                let mut coef = LaurentQ::one();
                let mut rest = mono.clone();
                for (i, &ki) in k.iter().enumerate() {
                    if ki == 0 {
                        continue;
                    }
                    let m = (i + 1) as i32;
                    let base = c_coeff(alpha, m).scale(&rat(m as i64).recip());
                    for _ in 0..ki {
                        coef = &coef * &base;
                    }
                    coef = coef.scale(&rat(binom(mono[i] as u32, ki as u32)));
                    rest[i] -= ki;
                }
                if !coef.is_zero() {
                    let key = trim(rest);
                    let e = out.entry(key).or_insert_with(LaurentQ::zero);
                    *e += &coef;
                }
                return;
            }
            if idx >= mono.len() {
                return;
            }
            let m = (idx + 1) as u32;
            let maxk = (mono[idx] as u32).min(left / m);
            for ki in 0..=maxk {
                k[idx] = ki as u16;
                rec(idx + 1, left - ki * m, mono, k, alpha, out);
            }
            k[idx] = 0;
        }
        rec(0, j, mono, &mut k, alpha, &mut out);
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Raw image of a monomial under `A_{α,n}` (without `a_α`).
    pub fn raw_mode_mono(
        &self,
        alpha: i32,
        n: i32,
        mono: &Mono,
    ) -> Result<Arc<RawPoly>, FockError> {
        let key = (alpha, n, mono.clone());
        if let Some(r) = self.images.lock().unwrap().get(&key) {
            return Ok(r.clone());
        }
        let deg = mono_degree(mono) as i64;
        let mut out = RawPoly::new();
        if alpha == 0 {
            if n > 0 {
                let i = (n - 1) as usize;
                if i < mono.len() && mono[i] > 0 {
                    let mut m = mono.clone();
                    m[i] -= 1;
                    out.insert(trim(m), LaurentQ::from_int(mono[i] as i64));
                }
            } else if n < 0 {
                let m_abs = (-n) as usize;
                let out_deg = deg + m_abs as i64;
                if out_deg > self.trunc.d as i64 {
                    return Err(FockError::DegreeOverflow {
                        degree: out_deg,
                        bound: self.trunc.d,
                    });
                }
                let mut m = mono.clone();
                if m.len() < m_abs {
                    m.resize(m_abs, 0);
                }
                m[m_abs - 1] += 1;
                out.insert(m, LaurentQ::from_int(m_abs as i64));
            }
        } else {
            let e = -(n as i64) - self.shift as i64;
            let out_deg = deg + e;
            if out_deg > self.trunc.d as i64 {
                return Err(FockError::DegreeOverflow {
                    degree: out_deg,
                    bound: self.trunc.d,
                });
            }
            if out_deg >= 0 {
                let s = self.creation(alpha);
                for j in 0.max(-e)..=deg {
                    let t = self.annihilate(alpha, j as u32, mono);
                    if t.is_empty() {
                        continue;
                    }
                    let si = &s[(j + e) as usize];
                    raw_add_scaled(&mut out, &raw_mul(si, &t), &LaurentQ::one());
                }
            }
        }
        let arc = Arc::new(out);
        self.images.lock().unwrap().insert(key, arc.clone());
        Ok(arc)
    }

    /// Raw action of `A_{α,n}` on a raw polynomial.
    pub fn raw_mode(&self, alpha: i32, n: i32, v: &RawPoly) -> Result<RawPoly, FockError> {
        let mut out = RawPoly::new();
        for (m, c) in v {
            let img = self.raw_mode_mono(alpha, n, m)?;
            raw_add_scaled(&mut out, &img, c);
        }
        Ok(out)
    }

    /// `A_{α,n} p` with all scalars included.
    ///
    /// `α = 0, n = 0` gives zero. Outputs above the degree bound are reported as
    /// [`FockError::DegreeOverflow`], never truncated.
    pub fn mode(&self, alpha: i32, n: i32, p: &FockPoly) -> Result<FockPoly, FockError> {
        let mut acc: BTreeMap<Mono, Scalar> = BTreeMap::new();
        for (m, c) in p.iter() {
            let img = self.raw_mode_mono(alpha, n, m)?;
            for (m2, l) in img.iter() {
                let t = c.mul_laurent(l);
                let e = acc.entry(m2.clone()).or_default();
                *e += &t;
            }
        }
        let pre = self.prefactor(alpha);
        Ok(acc.into_iter().map(|(m, c)| (m, &c * &pre)).collect())
    }
}

/// Converts a raw polynomial to a module vector by attaching a scalar.
pub fn raw_to_poly(raw: &RawPoly, pre: &Scalar) -> FockPoly {
    raw.iter()
        .map(|(m, l)| (m.clone(), pre.mul_laurent(l)))
        .collect()
}

/// The raw polynomial `1`.
pub fn raw_one() -> RawPoly {
    let mut r = RawPoly::new();
    r.insert(Vec::new(), LaurentQ::one());
    r
}

/// The monomial as a raw polynomial.
pub fn raw_mono(m: &Mono) -> RawPoly {
    let mut r = RawPoly::new();
    r.insert(m.clone(), LaurentQ::one());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space() -> FockSpace {
        FockSpace::new(Trunc::new(6, 6, 4).unwrap(), 0).unwrap()
    }

    #[test]
    fn heisenberg_modes() {
        let f = space();
        let x1 = FockSpace::var(1);
        assert_eq!(f.mode(0, 1, &x1).unwrap(), FockSpace::vacuum());
        let two_x2 = FockSpace::var(2).scale(&Scalar::from_int(2));
        assert_eq!(f.mode(0, -2, &FockSpace::vacuum()).unwrap(), two_x2);
        assert!(f.mode(0, 0, &x1).unwrap().is_zero());
    }

    #[test]
    fn weight_zero_mode_on_vacuum() {
        let f = space();
        let v = f.mode(1, 0, &FockSpace::vacuum()).unwrap();
        assert_eq!(v, FockSpace::vacuum().scale(&a_coeff(1, 0)));
        let expect = &(&Scalar::param(0) * &Scalar::q_pow(1))
            * &(&Scalar::q_pow(1) - &Scalar::q_pow(-1)).invert().unwrap();
        assert_eq!(a_coeff(1, 0), expect);
    }

    #[test]
    fn overflow_is_reported() {
        let f = space();
        let v = FockSpace::var(6);
        assert!(matches!(
            f.mode(1, -1, &v),
            Err(FockError::DegreeOverflow { .. })
        ));
        assert!(matches!(
            f.mode(0, -1, &v),
            Err(FockError::DegreeOverflow { .. })
        ));
    }

    #[test]
    fn mode_changes_degree_by_minus_n() {
        let f = space();
        let v = FockSpace::var(1);
        for n in -3..=3 {
            let w = f.mode(2, n, &v).unwrap();
            for (m, _) in w.iter() {
                assert_eq!(mono_degree(m) as i32, 1 - n);
            }
        }
    }
}
