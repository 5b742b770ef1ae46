use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::PolyQ;

/// Laurent polynomial in `q` with rational coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so structural
/// equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentQ {
    terms: Vec<(i32, BigRational)>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentQ {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn monomial(c: BigRational, e: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(e, c)],
            }
        }
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    /// `q^s - q^{-s}`, the formal counterpart of `2i sin(hbar s)`.
    pub fn sin_bracket(s: i32) -> Self {
        Self::q_pow(s) - Self::q_pow(-s)
    }

    /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(it: I) -> Self {
        let mut v: Vec<(i32, BigRational)> = it.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, BigRational)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(i32, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// The constant value if this is a constant (possibly zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, x)| (e + k, x.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (-e, c.clone())))
    }

    /// Evaluates at a nonzero rational point.
    pub fn eval(&self, q0: &BigRational) -> BigRational {
        debug_assert!(!q0.is_zero());
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rat(q0, *e);
        }
        acc
    }

    /// Splits as `q^k * P(q)` with `P` a polynomial with nonzero constant term.
    pub fn to_poly(&self) -> (i32, PolyQ) {
        match self.min_exp() {
            None => (0, PolyQ::zero()),
            Some(k) => {
                let deg = (self.max_exp().unwrap() - k) as usize;
                let mut coeffs = vec![BigRational::zero(); deg + 1];
                for (e, c) in &self.terms {
                    coeffs[(e - k) as usize] = c.clone();
                }
                (k, PolyQ::from_coeffs(coeffs))
            }
        }
    }

    /// `q^k * p`.
    pub fn from_poly(k: i32, p: &PolyQ) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (k + i as i32, c.clone())),
        )
    }
}

pub(crate) fn pow_rat(x: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

impl Add<&LaurentQ> for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        LaurentQ { terms: out }
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        -&self
    }
}

impl Sub<&LaurentQ> for &LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        self + &(-rhs)
    }
}

impl Mul<&LaurentQ> for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        if self.is_zero() || rhs.is_zero() {
            return LaurentQ::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return LaurentQ {
                terms: self.terms.iter().map(|(x, d)| (x + e, d * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return rhs * self;
        }
        let mut v = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                v.push((e1 + e2, c1 * c2));
            }
        }
        LaurentQ::from_terms(v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentQ> for LaurentQ {
            type Output = LaurentQ;
            fn $m(self, rhs: LaurentQ) -> LaurentQ {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentQ> for LaurentQ {
            type Output = LaurentQ;
            fn $m(self, rhs: &LaurentQ) -> LaurentQ {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentQ> for LaurentQ {
    fn add_assign(&mut self, rhs: &LaurentQ) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentQ> for LaurentQ {
    fn sub_assign(&mut self, rhs: &LaurentQ) {
        *self = &*self - rhs;
    }
}

pub(crate) fn fmt_rat(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| match e {
                0 => fmt_rat(c),
                1 => format!("{}*q", fmt_rat(c)),
                _ => format!("{}*q^{}", fmt_rat(c), e),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl LaurentQ {
    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// Largest absolute coefficient, used only for diagnostics.
    pub fn height(&self) -> BigRational {
        self.terms
            .iter()
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}
