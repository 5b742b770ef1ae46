use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{fmt_rat, pow_rat, LaurentQ};
use super::poly::PolyQ;
use super::QringError;

/// Exponent vector of the formal parameters `u1, u2, ...`, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UExp(Vec<i32>);

impl UExp {
    pub fn new(mut v: Vec<i32>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Self(v)
    }

    pub fn single(j: usize, e: i32) -> Self {
        let mut v = vec![0; j + 1];
        v[j] = e;
        Self::new(v)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&0) + o.0.get(i).unwrap_or(&0))
                .collect(),
        )
    }

    fn neg(&self) -> Self {
        Self(self.0.iter().map(|e| -e).collect())
    }
}

/// Element of `Q(q)[u1^{±1}, u2^{±1}, ...]`.
///
/// The numerator is a Laurent polynomial in `q` and the parameters; the
/// denominator is a monic polynomial in `q` alone with nonzero constant term,
/// coprime to the numerator. With that normal form, derived equality is
/// mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    num: BTreeMap<UExp, LaurentQ>,
    den: PolyQ,
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Self {
            num: BTreeMap::new(),
            den: PolyQ::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentQ::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentQ::from_int(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_laurent(LaurentQ::constant(c))
    }

    pub fn half() -> Self {
        Self::from_rational(BigRational::new(1.into(), 2.into()))
    }

    pub fn from_laurent(l: LaurentQ) -> Self {
        let mut num = BTreeMap::new();
        if !l.is_zero() {
            num.insert(UExp::default(), l);
        }
        Self {
            num,
            den: PolyQ::one(),
        }
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::from_laurent(LaurentQ::q_pow(e))
    }

    /// `q^s - q^{-s}`.
    pub fn sin_bracket(s: i32) -> Self {
        Self::from_laurent(LaurentQ::sin_bracket(s))
    }

    /// The formal parameter `u_{j+1}` raised to `e` (zero-based index `j`).
    pub fn param_pow(j: usize, e: i32) -> Self {
        let mut num = BTreeMap::new();
        num.insert(UExp::single(j, e), LaurentQ::one());
        Self {
            num,
            den: PolyQ::one(),
        }
    }

    pub fn param(j: usize) -> Self {
        Self::param_pow(j, 1)
    }

    /// Numerator as (parameter exponent, Laurent coefficient) pairs.
    pub fn numerator(&self) -> impl Iterator<Item = (&UExp, &LaurentQ)> {
        self.num.iter()
    }

    pub fn denominator(&self) -> &PolyQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one()
            && self.num.len() == 1
            && self
                .num
                .iter()
                .next()
                .is_some_and(|(u, l)| u.is_trivial() && l.is_one())
    }

    /// The value as a Laurent polynomial in `q`, if it has no parameters and
    /// no denominator.
    pub fn as_laurent(&self) -> Option<LaurentQ> {
        if !self.den.is_one() {
            return None;
        }
        match self.num.len() {
            0 => Some(LaurentQ::zero()),
            1 => {
                let (u, l) = self.num.iter().next().unwrap();
                u.is_trivial().then(|| l.clone())
            }
            _ => None,
        }
    }

    /// Rational constant value if this scalar is a constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.as_laurent().and_then(|l| l.as_constant())
    }

    /// Builds the normal form from an arbitrary numerator and denominator.
    fn normalize(mut num: BTreeMap<UExp, LaurentQ>, den: PolyQ) -> Self {
        num.retain(|_, l| !l.is_zero());
        if num.is_empty() {
            return Self::zero();
        }
        assert!(!den.is_zero(), "zero denominator");
        if den.degree() == Some(0) {
            let inv = den.coeffs()[0].recip();
            if !inv.is_one() {
                for l in num.values_mut() {
                    *l = l.scale(&inv);
                }
            }
            return Self {
                num,
                den: PolyQ::one(),
            };
        }
        let mut g = den.clone();
        for l in num.values() {
            let (_, p) = l.to_poly();
            g = g.gcd(&p);
            if g.degree() == Some(0) {
                break;
            }
        }
        let mut den = den;
        if g.degree().unwrap_or(0) > 0 {
            den = den.div_rem(&g).0;
            for l in num.values_mut() {
                let (k, p) = l.to_poly();
                *l = LaurentQ::from_poly(k, &p.div_rem(&g).0);
            }
        }
        let lead = den.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            den = den.scale(&inv);
            for l in num.values_mut() {
                *l = l.scale(&inv);
            }
        }
        if den.degree() == Some(0) {
            den = PolyQ::one();
        }
        Self { num, den }
    }

    pub(crate) fn from_parts(num: BTreeMap<UExp, LaurentQ>, den: PolyQ) -> Self {
        Self::normalize(num, den)
    }

    /// Multiplies by a Laurent polynomial in `q`.
    pub fn mul_laurent(&self, l: &LaurentQ) -> Self {
        if l.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let num: BTreeMap<UExp, LaurentQ> =
            self.num.iter().map(|(u, x)| (u.clone(), x * l)).collect();
        if self.den.is_one() {
            let mut s = Self {
                num,
                den: PolyQ::one(),
            };
            s.num.retain(|_, l| !l.is_zero());
            s
        } else {
            Self::normalize(num, self.den.clone())
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self
                .num
                .iter()
                .map(|(u, l)| (u.clone(), l.scale(c)))
                .collect(),
            den: self.den.clone(),
        }
    }

    /// Multiplicative inverse.
    ///
    /// Available when the numerator is a single parameter monomial times a
    /// Laurent polynomial in `q`; other elements are not units of this ring.
    pub fn invert(&self) -> Result<Self, QringError> {
        if self.is_zero() {
            return Err(QringError::ZeroInverse);
        }
        if self.num.len() != 1 {
            return Err(QringError::NotInvertible(self.to_string()));
        }
        let (u, l) = self.num.iter().next().unwrap();
        let (k, p) = l.to_poly();
        let mut num = BTreeMap::new();
        num.insert(u.neg(), LaurentQ::from_poly(-k, &self.den));
        Ok(Self::normalize(num, p))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at `q = q0` and `u_j = u0[j]`.
    ///
    /// Errors if the denominator vanishes at `q0`, if `q0` is zero, or if a
    /// parameter with a negative exponent is set to zero.
    pub fn specialize(
        &self,
        q0: &BigRational,
        u0: &[BigRational],
    ) -> Result<BigRational, QringError> {
        if q0.is_zero() {
            return Err(QringError::BadPoint("q = 0".into()));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(QringError::Pole(fmt_rat(q0)));
        }
        let mut acc = BigRational::zero();
        for (u, l) in &self.num {
            let mut m = l.eval(q0);
            for (j, &e) in u.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = u0.get(j).ok_or(QringError::MissingParameter(j + 1))?;
                if x.is_zero() && e < 0 {
                    return Err(QringError::BadPoint(format!("u{} = 0", j + 1)));
                }
                m *= pow_rat(x, e);
            }
            acc += m;
        }
        Ok(acc / d)
    }

    /// Evaluates at `q = q0` only, leaving a scalar in the parameters.
    pub fn specialize_q(&self, q0: &BigRational) -> Result<Self, QringError> {
        if q0.is_zero() {
            return Err(QringError::BadPoint("q = 0".into()));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(QringError::Pole(fmt_rat(q0)));
        }
        let inv = d.recip();
        let num = self
            .num
            .iter()
            .map(|(u, l)| (u.clone(), LaurentQ::constant(l.eval(q0) * &inv)))
            .collect();
        Ok(Self::normalize(num, PolyQ::one()))
    }

    /// Highest parameter index in use plus one.
    pub fn param_count(&self) -> usize {
        self.num.keys().map(|u| u.exps().len()).max().unwrap_or(0)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            let mut num = self.num.clone();
            for (u, l) in &rhs.num {
                let e = num.entry(u.clone()).or_insert_with(LaurentQ::zero);
                *e += l;
            }
            if self.den.is_one() {
                num.retain(|_, l| !l.is_zero());
                return Scalar {
                    num,
                    den: PolyQ::one(),
                };
            }
            return Scalar::normalize(num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let a_co = rhs.den.div_rem(&g).0;
        let b_co = self.den.div_rem(&g).0;
        let a_l = LaurentQ::from_poly(0, &a_co);
        let b_l = LaurentQ::from_poly(0, &b_co);
        let mut num: BTreeMap<UExp, LaurentQ> = BTreeMap::new();
        for (u, l) in &self.num {
            *num.entry(u.clone()).or_insert_with(LaurentQ::zero) += &(l * &a_l);
        }
        for (u, l) in &rhs.num {
            *num.entry(u.clone()).or_insert_with(LaurentQ::zero) += &(l * &b_l);
        }
        Scalar::normalize(num, self.den.mul(&a_co))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.iter().map(|(u, l)| (u.clone(), -l)).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return rhs.clone();
        }
        let mut num: BTreeMap<UExp, LaurentQ> = BTreeMap::new();
        for (u1, l1) in &self.num {
            for (u2, l2) in &rhs.num {
                *num.entry(u1.add(u2)).or_insert_with(LaurentQ::zero) += &(l1 * l2);
            }
        }
        if self.den.is_one() && rhs.den.is_one() {
            num.retain(|_, l| !l.is_zero());
            return Scalar {
                num,
                den: PolyQ::one(),
            };
        }
        Scalar::normalize(num, self.den.mul(&rhs.den))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<LaurentQ> for Scalar {
    fn from(l: LaurentQ) -> Self {
        Scalar::from_laurent(l)
    }
}

fn fmt_term(c: &BigRational, qe: i32, u: &UExp) -> String {
    let mut s = fmt_rat(c);
    match qe {
        0 => {}
        1 => s.push_str("*q"),
        _ => s.push_str(&format!("*q^{qe}")),
    }
    for (j, &e) in u.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => s.push_str(&format!("*u{}", j + 1)),
            _ => s.push_str(&format!("*u{}^{}", j + 1, e)),
        }
    }
    s
}

impl fmt::Display for Scalar {
    /// Canonical text: `c*q^a*u1^b + ...`, or `(num)/(den)` with a denominator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (u, l) in &self.num {
            for (e, c) in l.terms() {
                parts.push(fmt_term(c, *e, u));
            }
        }
        let num = parts.join(" + ");
        if self.den.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({})", LaurentQ::from_poly(0, &self.den))
        }
    }
}
