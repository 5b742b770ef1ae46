//! Parser for the canonical scalar text produced by `Display`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;

use super::laurent::LaurentQ;
use super::poly::PolyQ;
use super::scalar::{Scalar, UExp};
use super::{parse_rational, QringError};

fn parse_exp(s: &str) -> Result<i32, QringError> {
    s.parse()
        .map_err(|_| QringError::Parse(format!("bad exponent `{s}`")))
}

/// Parses a sum of terms `c*q^a*u1^b`; factors after the coefficient are optional.
fn parse_sum(s: &str) -> Result<BTreeMap<UExp, LaurentQ>, QringError> {
    let s = s.trim();
    let mut acc: BTreeMap<UExp, Vec<(i32, BigRational)>> = BTreeMap::new();
    if s == "0" {
        return Ok(BTreeMap::new());
    }
    for term in s.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(QringError::Parse(format!("empty term in `{s}`")));
        }
        let mut coef = BigRational::one();
        let mut qe = 0i32;
        let mut u: Vec<i32> = Vec::new();
        for (i, factor) in term.split('*').enumerate() {
            let factor = factor.trim();
            if i == 0 {
                if let Some(c) = parse_rational(factor) {
                    coef = c;
                    continue;
                }
            }
            let (base, e) = match factor.split_once('^') {
                Some((b, e)) => (b, parse_exp(e)?),
                None => (factor, 1),
            };
            if base == "q" {
                qe += e;
            } else if let Some(idx) = base.strip_prefix('u') {
                let j: usize = idx
                    .parse()
                    .ok()
                    .filter(|&j: &usize| j >= 1)
                    .ok_or_else(|| QringError::Parse(format!("bad parameter `{base}`")))?;
                if u.len() < j {
                    u.resize(j, 0);
                }
                u[j - 1] += e;
            } else {
                return Err(QringError::Parse(format!("unknown factor `{factor}`")));
            }
        }
        acc.entry(UExp::new(u)).or_default().push((qe, coef));
    }
    Ok(acc
        .into_iter()
        .map(|(u, v)| (u, LaurentQ::from_terms(v)))
        .filter(|(_, l)| !l.is_zero())
        .collect())
}

impl FromStr for Scalar {
    type Err = QringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let (num, den) = rest
                .split_once(")/(")
                .ok_or_else(|| QringError::Parse(format!("malformed fraction `{s}`")))?;
            let den = den
                .strip_suffix(')')
                .ok_or_else(|| QringError::Parse(format!("malformed fraction `{s}`")))?;
            let num = parse_sum(num)?;
            let den = parse_sum(den)?;
            if den.len() != 1 || !den.keys().next().unwrap().is_trivial() {
                return Err(QringError::Parse(format!(
                    "denominator must be a nonzero polynomial in q: `{s}`"
                )));
            }
            let l = den.into_values().next().unwrap();
            let (k, p) = l.to_poly();
            if p.is_zero() {
                return Err(QringError::ZeroInverse);
            }
            let num = num.into_iter().map(|(u, x)| (u, x.shift(-k))).collect();
            return Ok(Scalar::from_parts(num, p));
        }
        let num = parse_sum(s)?;
        if num.values().all(|l| l.is_zero()) {
            return Ok(Scalar::zero());
        }
        Ok(Scalar::from_parts(num, PolyQ::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_display_output() {
        let x = &(&Scalar::q_pow(2) - &Scalar::param_pow(1, -3)) * &Scalar::from_int(5);
        let back: Scalar = x.to_string().parse().unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn parses_fraction() {
        let x: Scalar = "(1*q)/(-1 + 1*q^2)".parse().unwrap();
        let d = &Scalar::q_pow(1) - &Scalar::q_pow(-1);
        assert_eq!(x, d.invert().unwrap());
    }

    #[test]
    fn rejects_garbage() {
        assert!("1*x".parse::<Scalar>().is_err());
        assert!("(1)/(0)".parse::<Scalar>().is_err());
    }
}
