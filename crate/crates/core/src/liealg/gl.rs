//! `gl(infinity)` with its trace form, shift automorphisms and the `G` basis.

use crate::lin::Lin;
use crate::qring::Scalar;

/// Element of `gl(infinity)`: finite combination of matrix units `E_{m,n}`.
pub type GlElem = Lin<(i32, i32)>;

/// `E_{m,n}`.
pub fn e(m: i32, n: i32) -> GlElem {
    GlElem::basis((m, n))
}

/// `[E_{mn}, E_{pq}] = δ_{np} E_{mq} - δ_{qm} E_{pn}`, extended bilinearly.
pub fn gl_bracket(x: &GlElem, y: &GlElem) -> GlElem {
    let mut out = GlElem::zero();
    for (&(m, n), a) in x.iter() {
        for (&(p, q), b) in y.iter() {
            if n == p {
                out.add_term((m, q), a * b);
            }
            if q == m {
                out.add_term((p, n), -(a * b));
            }
        }
    }
    out
}

/// `<E_{mn}, E_{rs}> = δ_{ms} δ_{nr}`.
pub fn gl_form(x: &GlElem, y: &GlElem) -> Scalar {
    let mut acc = Scalar::zero();
    for (&(m, n), a) in x.iter() {
        let b = y.get(&(n, m));
        if !b.is_zero() {
            acc += a * &b;
        }
    }
    acc
}

/// `σ_r(E_{mn}) = E_{m+r, n+r}`.
pub fn sigma(r: i32, x: &GlElem) -> GlElem {
    x.map_keys(|&(m, n)| (m + r, n + r))
}

/// `τ(E_{mn}) = -E_{nm}`.
pub fn tau(x: &GlElem) -> GlElem {
    x.map_keys(|&(m, n)| (n, m)).neg()
}

/// Label of `G_{α,m} = E_{α+m, m-α}`.
pub fn g_to_e(alpha: i32, m: i32) -> (i32, i32) {
    (alpha + m, m - alpha)
}

/// Inverse of [`g_to_e`]; `None` when `r + s` is odd (outside the subalgebra).
pub fn e_to_g(r: i32, s: i32) -> Option<(i32, i32)> {
    ((r + s) % 2 == 0).then(|| ((r - s) / 2, (r + s) / 2))
}

/// `G_{α,m}` as a `gl(infinity)` element.
pub fn g(alpha: i32, m: i32) -> GlElem {
    let (r, s) = g_to_e(alpha, m);
    e(r, s)
}

/// `G_{α,m} - G_{-α,m}`, the τ-fixed combination.
pub fn g_tau(alpha: i32, m: i32) -> GlElem {
    g(alpha, m).sub(&g(-alpha, m))
}

/// True if every matrix unit has `m + n` even.
pub fn in_subalgebra(x: &GlElem) -> bool {
    x.keys().all(|&(m, n)| (m + n) % 2 == 0)
}

/// Smallest interval `[lo, hi]` containing all row and column indices.
pub fn support(x: &GlElem) -> Option<(i32, i32)> {
    let mut it = x.keys().flat_map(|&(m, n)| [m, n]);
    let first = it.next()?;
    Some(it.fold((first, first), |(lo, hi), v| (lo.min(v), hi.max(v))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_label_round_trip() {
        for a in -4..=4 {
            for m in -4..=4 {
                let (r, s) = g_to_e(a, m);
                assert_eq!(e_to_g(r, s), Some((a, m)));
            }
        }
        assert_eq!(e_to_g(1, 2), None);
    }

    #[test]
    fn shift_and_tau_on_g_basis() {
        assert_eq!(sigma(3, &g(2, 1)), g(2, 4));
        assert_eq!(tau(&g(2, 1)), g(-2, 1).neg());
    }

    #[test]
    fn bracket_of_units() {
        assert_eq!(gl_bracket(&e(0, 1), &e(1, 2)), e(0, 2));
        assert_eq!(gl_bracket(&e(0, 1), &e(1, 0)), e(0, 0).sub(&e(1, 1)));
    }
}
