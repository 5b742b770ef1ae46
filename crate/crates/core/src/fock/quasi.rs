//! The commutator formula for the realized fields, rebuilt from vertex-algebra
//! products in `V(ℓ,0)` and the group action, and compared with the realized modes.
//!
//! With `Y_W(G_{α,m}, x) = q^m A_α(q^m x)` and `R_r G_{α,0} = q^{-r} G_{α,r}`, the
//! finite sum over shifts reads in modes
//!
//! `[A_{α,m}, A_{β,n}] = Σ_r q^{r(m+1)} Σ c q^{-s(m+n)} A_{γ,m+n} + m δ_{m+n,0} ℓ ⟨G_{α,0}, G_{β,0}⟩`
//!
//! where `Σ c G_{γ,s}(-1)1 = (R_r G_{α,0})_0 G_{β,0}`.

use serde::{Deserialize, Serialize};

use super::relations::{relation_combination, RelationFailure};
use super::space::{raw_mono, FockSpace};
use super::{mono_to_string, monomials_up_to, Combination, FockError};
use crate::liealg::gl::{e_to_g, g_to_e};
use crate::liealg::{trig_bracket, TrigElem, TrigKind};
use crate::qring::Scalar;
use crate::vacuum::{IntervalAlg, VacuumModule};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiOutcome {
    pub alpha: i32,
    pub beta: i32,
    /// Shifts `r` whose products `(R_r G_{α,0})_j G_{β,0}` are nonzero.
    pub support: Vec<i32>,
    pub relation_failure: Option<RelationFailure>,
    pub reconstruction_failure: Option<String>,
}

impl QuasiOutcome {
    pub fn passed(&self) -> bool {
        self.relation_failure.is_none() && self.reconstruction_failure.is_none()
    }
}

/// Products `(R_r G_{α,0})_j G_{β,0}` for `j = 0, 1`, as the degree-one part
/// `Σ c (γ, s)` and the scalar multiple of the vacuum.
struct ShiftProducts {
    zero: Vec<((i32, i32), Scalar)>,
    one: Scalar,
}

fn shift_products(
    module: &VacuumModule,
    alpha: i32,
    beta: i32,
    r: i32,
) -> Result<ShiftProducts, FockError> {
    let alg = module.alg();
    let idx = |(i, j): (i32, i32)| {
        alg.index_of(i, j)
            .map_err(|e| FockError::Precondition(e.to_string()))
    };
    let a = idx(g_to_e(alpha, r))?;
    let b = idx(g_to_e(beta, 0))?;
    let scale = Scalar::q_pow(-r);
    let p0 = module
        .va_product_modes(a, b, 0)
        .map_err(|e| FockError::Precondition(e.to_string()))?;
    let mut zero = Vec::new();
    for (mono, c) in p0.iter() {
        let &[(1, k)] = mono.as_slice() else {
            return Err(FockError::Precondition("a_0 b is not of degree one".into()));
        };
        let (i, j) = alg.label(k);
        let gs = e_to_g(i, j).expect("interval algebra is inside the even subalgebra");
        zero.push((gs, c * &scale));
    }
    let p1 = module
        .va_product_modes(a, b, 1)
        .map_err(|e| FockError::Precondition(e.to_string()))?;
    let one = &p1.get(&Vec::new()) * &scale;
    Ok(ShiftProducts { zero, one })
}

/// The right-hand side of the commutator formula for `[A_{α,m}, A_{β,n}]`, summed
/// over `shifts`. Products with `j = 1` are only allowed at `r = 0`.
fn reconstruct(
    module: &VacuumModule,
    alpha: i32,
    beta: i32,
    m: i32,
    n: i32,
    shifts: &[i32],
) -> Result<TrigElem, FockError> {
    let mut out = TrigElem::zero(TrigKind::A);
    for &r in shifts {
        let p = shift_products(module, alpha, beta, r)?;
        let outer = Scalar::q_pow(r * (m + 1));
        for ((gamma, s), c) in p.zero {
            out.add_raw(gamma, m + n, &(&outer * &c) * &Scalar::q_pow(-s * (m + n)));
        }
        if !p.one.is_zero() {
            if r != 0 {
                return Err(FockError::Precondition(format!(
                    "form term at nonzero shift {r}"
                )));
            }
            if m + n == 0 {
                out.central += &(&Scalar::from_int(m as i64) * &p.one);
            }
        }
    }
    Ok(out)
}

/// Checks, for one pair `(α, β)` on the level-one module:
/// (i) the sine relations for `|m|, |n| <= window` on vectors of degree at most
/// `D - 2 window`;
/// (ii) the commutator formula summed over `r ∈ {0, ±(α+β)}` equals the sine bracket
/// and acts on those vectors as the realized commutator.
///
/// The support of the products is also computed over a wider range of shifts and
/// must lie inside `{0, ±(α+β)}`. With `drop_shift` the term `r = -(α+β)` is
/// omitted from the sum.
pub fn quasi_commutator_check(
    space: &FockSpace,
    alpha: i32,
    beta: i32,
    window: i32,
    drop_shift: bool,
) -> Result<QuasiOutcome, FockError> {
    let d = space.trunc().d as i32;
    let vec_degree = d - 2 * window;
    if vec_degree < 0 {
        return Err(FockError::Precondition(format!(
            "window {window} leaves no vectors at degree bound {d}"
        )));
    }
    let mut out = QuasiOutcome {
        alpha,
        beta,
        support: Vec::new(),
        relation_failure: None,
        reconstruction_failure: None,
    };
    // (i)
    let vectors = monomials_up_to(vec_degree as u32);
    'rel: for m in -window..=window {
        for n in -window..=window {
            for v in &vectors {
                let c = relation_combination(space, (alpha, m), (beta, n), v)?;
                if !c.is_zero() {
                    out.relation_failure = Some(RelationFailure {
                        alpha,
                        m,
                        beta,
                        n,
                        vector: mono_to_string(v),
                    });
                    break 'rel;
                }
            }
        }
    }
    // (ii)
    let s = alpha + beta;
    let reach = s.abs() + 2;
    let w = alpha.abs() + reach + beta.abs() + 1;
    let module = VacuumModule::new(
        IntervalAlg::new(-w, w).map_err(|e| FockError::Precondition(e.to_string()))?,
        Scalar::one(),
    );
    for r in -reach..=reach {
        let p = shift_products(&module, alpha, beta, r)?;
        if !p.zero.is_empty() || !p.one.is_zero() {
            out.support.push(r);
        }
    }
    let mut shifts = vec![s];
    if s != 0 {
        if !drop_shift {
            shifts.push(-s);
        }
        shifts.push(0);
    }
    if let Some(r) = out.support.iter().find(|&&r| r != 0 && r.abs() != s.abs()) {
        out.reconstruction_failure = Some(format!("product at shift {r} outside {{0, ±(α+β)}}"));
        return Ok(out);
    }
    for m in -window..=window {
        for n in -window..=window {
            let predicted = reconstruct(&module, alpha, beta, m, n, &shifts)?;
            let bracket = trig_bracket(
                &TrigElem::generator(TrigKind::A, alpha, m),
                &TrigElem::generator(TrigKind::A, beta, n),
            )
            .expect("same kind");
            if predicted != bracket {
                out.reconstruction_failure = Some(format!(
                    "[A[{alpha},{m}], A[{beta},{n}]]: formula gives {predicted}, bracket is {bracket}"
                ));
                return Ok(out);
            }
            for v in &vectors {
                let raw = raw_mono(v);
                let ab = space.raw_mode(alpha, m, &space.raw_mode(beta, n, &raw)?)?;
                let ba = space.raw_mode(beta, n, &space.raw_mode(alpha, m, &raw)?)?;
                let pre = &space.prefactor(alpha) * &space.prefactor(beta);
                let mut c = Combination::new();
                c.push(pre.clone(), ab);
                c.push(-pre, ba);
                for (&(gamma, k), coef) in predicted.terms.iter() {
                    let img = space.raw_mode(gamma, k, &raw)?;
                    c.push(-(coef * &space.prefactor(gamma)), img);
                }
                c.push(-predicted.central.clone(), raw.clone());
                if !c.is_zero() {
                    out.reconstruction_failure = Some(format!(
                        "formula for [A[{alpha},{m}], A[{beta},{n}]] disagrees with the modes on {}",
                        mono_to_string(v)
                    ));
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

/// Runs [`quasi_commutator_check`] over `|α|, |β| <= bound` and returns the outcomes.
pub fn quasi_commutator_suite(
    space: &FockSpace,
    bound: i32,
    window: i32,
    drop_shift: bool,
) -> Result<Vec<QuasiOutcome>, FockError> {
    let mut out = Vec::new();
    for alpha in -bound..=bound {
        for beta in -bound..=bound {
            out.push(quasi_commutator_check(
                space, alpha, beta, window, drop_shift,
            )?);
        }
    }
    Ok(out)
}
