//! Vanishing of `(ℓ+1)`-fold products of the vertex operator at coinciding
//! arguments on level-`ℓ` modules.
//!
//! On a tensor product of level-one vacua the product `X(z_1) ... X(z_r)` expands
//! over slot assignments `σ`. Operators in different slots commute; two operators
//! in the same slot produce the contraction factor `f(z_j/z_i)` times their normal
//! ordered product. Acting on the vacuum only creation parts survive, so the
//! coefficient of `z^A` is a finite sum over contraction orders `k_ij` of products
//! of creation polynomials `S_n`. This module builds those coefficients exactly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::space::{a_coeff, raw_mul, FockSpace};
use super::tensor::TensorFock;
use super::{mono_to_string, Combination, FockError, Mono, Trunc};
use crate::qring::{LaurentQ, Scalar};
use crate::series::QSeries;

/// Raw tensor vector keyed by one monomial per slot.
pub type RawTensor = BTreeMap<Vec<Mono>, LaurentQ>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishOutcome {
    pub level: u32,
    pub degrees_checked: u32,
    pub witness: Option<String>,
}

impl VanishOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// `[z_1^{A_1} ... z_r^{A_r}]` of `Π_{i<j} g_ij(z_j/z_i) ⊗_slots Π_{σ(i)=s} S_{n_i}(z_i) 1`
/// without the scalars `a_α(u)`; `pair(i, j)` supplies `g_ij` for `i < j`.
pub fn slot_coefficient<'a>(
    space: &FockSpace,
    alpha: i32,
    sigma: &[usize],
    nslots: usize,
    pair: &dyn Fn(usize, usize) -> &'a QSeries,
    a: &[i32],
) -> RawTensor {
    let r = sigma.len();
    let d = space.trunc().d as i32;
    let total: i32 = a.iter().sum();
    let s = space.creation(alpha);
    let pairs: Vec<(usize, usize)> = (0..r)
        .flat_map(|i| ((i + 1)..r).map(move |j| (i, j)))
        .collect();
    let mut out = RawTensor::new();
    if total < 0 || total > d {
        return out;
    }
    let mut ks = vec![0i32; pairs.len()];
    struct Frame<'a, 'b> {
        pair: &'b dyn Fn(usize, usize) -> &'a QSeries,
        a: &'b [i32],
        sigma: &'b [usize],
        nslots: usize,
        d: i32,
        s: &'b [super::RawPoly],
    }
    fn rec(
        idx: usize,
        ks: &mut Vec<i32>,
        pairs: &[(usize, usize)],
        ctx: &Frame<'_, '_>,
        out: &mut RawTensor,
    ) {
        let Frame {
            pair,
            a,
            sigma,
            nslots,
            d,
            s,
        } = *ctx;
        if idx == pairs.len() {
            let mut n: Vec<i32> = a.to_vec();
            let mut coef = LaurentQ::one();
            for (p, &(i, j)) in pairs.iter().enumerate() {
                n[i] += ks[p];
                n[j] -= ks[p];
                coef = &coef * pair(i, j).coeff(ks[p] as usize);
            }
            if coef.is_zero() || n.iter().any(|&x| x < 0 || x > d) {
                return;
            }
            let mut slot_polys: Vec<super::RawPoly> = vec![super::space::raw_one(); nslots];
            for (i, &ni) in n.iter().enumerate() {
                slot_polys[sigma[i]] = raw_mul(&slot_polys[sigma[i]], &s[ni as usize]);
            }
            let mut acc: RawTensor = BTreeMap::new();
            acc.insert(Vec::new(), coef);
            for sp in slot_polys {
                let mut next = RawTensor::new();
                for (key, c) in &acc {
                    for (m, v) in &sp {
                        let mut k2 = key.clone();
                        k2.push(m.clone());
                        *next.entry(k2).or_insert_with(LaurentQ::zero) += &(c * v);
                    }
                }
                acc = next;
            }
            for (k, v) in acc {
                *out.entry(k).or_insert_with(LaurentQ::zero) += &v;
            }
            return;
        }
        let (i, j) = pairs[idx];
        let order = pair(i, j).order() as i32;
        for k in 0..=order.min(d + a.iter().map(|x| x.abs()).sum::<i32>()) {
            if pair(i, j).coeff(k as usize).is_zero() {
                continue;
            }
            ks[idx] = k;
            rec(idx + 1, ks, pairs, ctx, out);
        }
        ks[idx] = 0;
    }
    let ctx = Frame {
        pair,
        a,
        sigma,
        nslots,
        d,
        s: &s[..],
    };
    rec(0, &mut ks, &pairs, &ctx, &mut out);
    out.retain(|_, v| !v.is_zero());
    out
}

/// All assignments of `r` operators to `nslots` slots.
fn assignments(r: usize, nslots: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..nslots).map(move |s| {
                    let mut w = v.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every `A ∈ [lo, hi]^r` with `Σ A = total`.
fn exponent_box(r: usize, lo: i32, hi: i32, total: i32) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    fn rec(r: usize, lo: i32, hi: i32, left: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if cur.len() + 1 == r {
            if (lo..=hi).contains(&left) {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for x in lo..=hi {
            cur.push(x);
            rec(r, lo, hi, left - x, cur, out);
            cur.pop();
        }
    }
    rec(r, lo, hi, total, &mut Vec::new(), &mut out);
    out
}

/// Checks that `Π_{i<j} (1 - q^{2α} z_j/z_i)(1 - q^{-2α} z_j/z_i) X_α(z_1) ... X_α(z_{ℓ+1})`
/// vanishes at `z_1 = ... = z_{ℓ+1}` on the vacuum of the level-`ℓ` module `parts`
/// (one slot per unit of level), for every output degree up to `D`.
///
/// Pair factors are expanded to order `N` and must be polynomials of degree at
/// most `N/2`; the windowed coefficients are summed over the exponent box
/// `[-B, d + B]^{ℓ+1}` with `B = ℓ · max pair degree` after checking that a margin
/// of one around the box carries nothing. With `drop_factor` the factor
/// `(1 - q^{2α} z_2/z_1)` is omitted.
pub fn coincidence_vanish_check(
    alpha: i32,
    parts: &[(u32, usize)],
    trunc: Trunc,
    drop_factor: bool,
) -> Result<VanishOutcome, FockError> {
    if alpha == 0 {
        return Err(FockError::Precondition(
            "coincidence check needs α != 0".into(),
        ));
    }
    let module = TensorFock::new(trunc, parts)?;
    let level = module.level();
    let nslots = module.slots().len();
    let r = nslots + 1;
    let n = trunc.n as usize;
    let a = LaurentQ::q_pow(2 * alpha);
    let ainv = LaurentQ::q_pow(-2 * alpha);
    let f = super::ope::contraction_factor(alpha, alpha, n).exponential;
    let full = QSeries::linear(&a, n).mul(&QSeries::linear(&ainv, n));
    let dropped = QSeries::linear(&ainv, n);
    let prefactor = |i: usize, j: usize| -> &QSeries {
        if drop_factor && (i, j) == (0, 1) {
            &dropped
        } else {
            &full
        }
    };
    let mut outcome = VanishOutcome {
        level,
        degrees_checked: 0,
        witness: None,
    };
    let mut max_deg = 0usize;
    let mut per_sigma = Vec::new();
    for sigma in assignments(r, nslots) {
        let mut table: BTreeMap<(usize, usize), QSeries> = BTreeMap::new();
        for i in 0..r {
            for j in (i + 1)..r {
                let g = if sigma[i] == sigma[j] {
                    prefactor(i, j).mul(&f)
                } else {
                    prefactor(i, j).clone()
                };
                let deg = g.degree().unwrap_or(0);
                if deg > n / 2 {
                    outcome.witness = Some(format!(
                        "pair ({},{}) factor for slots {:?} is not a polynomial: t^{} coefficient {}",
                        i + 1,
                        j + 1,
                        sigma,
                        deg,
                        g.coeff(deg)
                    ));
                    return Ok(outcome);
                }
                max_deg = max_deg.max(deg);
                table.insert((i, j), g);
            }
        }
        let pre = sigma.iter().fold(Scalar::one(), |acc, &s| {
            &acc * &a_coeff(alpha, module.slots()[s])
        });
        per_sigma.push((sigma, table, pre));
    }
    let b = (nslots * max_deg) as i32;
    let space = module.space();
    for d in 0..=(trunc.d as i32) {
        let mut combo: Combination<Vec<Mono>> = Combination::new();
        for (sigma, table, pre) in &per_sigma {
            let pair = |i: usize, j: usize| -> &QSeries { &table[&(i, j)] };
            let mut raw = RawTensor::new();
            for ex in exponent_box(r, -b - 1, d + b + 1, d) {
                let c = slot_coefficient(space, alpha, sigma, nslots, &pair, &ex);
                let inside = ex.iter().all(|&x| -b <= x && x <= d + b);
                if !inside {
                    if !c.is_empty() {
                        outcome.witness = Some(format!(
                            "coefficient at z^{ex:?} outside the window is nonzero"
                        ));
                        return Ok(outcome);
                    }
                    continue;
                }
                for (k, v) in c {
                    *raw.entry(k).or_insert_with(LaurentQ::zero) += &v;
                }
            }
            raw.retain(|_, v| !v.is_zero());
            combo.push(pre.clone(), raw);
        }
        if let Some(k) = combo.first_nonzero() {
            let rendered: Vec<String> = k.iter().map(mono_to_string).collect();
            outcome.witness = Some(format!(
                "degree {d} component is nonzero at {}",
                rendered.join(" ⊗ ")
            ));
            return Ok(outcome);
        }
        outcome.degrees_checked += 1;
    }
    Ok(outcome)
}
