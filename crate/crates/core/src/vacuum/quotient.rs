//! The submodule `J'` generated by the singular vectors and the graded quotient
//! `L(ℓ,0) = V(ℓ,0)/J'`, with ranks computed at rational specializations of `q`.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::singular::singular_vector;
use super::{
    graded_dim_v, mono_degree, mono_to_string, pbw_monomials, IntervalAlg, PbwMono, PbwVector,
    VacError, VacuumModule,
};
use crate::qring::Scalar;
use crate::rank::{Echelon, SparseVec};

type Blocks = BTreeMap<Vec<i32>, Echelon<PbwMono>>;

/// `J'` in a fixed interval and integer level, built degree by degree.
///
/// `S = U(g) W` is the span of the singular vectors `W` under zero modes, and
/// `J'_d` is spanned by negative-mode PBW words of degree `d - (ℓ+1)` applied to `S`.
/// Each degree is stored as echelon forms per Cartan weight, one set per
/// specialization of `q`.
pub struct JPrime {
    module: VacuumModule,
    level: u32,
    q_specs: Vec<BigRational>,
    generators: Vec<PbwVector>,
    degrees: HashMap<i32, Vec<Blocks>>,
}

impl JPrime {
    /// With `drop_singular` the generating set is empty, so `L = V`.
    pub fn new(
        (lo, hi): (i32, i32),
        level: u32,
        q_specs: &[BigRational],
        drop_singular: bool,
    ) -> Result<Self, VacError> {
        if level == 0 {
            return Err(VacError::Precondition(
                "J' needs a positive integer level".into(),
            ));
        }
        if q_specs.len() < 2 {
            return Err(VacError::Precondition(
                "need at least two specializations of q".into(),
            ));
        }
        let alg = IntervalAlg::new(lo, hi)?;
        let module = VacuumModule::new(alg, Scalar::from_int(level as i64));
        let mut j = Self {
            module,
            level,
            q_specs: q_specs.to_vec(),
            generators: Vec::new(),
            degrees: HashMap::new(),
        };
        if !drop_singular {
            j.close_generators()?;
        }
        Ok(j)
    }

    pub fn module(&self) -> &VacuumModule {
        &self.module
    }

    /// Basis of `S`.
    pub fn generators(&self) -> &[PbwVector] {
        &self.generators
    }

    fn specialize(&self, v: &PbwVector, q0: &BigRational) -> Result<SparseVec<PbwMono>, VacError> {
        v.iter()
            .map(|(m, c)| {
                c.specialize(q0, &[])
                    .map(|x| (m.clone(), x))
                    .map_err(|e| VacError::Specialization(e.to_string()))
            })
            .collect()
    }

    fn weight_of(&self, v: &PbwVector) -> Option<Vec<i32>> {
        v.keys().next().map(|m| self.module.alg().weight(m))
    }

    fn close_generators(&mut self) -> Result<(), VacError> {
        let alg = self.module.alg();
        let mut blocks = Blocks::new();
        let mut queue: Vec<PbwVector> = alg
            .roots()
            .into_iter()
            .map(|a| singular_vector(&self.module, a, self.level + 1))
            .collect();
        let q0 = self.q_specs[0].clone();
        while let Some(v) = queue.pop() {
            let Some(w) = self.weight_of(&v) else {
                continue;
            };
            let sv = self.specialize(&v, &q0)?;
            if blocks.entry(w).or_default().insert(sv) {
                for a in 0..alg.dim() {
                    let x = self.module.mode(a, 0, &v);
                    if !x.is_zero() {
                        queue.push(x);
                    }
                }
                self.generators.push(v);
            }
        }
        Ok(())
    }

    fn ensure_degree(&mut self, d: i32) -> Result<(), VacError> {
        if self.degrees.contains_key(&d) {
            return Ok(());
        }
        let mut per_weight: Vec<Blocks> = vec![Blocks::new(); self.q_specs.len()];
        let base = d - (self.level as i32 + 1);
        if base >= 0 && !self.generators.is_empty() {
            let words = pbw_monomials(self.module.alg().dim(), base);
            for mu in &words {
                let word = VacuumModule::word_of(mu);
                for s in &self.generators {
                    let w = self.module.apply_word(&word, s);
                    let Some(wt) = self.weight_of(&w) else {
                        continue;
                    };
                    for (i, q0) in self.q_specs.iter().enumerate() {
                        let sv = self.specialize(&w, q0)?;
                        per_weight[i].entry(wt.clone()).or_default().insert(sv);
                    }
                }
            }
        }
        self.degrees.insert(d, per_weight);
        Ok(())
    }

    /// `dim J'_d`, required to agree across the specializations.
    pub fn rank(&mut self, d: i32) -> Result<usize, VacError> {
        self.ensure_degree(d)?;
        let ranks: Vec<usize> = self.degrees[&d]
            .iter()
            .map(|b| b.values().map(|e| e.rank()).sum())
            .collect();
        if ranks.windows(2).any(|w| w[0] != w[1]) {
            return Err(VacError::SpecializationDisagreement(ranks));
        }
        Ok(ranks[0])
    }

    /// Whether `v`, homogeneous of degree `d`, lies in `J'_d`.
    pub fn contains(&mut self, v: &PbwVector, d: i32) -> Result<bool, VacError> {
        if v.is_zero() {
            return Ok(true);
        }
        self.ensure_degree(d)?;
        let alg = self.module.alg();
        let mut answers = Vec::new();
        for (i, q0) in self.q_specs.iter().enumerate() {
            let blocks = &self.degrees[&d][i];
            let mut by_weight: BTreeMap<Vec<i32>, SparseVec<PbwMono>> = BTreeMap::new();
            for (m, c) in v.iter() {
                let x = c
                    .specialize(q0, &[])
                    .map_err(|e| VacError::Specialization(e.to_string()))?;
                by_weight
                    .entry(alg.weight(m))
                    .or_default()
                    .insert(m.clone(), x);
            }
            let inside = by_weight.into_iter().all(|(w, sv)| match blocks.get(&w) {
                Some(e) => e.contains(sv),
                None => sv
                    .values()
                    .all(|x| x == &BigRational::from_integer(0.into())),
            });
            answers.push(inside);
        }
        if answers.windows(2).any(|w| w[0] != w[1]) {
            return Err(VacError::SpecializationDisagreement(
                answers.iter().map(|&b| b as usize).collect(),
            ));
        }
        Ok(answers[0])
    }
}

/// `dim L(ℓ,0)_d = dim V_d - dim J'_d` over the interval `[lo, hi]`.
pub fn graded_dim_l(
    interval: (i32, i32),
    level: u32,
    d: i32,
    q_specs: &[BigRational],
    drop_singular: bool,
) -> Result<usize, VacError> {
    let mut j = JPrime::new(interval, level, q_specs, drop_singular)?;
    let rank = j.rank(d)?;
    Ok(graded_dim_v(j.module().alg(), d) - rank)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotencyOutcome {
    pub root: (i32, i32),
    pub power: u32,
    pub coefficients_checked: usize,
    pub witness: Option<String>,
}

impl NilpotencyOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Non-decreasing tuples of length `k` with entries in `[lo, hi]` and sum `total`,
/// with the number of their distinct orderings.
fn mode_tuples(k: u32, lo: i32, hi: i32, total: i32) -> Vec<(Vec<i32>, u64)> {
    fn rec(k: u32, lo: i32, hi: i32, left: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if k == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for x in lo..=hi {
            if x * k as i32 > left {
                break;
            }
            cur.push(x);
            rec(k - 1, x, hi, left - x, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(k, lo, hi, total, &mut Vec::new(), &mut raw);
    let fact = |n: u64| (1..=n).product::<u64>();
    raw.into_iter()
        .map(|t| {
            let mut counts: BTreeMap<i32, u64> = BTreeMap::new();
            for &x in &t {
                *counts.entry(x).or_default() += 1;
            }
            let perms = fact(t.len() as u64) / counts.values().map(|&c| fact(c)).product::<u64>();
            (t, perms)
        })
        .collect()
}

/// Checks that every coefficient of `a(x)^{power}` with total mode sum in
/// `[-window, window]` maps the degree `<= window` part of `L(ℓ,0)` into `J'`, for
/// `a = E_{m,n}` with `m != n`. `power` is `ℓ + 1` for the genuine statement.
///
/// The modes of `a` commute, so the coefficient of total mode `N` is
/// `Σ a(n_1) ... a(n_p)` over tuples with `Σ n_i = N`; a tuple containing a mode
/// above the degree of `v` kills `v`.
pub fn nilpotency_check_l(
    level: u32,
    (m, n): (i32, i32),
    interval: (i32, i32),
    window: i32,
    power: u32,
    q_specs: &[BigRational],
) -> Result<NilpotencyOutcome, VacError> {
    if m == n {
        return Err(VacError::Precondition(
            "nilpotency needs a root vector (α != 0)".into(),
        ));
    }
    let mut j = JPrime::new(interval, level, q_specs, false)?;
    let a = j.module().alg().index_of(m, n)?;
    let dim = j.module().alg().dim();
    let mut out = NilpotencyOutcome {
        root: (m, n),
        power,
        coefficients_checked: 0,
        witness: None,
    };
    for deg in 0..=window {
        for mono in pbw_monomials(dim, deg) {
            let v = PbwVector::basis(mono.clone());
            for total in -window..=window {
                let e = deg - total;
                if e < 0 {
                    continue;
                }
                let lo = total - (power as i32 - 1) * deg;
                let mut w = PbwVector::zero();
                for (tuple, perms) in mode_tuples(power, lo, deg, total) {
                    let word: Vec<(usize, i32)> = tuple.iter().rev().map(|&k| (a, k)).collect();
                    let x = j.module().apply_word(&word, &v);
                    w.add_scaled(&x, &Scalar::from_int(perms as i64));
                }
                debug_assert!(w.keys().all(|k| mono_degree(k) == e));
                out.coefficients_checked += 1;
                if !j.contains(&w, e)? {
                    let alg = j.module().alg();
                    out.witness = Some(format!(
                        "coefficient with mode sum {total} of E[{m},{n}](x)^{power} on {} is not in J'",
                        mono_to_string(alg, &mono)
                    ));
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}
