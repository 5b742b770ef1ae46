//! Fock-module suites: relations, operator products, coincidence vanishing, the
//! commutator formula and vacuum weights.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::json;

use super::{err_string, Fault, Job, SuiteConfig, Verdict};
use crate::fock::ope::{contraction_factor_with, locality_check, ope_check_with};
use crate::fock::relations::{probe_shift, relation_check, small_parts, weight_check};
use crate::fock::{coincidence_vanish_check, quasi_commutator_check, raw_mono, FockSpace, Trunc};

/// The mode shift chosen by the probe, cached per truncation.
fn probed_shift(trunc: Trunc) -> Result<i32, String> {
    static CACHE: OnceLock<Mutex<HashMap<Trunc, i32>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&s) = cache.lock().expect("probe cache").get(&trunc) {
        return Ok(s);
    }
    let s = probe_shift(trunc, 0).map_err(err_string)?;
    cache.lock().expect("probe cache").insert(trunc, s);
    Ok(s)
}

fn trunc_json(t: Trunc) -> serde_json::Value {
    json!({"K": t.k, "D": t.d, "N": t.n})
}

pub(super) fn relation_jobs(c: &SuiteConfig) -> Vec<Job<'static>> {
    let trunc = c.trunc;
    let (bound, window) = (c.fock_alpha_bound, c.fock_window);
    let forced = c.fault(Fault::ModeShift).then_some(1);
    let vec_degree = trunc.d - 2 * window as u32;
    vec![
        Job::new(
            "fock-relations/probe",
            "mode convention of the realized fields",
            json!({"trunc": trunc_json(trunc), "candidates": [0, 1]}),
            move || Ok(Verdict::pass().detail("shift", probed_shift(trunc)?)),
        ),
        Job::new(
            "fock-relations/relations",
            "level-one realization of the sine algebra",
            json!({"trunc": trunc_json(trunc), "alpha_bound": bound, "window": window, "vector_degree": vec_degree}),
            move || {
                let s = match forced {
                    Some(s) => s,
                    None => probed_shift(trunc)?,
                };
                let space = FockSpace::new(trunc, 0).map_err(err_string)?.with_shift(s);
                let out = relation_check(&space, bound, window, vec_degree).map_err(err_string)?;
                Ok(Verdict::from_witness(out.map(|f| f.to_string())).detail("shift", s))
            },
        ),
    ]
}

pub(super) fn ope_jobs(c: &SuiteConfig) -> Vec<Job<'static>> {
    let trunc = c.trunc;
    let n = trunc.n as usize;
    let bound = c.ope_alpha_bound;
    let perturb = if c.fault(Fault::ContractionShift) {
        1
    } else {
        0
    };
    let pairs: Vec<(i32, i32)> = [-2, -1, 1, 2]
        .into_iter()
        .flat_map(|a| [-2, -1, 1, 2].into_iter().map(move |b| (a, b)))
        .collect();
    let mut jobs = vec![Job::new(
        "ope/contraction",
        "contraction factor of two vertex operators",
        json!({"alpha_bound": bound, "order": n, "pole_shift": perturb}),
        move || {
            for a in -bound..=bound {
                for b in -bound..=bound {
                    let f = contraction_factor_with(a, b, n, perturb);
                    if let Some(k) = f.first_difference() {
                        return Ok(Verdict::from_witness(Some(format!(
                            "alpha = {a}, beta = {b}: expansions differ at t^{k}: {} vs {}",
                            f.exponential.coeff(k),
                            f.rational.coeff(k)
                        ))));
                    }
                }
            }
            Ok(Verdict::pass())
        },
    )];
    for (name, mono) in [("1", vec![]), ("x1", vec![1u16]), ("x2", vec![0u16, 1])] {
        let pairs = pairs.clone();
        jobs.push(Job::new(
            format!("ope/product/v={name}"),
            "operator product of two vertex operators",
            json!({"vector": name, "trunc": trunc_json(trunc), "pairs": pairs, "pole_shift": perturb}),
            move || {
                let v = raw_mono(&mono);
                for &(a, b) in &pairs {
                    if let Some(w) = ope_check_with(a, b, &v, trunc, perturb).map_err(err_string)? {
                        return Ok(Verdict::from_witness(Some(format!("alpha = {a}, beta = {b}: {w}"))));
                    }
                }
                Ok(Verdict::pass())
            },
        ));
    }
    jobs.push(Job::new(
        "ope/locality",
        "locality of the vertex operators",
        json!({"vector": "1", "trunc": trunc_json(trunc), "pairs": pairs}),
        move || {
            let v = raw_mono(&Vec::new());
            let mut checked = 0;
            for &(a, b) in &pairs {
                match locality_check(a, b, &v, trunc).map_err(err_string)? {
                    Ok(k) => checked += k,
                    Err(w) => {
                        return Ok(Verdict::from_witness(Some(format!(
                            "alpha = {a}, beta = {b}: {w}"
                        ))))
                    }
                }
            }
            Ok(Verdict::pass().detail("coefficients_checked", checked))
        },
    ));
    jobs
}

pub(super) fn vanish_jobs(c: &SuiteConfig) -> Vec<Job<'static>> {
    let drop = c.fault(Fault::DropFactor);
    let cases = [
        (1, vec![(1u32, 0usize)], c.trunc),
        (2, vec![(1, 0)], c.trunc),
        (1, vec![(1, 0), (1, 1)], c.tensor_trunc),
    ];
    cases
        .into_iter()
        .map(|(alpha, parts, trunc)| {
            let level: u32 = parts.iter().map(|p| p.0).sum();
            Job::new(
                format!("vanish/coincidence/l{level}/alpha={alpha}"),
                "vanishing of coincident vertex-operator products",
                json!({"alpha": alpha, "parts": parts, "trunc": trunc_json(trunc), "drop_factor": drop}),
                move || {
                    let out = coincidence_vanish_check(alpha, &parts, trunc, drop).map_err(err_string)?;
                    Ok(Verdict::from_witness(out.witness).detail("degrees_checked", out.degrees_checked))
                },
            )
        })
        .collect()
}

pub(super) fn quasi_jobs(c: &SuiteConfig) -> Vec<Job<'static>> {
    let trunc = c.trunc;
    let (bound, window) = (c.fock_alpha_bound, c.fock_window);
    let drop = c.fault(Fault::DropShift);
    let space: Arc<OnceLock<Result<FockSpace, String>>> = Arc::new(OnceLock::new());
    let mut jobs = Vec::new();
    for alpha in -bound..=bound {
        for beta in -bound..=bound {
            let space = Arc::clone(&space);
            jobs.push(Job::new(
                format!("quasi-comm/pair/{alpha:+},{beta:+}"),
                "commutator formula from the quasi-module structure",
                json!({"alpha": alpha, "beta": beta, "window": window, "trunc": trunc_json(trunc), "drop_shift": drop}),
                move || {
                    let space = space
                        .get_or_init(|| {
                            let s = probed_shift(trunc)?;
                            Ok(FockSpace::new(trunc, 0).map_err(err_string)?.with_shift(s))
                        })
                        .as_ref()
                        .map_err(Clone::clone)?;
                    let out = quasi_commutator_check(space, alpha, beta, window, drop).map_err(err_string)?;
                    let w = match (&out.relation_failure, &out.reconstruction_failure) {
                        (Some(f), _) => Some(f.to_string()),
                        (None, Some(r)) => Some(r.clone()),
                        (None, None) => None,
                    };
                    Ok(Verdict::from_witness(w)
                        .detail("support", json!(out.support))
                        .detail("shift", space.shift()))
                },
            ));
        }
    }
    jobs
}

pub(super) fn weight_jobs(c: &SuiteConfig) -> Vec<Job<'static>> {
    let trunc = c.trunc;
    let bound = c.weight_bound;
    let swap = c.fault(Fault::WeightSwap);
    small_parts()
        .into_iter()
        .map(|parts| {
            let tag: Vec<String> = parts
                .iter()
                .map(|(n, u)| format!("{n}u{}", u + 1))
                .collect();
            Job::new(
                format!("weights/{}", tag.join("+")),
                "vacuum weights of tensor products of Fock modules",
                json!({"parts": parts, "bound": bound, "trunc": trunc_json(trunc), "swap": swap}),
                move || {
                    Ok(Verdict::from_witness(
                        weight_check(trunc, &parts, bound, swap).map_err(err_string)?,
                    ))
                },
            )
        })
        .collect()
}
