//! Vacuum-module suites: singular vectors, graded dimensions, nilpotency and the
//! group-action axiom.

use num_rational::BigRational;
use serde_json::json;

use super::{err_string, Fault, Job, SuiteConfig, Verdict};
use crate::qring::Scalar;
use crate::vacuum::{
    graded_dim_l, graded_dim_v, nilpotency_check_l, r_axiom_check, singular_check, IntervalAlg,
};

/// Root labels `(m, n)` in the interval: `m != n`, `m + n` even.
fn roots(lo: i32, hi: i32) -> Vec<(i32, i32)> {
    let mut out = Vec::new();
    for m in lo..=hi {
        for n in lo..=hi {
            if m != n && (m + n) % 2 == 0 {
                out.push((m, n));
            }
        }
    }
    out
}

pub(super) fn singular_jobs(c: &SuiteConfig) -> Vec<Job<'static>> {
    let (lo, hi) = c.interval;
    let short = c.fault(Fault::SingularPower);
    let mut jobs = Vec::new();
    for &level in &c.levels {
        let power = if short { level } else { level + 1 };
        let probe = level as i32 + 2;
        for (m, n) in roots(lo, hi) {
            jobs.push(Job::new(
                format!("singular/l{level}/E[{m},{n}]"),
                "singular vectors of the vacuum module",
                json!({"level": level, "root": [m, n], "interval": [lo, hi], "power": power, "probe_degree": probe}),
                move || {
                    let out = singular_check(level, (m, n), (lo, hi), probe, power).map_err(err_string)?;
                    Ok(Verdict::from_witness(out.witness))
                },
            ));
        }
    }
    jobs
}

/// Coefficients of `Π_{n>=1} (1 - t^n)^{-dim}` up to `t^max`, by multiplying in
/// one binomial series per `n`.
pub(crate) fn product_formula(dim: usize, max: usize) -> Vec<u128> {
    let mut series = vec![0u128; max + 1];
    series[0] = 1;
    for n in 1..=max {
        // (1 - t^n)^{-dim} = Σ_k C(dim + k - 1, k) t^{nk}
        let mut factor = vec![0u128; max / n + 1];
        factor[0] = 1;
        for k in 1..factor.len() {
            factor[k] = factor[k - 1] * (dim + k - 1) as u128 / k as u128;
        }
        let mut next = vec![0u128; max + 1];
        for (i, &a) in series.iter().enumerate() {
            for (k, &f) in factor.iter().enumerate() {
                if i + n * k <= max {
                    next[i + n * k] += a * f;
                }
            }
        }
        series = next;
    }
    series
}

fn v_dims_job(id: &str, lo: i32, hi: i32, max: i32, expected: Option<Vec<u128>>) -> Job<'static> {
    Job::new(
        id.to_string(),
        "PBW basis of the vacuum module",
        json!({"interval": [lo, hi], "max_degree": max}),
        move || {
            let alg = IntervalAlg::new(lo, hi).map_err(err_string)?;
            let dims: Vec<u128> = (0..=max).map(|d| graded_dim_v(&alg, d) as u128).collect();
            let oracle = product_formula(alg.dim(), max as usize);
            let mut w = None;
            if dims != oracle {
                w = Some(format!("dimensions {dims:?}, product formula {oracle:?}"));
            } else if let Some(e) = &expected {
                if &dims != e {
                    w = Some(format!("dimensions {dims:?}, expected {e:?}"));
                }
            }
            Ok(Verdict::from_witness(w).detail("dims", json!(dims)))
        },
    )
}

pub(super) fn dims_jobs<'a>(c: &'a SuiteConfig, q: &'a [BigRational]) -> Vec<Job<'a>> {
    let (lo, hi) = c.interval;
    let drop = c.fault(Fault::DropSingular);
    let mut jobs = vec![
        v_dims_job("dims/V/I=[0,1]", 0, 1, 4, Some(vec![1, 2, 5, 10, 20])),
        v_dims_job(&format!("dims/V/I=[{lo},{hi}]"), lo, hi, 3, None),
    ];
    for &level in &c.levels {
        let top = level as i32 + 1;
        jobs.push(Job::new(
            format!("dims/L/l{level}/I=[{lo},{hi}]"),
            "simple quotient of the vacuum module",
            json!({"level": level, "interval": [lo, hi], "max_degree": top, "q_specs": c.q_specs}),
            move || {
                let alg = IntervalAlg::new(lo, hi).map_err(err_string)?;
                let mut l_dims = Vec::new();
                let mut v_dims = Vec::new();
                for d in 0..=top {
                    l_dims.push(graded_dim_l((lo, hi), level, d, q, drop).map_err(err_string)?);
                    v_dims.push(graded_dim_v(&alg, d));
                }
                let mut w = None;
                for d in 0..top as usize {
                    if l_dims[d] != v_dims[d] {
                        w = Some(format!(
                            "L and V differ below the singular degree: {} vs {} at d = {d}",
                            l_dims[d], v_dims[d]
                        ));
                        break;
                    }
                }
                let t = top as usize;
                if w.is_none() && l_dims[t] >= v_dims[t] {
                    w = Some(format!(
                        "dim L_{top} = {} is not below dim V_{top} = {}",
                        l_dims[t], v_dims[t]
                    ));
                }
                Ok(Verdict::from_witness(w)
                    .detail("dims_L", json!(l_dims))
                    .detail("dims_V", json!(v_dims)))
            },
        ));
    }
    jobs
}

pub(super) fn nilpotency_jobs<'a>(c: &'a SuiteConfig, q: &'a [BigRational]) -> Vec<Job<'a>> {
    let (lo, hi) = c.interval;
    let window = c.nilpotency_window;
    let level = *c.levels.iter().min().expect("validated nonempty");
    roots(lo, hi)
        .into_iter()
        .map(|(m, n)| {
            Job::new(
                format!("vanish/nilpotent/l{level}/E[{m},{n}]"),
                "nilpotency of root fields on the simple quotient",
                json!({"level": level, "root": [m, n], "interval": [lo, hi], "window": window, "power": level + 1}),
                move || {
                    let out = nilpotency_check_l(level, (m, n), (lo, hi), window, level + 1, q)
                        .map_err(err_string)?;
                    Ok(Verdict::from_witness(out.witness)
                        .detail("coefficients_checked", out.coefficients_checked))
                },
            )
        })
        .collect()
}

pub(super) fn r_axiom_jobs(c: &SuiteConfig) -> Vec<Job<'static>> {
    let (lo, hi) = c.interval;
    let (r_bound, (j_lo, j_hi), deg) = (c.r_bound, c.r_modes, c.r_degree);
    vec![Job::new(
        format!("quasi-comm/r-axiom/I=[{lo},{hi}]"),
        "group action on the vacuum vertex algebra",
        json!({"level": "symbolic", "interval": [lo, hi], "r_bound": r_bound, "modes": [j_lo, j_hi], "max_degree": deg}),
        move || {
            let out = r_axiom_check(lo, hi, Scalar::param(0), r_bound, j_lo..=j_hi, deg)
                .map_err(err_string)?;
            Ok(Verdict::from_witness(out.map(|f| {
                format!(
                    "R_{} E[{},{}]({}) differs from the shifted mode on {}",
                    f.r, f.generator.0, f.generator.1, f.mode, f.vector
                )
            })))
        },
    )]
}
