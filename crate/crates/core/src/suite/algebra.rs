//! Jacobi and isomorphism suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{err_string, Fault, Job, SuiteConfig, Verdict};
use crate::liealg::covariant::{nonzero_shifts, shift_window};
use crate::liealg::dq::dq_check;
use crate::liealg::gl::{e, sigma, tau};
use crate::liealg::jacobi::{jacobi_check, skew_check, AffCtx, CovCtx, GlCtx, LieBracket, TrigCtx};
use crate::liealg::{
    gl_bracket, gl_form, iso_check, AffElem, CovElem, CovSetup, GlElem, IsoDictionary, StructureFn,
    TrigElem, TrigKind,
};
use crate::qring::Scalar;

const COEFFS: [i64; 4] = [-2, -1, 1, 2];

fn coeff(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_int(COEFFS[rng.gen_range(0..COEFFS.len())])
}

fn label(rng: &mut ChaCha8Rng, b: i32) -> (i32, i32) {
    (rng.gen_range(-b..=b), rng.gen_range(-b..=b))
}

/// One or two generators with small integer coefficients.
fn random_trig(rng: &mut ChaCha8Rng, kind: TrigKind, b: i32) -> TrigElem {
    let mut x = TrigElem::zero(kind);
    for _ in 0..rng.gen_range(1..=2) {
        let (a, m) = label(rng, b);
        x = x.add(&TrigElem::generator(kind, a, m).scale(&coeff(rng)));
    }
    x
}

fn random_cov(rng: &mut ChaCha8Rng, setup: CovSetup, b: i32) -> CovElem {
    let mut x = CovElem::zero(setup);
    for _ in 0..rng.gen_range(1..=2) {
        let (a, p) = label(rng, b);
        x.add_rep(a, p, coeff(rng));
    }
    x
}

fn random_gl(rng: &mut ChaCha8Rng, b: i32) -> GlElem {
    let mut x = GlElem::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let (m, n) = label(rng, b);
        x.add_term((m, n), coeff(rng));
    }
    x
}

fn gl_string(x: &GlElem) -> String {
    let parts: Vec<String> = x
        .iter()
        .map(|((m, n), c)| format!("({c})*E[{m},{n}]"))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Skew-symmetry on every pair and Jacobi on every triple drawn from `gen`.
fn triples<C, F>(ctx: &C, n: usize, mut gen: F) -> Result<Option<String>, String>
where
    C: LieBracket,
    C::Elem: std::fmt::Display,
    F: FnMut() -> C::Elem,
{
    for i in 0..n {
        let (x, y, z) = (gen(), gen(), gen());
        if let Some(r) = skew_check(ctx, &x, &y).map_err(err_string)? {
            return Ok(Some(format!(
                "triple {i}: [x,y]+[y,x] = {r} for x = {x}, y = {y}"
            )));
        }
        if let Some(r) = jacobi_check(ctx, &x, &y, &z).map_err(err_string)? {
            return Ok(Some(format!(
                "triple {i}: Jacobi residual {r} for x = {x}, y = {y}, z = {z}"
            )));
        }
    }
    Ok(None)
}

fn cov_name(i: usize) -> &'static str {
    ["type-a", "type-b", "type-d", "tau-fixed"][i]
}

pub(super) fn jacobi_jobs(c: &SuiteConfig) -> Vec<Job<'static>> {
    let seed = c.seed;
    let b = c.jacobi_box;
    let n = c.jacobi_triples;
    let mut jobs = Vec::new();
    let structure = if c.fault(Fault::TrigCosine) {
        StructureFn::Cosine
    } else {
        StructureFn::Sine
    };
    for (k, kind) in TrigKind::ALL.into_iter().enumerate() {
        jobs.push(Job::new(
            format!("jacobi/trig-{kind}"),
            "trigonometric Lie algebra bracket",
            json!({"kind": kind.to_string(), "box": b, "triples": n, "seed": seed}),
            move || {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
                let ctx = TrigCtx { structure };
                triples(&ctx, n, || random_trig(&mut rng, kind, b)).map(Verdict::from_witness)
            },
        ));
    }
    let reduce = c.fault(Fault::ReductionMismatch);
    for (k, setup) in CovSetup::all().into_iter().enumerate() {
        let setup = if reduce {
            setup.with_reduction_exponent(2 * setup.char_exp)
        } else {
            setup
        };
        jobs.push(Job::new(
            format!("jacobi/cov-{}", cov_name(k)),
            "covariant algebra bracket",
            json!({"setup": setup.label(), "box": b, "triples": n, "seed": seed}),
            move || {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(10 + k as u64));
                triples(&CovCtx, n, || random_cov(&mut rng, setup, b)).map(Verdict::from_witness)
            },
        ));
    }
    jobs.push(Job::new(
        "jacobi/gl",
        "gl(infinity) bracket, invariant form and automorphisms",
        json!({"box": b, "triples": n, "seed": seed}),
        move || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(20));
            for i in 0..n {
                let (x, y, z) = (random_gl(&mut rng, b), random_gl(&mut rng, b), random_gl(&mut rng, b));
                if let Some(res) = jacobi_check(&GlCtx, &x, &y, &z).map_err(err_string)? {
                    return Ok(Verdict::from_witness(Some(format!(
                        "triple {i}: Jacobi residual {}",
                        gl_string(&res)
                    ))));
                }
                if gl_form(&gl_bracket(&x, &y), &z) != gl_form(&x, &gl_bracket(&y, &z)) {
                    return Ok(Verdict::from_witness(Some(format!(
                        "triple {i}: form not invariant on x = {}, y = {}, z = {}",
                        gl_string(&x),
                        gl_string(&y),
                        gl_string(&z)
                    ))));
                }
                let r = rng.gen_range(-b..=b);
                let xy = gl_bracket(&x, &y);
                let sigma_ok = sigma(r, &xy) == gl_bracket(&sigma(r, &x), &sigma(r, &y))
                    && gl_form(&sigma(r, &x), &sigma(r, &y)) == gl_form(&x, &y);
                let tau_ok = tau(&xy) == gl_bracket(&tau(&x), &tau(&y))
                    && gl_form(&tau(&x), &tau(&y)) == gl_form(&x, &y);
                if !sigma_ok || !tau_ok {
                    let which = if sigma_ok { "tau".to_string() } else { format!("sigma_{r}") };
                    return Ok(Verdict::from_witness(Some(format!(
                        "triple {i}: {which} is not a form-preserving automorphism on x = {}, y = {}",
                        gl_string(&x),
                        gl_string(&y)
                    ))));
                }
            }
            Ok(Verdict::pass())
        },
    ));
    jobs.push(Job::new(
        "jacobi/affine",
        "affinization of gl(infinity)",
        json!({"box": b, "triples": n, "seed": seed}),
        move || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(21));
            let mut gen = || {
                let mut x = AffElem::zero();
                for _ in 0..rng.gen_range(1..=2) {
                    let (m, n) = label(&mut rng, b);
                    let p = rng.gen_range(-b..=b);
                    x = x.add(&AffElem::loop_elem(&e(m, n), p).scale(&coeff(&mut rng)));
                }
                x
            };
            triples(&AffCtx, n, &mut gen).map(Verdict::from_witness)
        },
    ));
    jobs.push(Job::new(
        "jacobi/shift-window",
        "finite support of shifted brackets",
        json!({"box": b, "pairs": n, "seed": seed}),
        move || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(22));
            for _ in 0..n {
                let (x, y) = (random_gl(&mut rng, b), random_gl(&mut rng, b));
                // random terms can cancel to zero
                let Some((lo, hi)) = shift_window(&x, &y) else {
                    continue;
                };
                let margin = 2 * b + 2;
                let outside: Vec<i32> = nonzero_shifts(&x, &y, lo - margin, hi + margin)
                    .into_iter()
                    .filter(|r| !(lo..=hi).contains(r))
                    .collect();
                if let Some(r) = outside.first() {
                    return Ok(Verdict::from_witness(Some(format!(
                        "shift {r} outside window [{lo},{hi}] is nonzero for a = {}, b = {}",
                        gl_string(&x),
                        gl_string(&y)
                    ))));
                }
            }
            Ok(Verdict::pass())
        },
    ));
    let qb = c.r#box;
    jobs.push(Job::new(
        "jacobi/dq",
        "quantum torus algebra and the sine algebra",
        json!({"box": qb}),
        move || {
            Ok(Verdict::from_witness(
                dq_check(qb).map_err(err_string)?.map(|(a, b)| {
                    format!(
                        "translation fails on T[{},{}], T[{},{}]",
                        a.0, a.1, b.0, b.1
                    )
                }),
            ))
        },
    ));
    jobs
}

fn iso_anchor(d: IsoDictionary) -> &'static str {
    match d {
        IsoDictionary::A => "sine algebra as covariant algebra",
        IsoDictionary::B => "type B algebra as covariant algebra",
        IsoDictionary::CtoB => "type C algebra through type B",
        IsoDictionary::D => "type D algebra as covariant algebra",
        IsoDictionary::DTau => "type D algebra over the tau-fixed subalgebra",
    }
}

pub(super) fn iso_jobs(c: &SuiteConfig) -> Vec<Job<'static>> {
    let b = c.r#box;
    let char_exp = if c.fault(Fault::CharacterSquare) {
        2
    } else {
        1
    };
    IsoDictionary::ALL
        .into_iter()
        .map(|d| {
            Job::new(
                format!("iso/{d}"),
                iso_anchor(d),
                json!({"dictionary": d.name(), "box": b, "character_exponent": char_exp}),
                move || {
                    let out = iso_check(d, b, char_exp).map_err(err_string)?;
                    let w = out.mismatch.map(|m| {
                        format!(
                            "pair {:?}, {:?}: image of bracket {} vs bracket of images {}",
                            m.left, m.right, m.image_of_bracket, m.bracket_of_images
                        )
                    });
                    Ok(Verdict::from_witness(w).detail("pairs_checked", out.pairs_checked))
                },
            )
        })
        .collect()
}
