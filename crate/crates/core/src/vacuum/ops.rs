//! Vertex-algebra operations on `V(ℓ,0)`: products `a_j b`, the translation
//! operator and the group action `R_r = q^{-r L(0)} σ_r`.

use serde::{Deserialize, Serialize};

use super::{mono_degree, pbw_monomials, IntervalAlg, PbwMono, PbwVector, VacError, VacuumModule};
use crate::qring::Scalar;

impl VacuumModule {
    /// `a_j b` for generators `a, b` and `j >= -1`, computed as `a(j) b(-1) 1`.
    pub fn va_product_modes(&self, a: usize, b: usize, j: i32) -> Result<PbwVector, VacError> {
        if j < -1 {
            return Err(VacError::Precondition(format!(
                "a_j b needs j >= -1, got {j}"
            )));
        }
        let bv = self.mode(b, -1, &Self::vacuum());
        Ok(self.mode(a, j, &bv))
    }

    /// `𝒟`, determined by `𝒟 1 = 0` and `[𝒟, a(n)] = -n a(n-1)`.
    pub fn d_operator(&self, v: &PbwVector) -> PbwVector {
        let mut out = PbwVector::zero();
        for (mono, c) in v.iter() {
            let word = Self::word_of(mono);
            for i in 0..word.len() {
                let (a, n) = word[i];
                let mut w = word.clone();
                w[i] = (a, n - 1);
                let term = self.apply_word(&w, &Self::vacuum());
                out.add_scaled(&term, &(c * &Scalar::from_int(-n as i64)));
            }
        }
        out
    }

    /// `R_r v = q^{-r deg} σ_r v`, where `σ_r` shifts `E_{m,n}` to `E_{m+r,n+r}`.
    pub fn apply_r(&self, r: i32, v: &PbwVector) -> Result<PbwVector, VacError> {
        let alg = self.alg();
        let mut out = PbwVector::zero();
        for (mono, c) in v.iter() {
            let mut m2 = Vec::with_capacity(mono.len());
            for &(d, a) in mono {
                let (i, j) = alg.label(a);
                let b = alg
                    .index_of(i + r, j + r)
                    .map_err(|_| VacError::WideningRequired {
                        r,
                        m: i + r,
                        n: j + r,
                    })?;
                m2.push((d, b));
            }
            let deg = mono_degree(mono);
            out.add_term(m2, c * &Scalar::q_pow(-r * deg));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RAxiomFailure {
    pub r: i32,
    pub generator: (i32, i32),
    pub mode: i32,
    pub vector: String,
}

/// Checks `R_r a(j) v = q^{rj} (σ_r a)(j) R_r v` for every generator `a` of `A_I`,
/// every PBW monomial `v` over `I` of degree at most `max_degree`, `|r| <= r_bound`
/// and `j ∈ modes`. The computation runs in `V(ℓ,0)` over `I` widened by `r_bound`.
pub fn r_axiom_check(
    lo: i32,
    hi: i32,
    level: Scalar,
    r_bound: i32,
    modes: std::ops::RangeInclusive<i32>,
    max_degree: i32,
) -> Result<Option<RAxiomFailure>, VacError> {
    let base = IntervalAlg::new(lo, hi)?;
    let module = VacuumModule::new(IntervalAlg::new(lo - r_bound, hi + r_bound)?, level);
    let amb = module.alg();
    let embed = |m: &PbwMono| -> PbwMono {
        m.iter()
            .map(|&(d, a)| {
                let (i, j) = base.label(a);
                (
                    d,
                    amb.index_of(i, j)
                        .expect("base is inside the widened interval"),
                )
            })
            .collect()
    };
    let vectors: Vec<PbwMono> = (0..=max_degree)
        .flat_map(|d| pbw_monomials(base.dim(), d))
        .map(|m| {
            let mut e = embed(&m);
            e.sort_by(|x, y| y.cmp(x));
            e
        })
        .collect();
    for r in -r_bound..=r_bound {
        for &(i, j) in base.basis() {
            let a = amb.index_of(i, j)?;
            let sa = amb.index_of(i + r, j + r)?;
            for n in modes.clone() {
                for mono in &vectors {
                    let v = PbwVector::basis(mono.clone());
                    let lhs = module.apply_r(r, &module.mode(a, n, &v))?;
                    let rhs = module
                        .mode(sa, n, &module.apply_r(r, &v)?)
                        .scale(&Scalar::q_pow(r * n));
                    if lhs != rhs {
                        return Ok(Some(RAxiomFailure {
                            r,
                            generator: (i, j),
                            mode: n,
                            vector: super::mono_to_string(amb, mono),
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module() -> VacuumModule {
        VacuumModule::new(IntervalAlg::new(-1, 1).unwrap(), Scalar::param(0))
    }

    #[test]
    fn products_of_generators() {
        let v = module();
        let alg = v.alg();
        let a = alg.index_of(1, -1).unwrap();
        let b = alg.index_of(-1, 1).unwrap();
        let one = VacuumModule::vacuum();
        assert_eq!(v.va_product_modes(a, b, 1).unwrap(), one.scale(v.level()));
        assert!(v.va_product_modes(a, b, 3).unwrap().is_zero());
        // [E_{1,-1}, E_{-1,1}] = E_{1,1} - E_{-1,-1}, i.e. G_{0,1} - G_{0,-1}
        let mut expect = PbwVector::basis(vec![(1, alg.index_of(1, 1).unwrap())]);
        expect.add_term(
            vec![(1, alg.index_of(-1, -1).unwrap())],
            Scalar::from_int(-1),
        );
        assert_eq!(v.va_product_modes(a, b, 0).unwrap(), expect);
        let ab = v.va_product_modes(a, b, -1).unwrap();
        assert_eq!(ab, v.mode(a, -1, &v.mode(b, -1, &one)));
    }

    #[test]
    fn translation_operator() {
        let v = module();
        let one = VacuumModule::vacuum();
        assert!(v.d_operator(&one).is_zero());
        let a = v.alg().index_of(1, -1).unwrap();
        let x = v.mode(a, -1, &one);
        assert_eq!(v.d_operator(&x), v.mode(a, -2, &one));
        // [𝒟, b(n)] = -n b(n-1) on a degree-2 vector
        let b = v.alg().index_of(-1, 1).unwrap();
        let w = v.mode(b, -1, &x);
        for n in -2..=2 {
            let lhs = v
                .d_operator(&v.mode(a, n, &w))
                .sub(&v.mode(a, n, &v.d_operator(&w)));
            let rhs = v.mode(a, n - 1, &w).scale(&Scalar::from_int(-n as i64));
            assert_eq!(lhs, rhs);
        }
        for m in pbw_monomials(v.alg().dim(), 3) {
            let dv = v.d_operator(&PbwVector::basis(m));
            assert!(dv.keys().all(|k| mono_degree(k) == 4));
        }
    }

    #[test]
    fn r_action() {
        let v = VacuumModule::new(IntervalAlg::new(-2, 2).unwrap(), Scalar::param(0));
        let one = VacuumModule::vacuum();
        assert_eq!(v.apply_r(1, &one).unwrap(), one);
        // R_1 G_{1,0}(-1)1 = q^{-1} G_{1,1}(-1)1, with G_{1,0} = E_{1,-1}, G_{1,1} = E_{2,0}
        let g10 = v.alg().index_of(1, -1).unwrap();
        let g11 = v.alg().index_of(2, 0).unwrap();
        let x = v.mode(g10, -1, &one);
        assert_eq!(
            v.apply_r(1, &x).unwrap(),
            PbwVector::single(vec![(1, g11)], Scalar::q_pow(-1))
        );
        let y = v.apply_r(-1, &v.apply_r(1, &x).unwrap()).unwrap();
        assert_eq!(y, x);
        assert!(matches!(
            v.apply_r(2, &x),
            Err(VacError::WideningRequired { .. })
        ));
    }

    #[test]
    fn r_axiom_small() {
        assert_eq!(
            r_axiom_check(0, 2, Scalar::param(0), 1, -1..=2, 2).unwrap(),
            None
        );
    }
}
