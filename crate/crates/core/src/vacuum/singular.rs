//! Singular vectors `E_{m,n}(-1)^{ℓ+1} 1` of `V(ℓ,0)`.

use serde::{Deserialize, Serialize};

use super::{vector_to_string, IntervalAlg, PbwVector, VacError, VacuumModule};
use crate::qring::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularOutcome {
    pub level: u32,
    pub root: (i32, i32),
    pub power: u32,
    pub witness: Option<String>,
}

impl SingularOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// `E_{m,n}(-1)^p 1`.
pub fn singular_vector(module: &VacuumModule, a: usize, p: u32) -> PbwVector {
    (0..p).fold(VacuumModule::vacuum(), |v, _| module.mode(a, -1, &v))
}

/// Checks that `v = E_{m,n}(-1)^{power} 1` in `V(ℓ,0)` over `[lo, hi]` is killed by
/// every `a(j)` with `1 <= j <= probe_degree`, and that every Cartan `E_{p,p}(0)`
/// acts on `v` by a scalar. `power` is `ℓ + 1` for the genuine singular vector.
pub fn singular_check(
    level: u32,
    (m, n): (i32, i32),
    (lo, hi): (i32, i32),
    probe_degree: i32,
    power: u32,
) -> Result<SingularOutcome, VacError> {
    if m == n {
        return Err(VacError::Precondition(
            "singular vectors need m != n".into(),
        ));
    }
    let alg = IntervalAlg::new(lo, hi)?;
    let a = alg.index_of(m, n)?;
    let module = VacuumModule::new(alg, Scalar::from_int(level as i64));
    let v = singular_vector(&module, a, power);
    let mut out = SingularOutcome {
        level,
        root: (m, n),
        power,
        witness: None,
    };
    let alg = module.alg();
    for j in 1..=probe_degree {
        for b in 0..alg.dim() {
            let w = module.mode(b, j, &v);
            if !w.is_zero() {
                let (p, q) = alg.label(b);
                out.witness = Some(format!(
                    "E[{p},{q}]({j}) E[{m},{n}](-1)^{power} 1 = {}",
                    vector_to_string(alg, &w)
                ));
                return Ok(out);
            }
        }
    }
    for h in alg.cartan() {
        let w = module.mode(h, 0, &v);
        let (key, c) = v.iter().next().expect("v is nonzero");
        let ratio = &w.get(key) * &c.invert().expect("nonzero coefficient");
        if w != v.scale(&ratio) {
            let (p, _) = alg.label(h);
            out.witness = Some(format!("E[{p},{p}](0) does not act by a scalar"));
            return Ok(out);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(singular_check(1, (0, 2), (0, 3), 3, 2).unwrap().passed());
        assert!(singular_check(2, (1, 3), (0, 3), 4, 3).unwrap().passed());
        let bad = singular_check(1, (0, 2), (0, 3), 3, 1).unwrap();
        assert!(!bad.passed());
        assert!(singular_check(1, (1, 1), (0, 3), 3, 2).is_err());
    }
}
