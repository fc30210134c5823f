//! The full battery of consistency checks for one Hermitian connection.

use crate::connections::{
    connection_from_torsion, d_omega_cyclic_witness, gauduchon_alpha, gauduchon_torsion,
    gauduchon_torsion_from_thetas, hermitian_torsion, hermitian_torsion_condition_failure,
    hermitian_torsion_general, j_parallel_witness, metric_compat_witness, theta_j_condition_witness,
    torsion_11_part, torsion_of_connection, torsion_pattern_residual, AlphaForm,
};
use crate::curvature::{curvature_from_connection, curvature_via_hats};
use crate::error::Result;
use crate::hermitian::{AlmostHermitianAlgebra, VectorTwoForm};
use crate::rational::Rational;
use crate::tensor::Tensor3;

/// Which Hermitian connection to check.
#[derive(Debug, Clone)]
pub enum ConnectionSource {
    Alpha(AlphaForm),
    Gauduchon(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// 1-based location of the first failure.
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &'static str, witness: Option<Vec<usize>>) -> CheckResult {
    CheckResult {
        name,
        passed: witness.is_none(),
        witness,
    }
}

fn first_difference(x: &Tensor3, y: &Tensor3) -> Option<Vec<usize>> {
    (x - y).nonzero().next().map(|((a, b, c), _)| vec![a + 1, b + 1, c + 1])
}

fn tri(w: Option<(usize, usize, usize)>) -> Option<Vec<usize>> {
    w.map(|(a, b, c)| vec![a, b, c])
}

pub fn verify_suite(a: &AlmostHermitianAlgebra, source: &ConnectionSource) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    let (t, alpha): (VectorTwoForm, AlphaForm) = match source {
        ConnectionSource::Alpha(alpha) => {
            let closed = hermitian_torsion(a, alpha)?;
            let general = hermitian_torsion_general(a, alpha)?;
            checks.push(check(
                "torsion_formulas_agree",
                first_difference(closed.components(), general.components()),
            ));
            (closed, alpha.clone())
        }
        ConnectionSource::Gauduchon(t) => {
            let closed = gauduchon_torsion(a, t);
            let alpha = gauduchon_alpha(a, t);
            let via_alpha = hermitian_torsion(a, &alpha)?;
            let via_general = hermitian_torsion_general(a, &alpha)?;
            let via_thetas = gauduchon_torsion_from_thetas(a, t);
            let witness = first_difference(closed.components(), via_alpha.components())
                .or_else(|| first_difference(closed.components(), via_general.components()))
                .or_else(|| first_difference(closed.components(), via_thetas.components()));
            checks.push(check("torsion_formulas_agree", witness));
            (closed, alpha)
        }
    };
    let g = connection_from_torsion(a, &t)?;
    checks.push(check("metric_compatible", tri(metric_compat_witness(&g))));
    checks.push(check("j_parallel", tri(j_parallel_witness(&g))));
    checks.push(check(
        "hermitian_torsion_conditions",
        hermitian_torsion_condition_failure(a, &t)?.map(|f| vec![f.family, f.i, f.j, f.k]),
    ));
    checks.push(check("theta_j_plus_nijenhuis_zero", tri(theta_j_condition_witness(a, &t)?)));
    checks.push(check("d_omega_cyclic", tri(d_omega_cyclic_witness(a, &t)?)));
    checks.push(check(
        "alpha_recovered",
        first_difference(torsion_11_part(&t).components(), alpha.form().components()),
    ));
    let pattern = torsion_pattern_residual(a, &t, alpha.form())?;
    checks.push(check(
        "torsion_pattern",
        pattern.nonzero().next().map(|((x, y, z), _)| vec![x + 1, y + 1, z + 1]),
    ));
    checks.push(check(
        "torsion_round_trip",
        first_difference(torsion_of_connection(a, &g)?.components(), t.components()),
    ));
    let r = curvature_from_connection(a, &g)?;
    let rh = curvature_via_hats(a, &t)?;
    checks.push(check(
        "curvature_formulas_agree",
        (r.components() - rh.components())
            .nonzero()
            .next()
            .map(|((x, y, z, w), _)| vec![x + 1, y + 1, z + 1, w + 1]),
    ));
    let d = a.dim();
    let mut skew = None;
    'outer: for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                for w in 0..d {
                    if *r.get(x, y, z, w) != -r.get(x, y, w, z) {
                        skew = Some(vec![x + 1, y + 1, z + 1, w + 1]);
                        break 'outer;
                    }
                }
            }
        }
    }
    checks.push(check("curvature_skew_in_last_pair", skew));
    Ok(VerifyReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn gauduchon_suite_passes() {
        for name in ["abelian4", "abdo4", "so3xR3"] {
            let a = AlmostHermitianAlgebra::from_catalog(name).unwrap();
            let r = verify_suite(&a, &ConnectionSource::Gauduchon(int(1))).unwrap();
            assert!(r.all_passed(), "{name}: {r:?}");
            assert_eq!(r.checks.len(), 11);
        }
    }
}
