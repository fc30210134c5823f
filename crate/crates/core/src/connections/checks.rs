//! Component conditions characterising Hermitian torsions.

use crate::error::{Error, Result};
use crate::hermitian::{
    d_omega, jt, nijenhuis, omega_pairing, theta_j, AlmostHermitianAlgebra, VectorTwoForm,
};

use num::Zero;

use crate::rational::rat;
use crate::tensor::Tensor3;

/// A failed component identity: which family (1-based) and where.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionFailure {
    pub family: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// Checks the six component families that a torsion `T` satisfies iff the
/// metric connection with torsion `T` is Hermitian. Returns the first
/// failing family and its 1-based `(i, j, k)`, all at most `n`.
pub fn hermitian_torsion_condition_failure(
    a: &AlmostHermitianAlgebra,
    t: &VectorTwoForm,
) -> Result<Option<ConditionFailure>> {
    let n = a.n();
    same_dim(a, t)?;
    let nij = nijenhuis(a);
    let dw = d_omega(a);
    let tt = |x, y, z| t.get(x, y, z);
    let w = |x, y, z| dw.get(x, y, z);
    for i in 0..n {
        let ni = n + i;
        for j in 0..n {
            let nj = n + j;
            for k in 0..n {
                let nk = n + k;
                let residuals = [
                    -tt(ni, j, nk) - tt(i, nj, nk) + tt(i, j, k) - tt(ni, nj, k) + nij.get(i, j, k),
                    tt(ni, j, k) + tt(i, nj, k) + tt(i, j, nk) - tt(ni, nj, nk) + nij.get(i, j, nk),
                    w(i, j, k) + tt(i, j, nk) + tt(j, k, ni) + tt(k, i, nj),
                    w(i, j, nk) - tt(i, j, k) + tt(j, nk, ni) + tt(nk, i, nj),
                    w(i, nj, nk) - tt(i, nj, k) + tt(nj, nk, ni) - tt(nk, i, j),
                    w(ni, nj, nk) - tt(ni, nj, k) - tt(nj, nk, i) - tt(nk, ni, j),
                ];
                if let Some(f) = residuals.iter().position(|r| !r.is_zero()) {
                    return Ok(Some(ConditionFailure {
                        family: f + 1,
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// True iff all six families hold; false also on a dimension mismatch.
pub fn verify_hermitian_torsion_conditions(a: &AlmostHermitianAlgebra, t: &VectorTwoForm) -> bool {
    matches!(hermitian_torsion_condition_failure(a, t), Ok(None))
}

fn same_dim(a: &AlmostHermitianAlgebra, t: &VectorTwoForm) -> Result<()> {
    if a.n() == t.n() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: t.dim(),
        })
    }
}

/// First 1-based `(a, b, c)` at which `T_J + N = 0` fails.
pub fn theta_j_condition_witness(
    a: &AlmostHermitianAlgebra,
    t: &VectorTwoForm,
) -> Result<Option<(usize, usize, usize)>> {
    same_dim(a, t)?;
    let sum = theta_j(t).add(&nijenhuis(a));
    let witness = sum
        .components()
        .nonzero()
        .next()
        .map(|((x, y, z), _)| (x + 1, y + 1, z + 1));
    Ok(witness)
}

/// First 1-based `(a, b, c)` at which
/// `dw(X,Y,Z) = w(T(X,Y),Z) + w(T(Y,Z),X) + w(T(Z,X),Y)` fails.
pub fn d_omega_cyclic_witness(
    a: &AlmostHermitianAlgebra,
    t: &VectorTwoForm,
) -> Result<Option<(usize, usize, usize)>> {
    same_dim(a, t)?;
    let n = a.n();
    let dw = d_omega(a);
    let tt = t.components();
    let d = 2 * n;
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let rhs = omega_pairing(tt, n, x, y, z)
                    + omega_pairing(tt, n, y, z, x)
                    + omega_pairing(tt, n, z, x, y);
                if *dw.get(x, y, z) != rhs {
                    return Ok(Some((x + 1, y + 1, z + 1)));
                }
            }
        }
    }
    Ok(None)
}

/// Residual of `<T(X,JY),Z> = -<T(X,Y),JZ> - <N(X,Y),JZ>/2 + <alpha(X,Y),JZ>
/// + <alpha(X,JY),Z>` on frame triples; zero for every Hermitian torsion.
pub fn torsion_pattern_residual(
    a: &AlmostHermitianAlgebra,
    t: &VectorTwoForm,
    alpha: &VectorTwoForm,
) -> Result<Tensor3> {
    same_dim(a, t)?;
    same_dim(a, alpha)?;
    let n = a.n();
    let nij = nijenhuis(a);
    let (tt, nt, al) = (t.components(), nij.components(), alpha.components());
    const J2: [bool; 3] = [false, true, false];
    const J3: [bool; 3] = [false, false, true];
    let half = rat(1, 2);
    Ok(Tensor3::from_fn(2 * n, |x, y, z| {
        let idx = [x, y, z];
        jt(tt, n, idx, J2) + jt(tt, n, idx, J3) + jt(nt, n, idx, J3) * &half
            - jt(al, n, idx, J3)
            - jt(al, n, idx, J2)
    }))
}
