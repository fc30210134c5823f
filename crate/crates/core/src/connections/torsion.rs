use crate::combo::combo;
use crate::error::{Error, Result};
use crate::hermitian::{
    d_omega, d_omega_plus, jt, nijenhuis, nijenhuis_skew_witness, AlmostHermitianAlgebra,
    VectorTwoForm,
};
use crate::poly::TPolyTensor;
use crate::rational::{int, rat, Rational};
use crate::tensor::Tensor3;

use super::alpha::{alpha_plus, validate_alpha, AlphaForm};

const J12: [bool; 3] = [true, true, false];
const J3: [bool; 3] = [false, false, true];
const J123: [bool; 3] = [true, true, true];

fn check_n(a: &AlmostHermitianAlgebra, n: usize) -> Result<()> {
    if a.n() == n {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: 2 * n,
        })
    }
}

/// Torsion of the Hermitian connection attached to `alpha`, from the
/// expanded component formulas.
pub fn hermitian_torsion(a: &AlmostHermitianAlgebra, alpha: &AlphaForm) -> Result<VectorTwoForm> {
    check_n(a, alpha.n())?;
    let n = a.n();
    let c = |x, y, z| a.c(x, y, z);
    let al = |x, y, z| alpha.get(x, y, z);
    let q = rat(1, 4);
    let mut t = Tensor3::zeros(2 * n);
    // Every block is accumulated with its coefficients scaled by 4.
    for i in 0..n {
        let ni = n + i;
        for j in 0..n {
            let nj = n + j;
            for k in 0..n {
                let nk = n + k;
                let b1 = combo![
                    -2 => c(i, j, k), -1 => c(i, k, j), 1 => c(j, k, i), 2 => c(ni, nj, k),
                    1 => c(nj, nk, i), 1 => c(nk, ni, j), 1 => c(j, nk, ni), 1 => c(nk, i, nj),
                    1 => c(k, nj, ni), -1 => c(k, ni, nj),
                    4 => al(i, j, k), 2 => al(j, k, i), 2 => al(k, i, j),
                    -2 => al(nj, k, ni), -2 => al(k, ni, nj),
                ];
                let b2 = combo![
                    -2 => c(i, j, nk), 2 => c(ni, nj, nk), -1 => c(k, ni, j), -1 => c(nj, k, i),
                    -1 => c(i, nk, j), 1 => c(nk, nj, ni), 1 => c(j, nk, i), -1 => c(nk, ni, nj),
                    -1 => c(k, i, nj), -1 => c(j, k, ni),
                    4 => al(i, j, nk), 2 => al(j, nk, i), 2 => al(nk, i, j),
                    -2 => al(nj, nk, ni), -2 => al(nk, ni, nj),
                ];
                let b3 = combo![
                    -2 => c(ni, j, k), -2 => c(i, nj, k), -1 => c(ni, nk, nj), 1 => c(nk, j, i),
                    1 => c(nj, nk, ni), -1 => c(nk, i, j), -1 => c(k, nj, i), -1 => c(ni, k, j),
                    -1 => c(i, k, nj), -1 => c(k, j, ni),
                    4 => al(i, nj, k), 2 => al(nj, k, i), 2 => al(k, i, nj),
                    2 => al(j, k, ni), 2 => al(k, ni, j),
                ];
                let b4 = combo![
                    -2 => c(ni, j, nk), -2 => c(i, nj, nk), 1 => c(j, k, i), -1 => c(k, ni, nj),
                    1 => c(nj, nk, i), 1 => c(nk, ni, j), 1 => c(k, i, j), -1 => c(nj, k, ni),
                    -1 => c(i, nk, nj), -1 => c(nk, j, ni),
                    4 => al(i, nj, nk), 2 => al(nj, nk, i), 2 => al(nk, i, nj),
                    2 => al(j, nk, ni), 2 => al(nk, ni, j),
                ];
                let b5 = combo![
                    -2 => c(ni, nj, k), 2 => c(i, j, k), -1 => c(nj, nk, i), -1 => c(nk, ni, j),
                    -1 => c(j, nk, ni), -1 => c(nk, i, nj), -1 => c(k, nj, ni), 1 => c(i, k, j),
                    1 => c(k, j, i), 1 => c(k, ni, nj),
                    4 => al(ni, nj, k), 2 => al(ni, nk, j), 2 => al(nk, j, ni),
                    2 => al(i, nk, nj), 2 => al(nk, nj, i),
                ];
                let b6 = combo![
                    -2 => c(ni, nj, nk), 2 => c(i, j, nk), 1 => c(nj, k, i), 1 => c(k, ni, j),
                    1 => c(j, k, ni), 1 => c(k, i, nj), 1 => c(nj, nk, ni), -1 => c(nk, i, j),
                    -1 => c(j, nk, i), 1 => c(nk, ni, nj),
                    4 => al(ni, nj, nk), 2 => al(nj, nk, ni), 2 => al(nk, ni, nj),
                    -2 => al(j, nk, i), -2 => al(nk, i, j),
                ];
                t[(i, j, k)] = b1 * &q;
                t[(i, j, nk)] = b2 * &q;
                let b3 = b3 * &q;
                let b4 = b4 * &q;
                t[(nj, i, k)] = -&b3;
                t[(nj, i, nk)] = -&b4;
                t[(i, nj, k)] = b3;
                t[(i, nj, nk)] = b4;
                t[(ni, nj, k)] = b5 * &q;
                t[(ni, nj, nk)] = b6 * &q;
            }
        }
    }
    Ok(VectorTwoForm::from_raw(n, t))
}

/// Torsion of the Hermitian connection attached to `alpha`, from the
/// frame-free expression
/// `-N/4 - (dw)^+(JX,JY,JZ)/2 + (dw)^+(X,Y,JZ)/2 + alpha^+(X,Y,Z)/2
///  - alpha^+(JX,JY,Z)/2 + <alpha(X,Y),Z>`.
pub fn hermitian_torsion_general(
    a: &AlmostHermitianAlgebra,
    alpha: &AlphaForm,
) -> Result<VectorTwoForm> {
    check_n(a, alpha.n())?;
    let n = a.n();
    let nij = nijenhuis(a);
    let p = d_omega_plus(a);
    let ap = alpha_plus(alpha);
    let (nt, pt, apt, al) = (
        nij.components(),
        p.components(),
        ap.components(),
        alpha.form().components(),
    );
    let t = Tensor3::from_fn(2 * n, |x, y, z| {
        let idx = [x, y, z];
        let half = combo![
            -1 => &jt(pt, n, idx, J123), 1 => &jt(pt, n, idx, J3),
            1 => &apt[(x, y, z)], -1 => &jt(apt, n, idx, J12),
        ];
        -&nt[(x, y, z)] * rat(1, 4) + half * rat(1, 2) + &al[(x, y, z)]
    });
    Ok(VectorTwoForm::from_raw(n, t))
}

/// `<alpha^t(X,Y),Z> = t/4 [(dw)^+(JX,JY,JZ) + (dw)^+(X,Y,JZ)]`.
pub fn gauduchon_alpha(a: &AlmostHermitianAlgebra, t: &Rational) -> AlphaForm {
    let n = a.n();
    let p = d_omega_plus(a);
    let pt = p.components();
    let s = t * rat(1, 4);
    let al = Tensor3::from_fn(2 * n, |x, y, z| {
        let idx = [x, y, z];
        (jt(pt, n, idx, J123) + jt(pt, n, idx, J3)) * &s
    });
    validate_alpha(VectorTwoForm::from_raw(n, al)).expect("alpha^t is of type (1,1)")
}

/// Torsion of the Gauduchon connection with parameter `t`, from the
/// expanded component formulas.
pub fn gauduchon_torsion(a: &AlmostHermitianAlgebra, t: &Rational) -> VectorTwoForm {
    let n = a.n();
    let c = |x, y, z| a.c(x, y, z);
    let one = int(1);
    let t4 = t * rat(1, 4);
    let mt4 = -&t4;
    let pa = (&one - t) * rat(1, 4);
    let pb = -&pa;
    let pe = (&one - t * int(2)) * rat(1, 4);
    let pf = -&pe;
    let h2 = (&one - t) * rat(1, 2);
    let hb = -&h2;
    let q = rat(1, 4);
    let mq = rat(-1, 4);
    let mh = rat(-1, 2);
    let mut out = Tensor3::zeros(2 * n);
    for i in 0..n {
        let ni = n + i;
        for j in 0..n {
            let nj = n + j;
            for k in 0..n {
                let nk = n + k;
                let g1 = combo![
                    &t4 => c(ni, j, nk), &t4 => c(i, nj, nk), &mh => c(i, j, k),
                    &h2 => c(ni, nj, k), &q => c(j, nk, ni), &q => c(nk, i, nj),
                    &pe => c(nj, nk, i), &pe => c(nk, ni, j), &pa => c(j, k, i),
                    &pb => c(k, ni, nj), &pb => c(i, k, j), &pa => c(k, nj, ni),
                ];
                let g2 = combo![
                    &pe => c(ni, k, j), &pf => c(nj, k, i), &h2 => c(ni, nj, nk),
                    &pa => c(ni, nk, nj), &pb => c(nj, nk, ni), &mt4 => c(i, nj, k),
                    &pb => c(i, nk, j), &pa => c(j, nk, i), &mt4 => c(ni, j, k),
                    &mh => c(i, j, nk), &q => c(i, k, nj), &mq => c(j, k, ni),
                ];
                let g3 = combo![
                    &pa => c(nj, k, i), &t4 => c(ni, nj, nk), &pf => c(ni, nk, nj),
                    &mt4 => c(i, j, nk), &pb => c(i, k, nj), &pa => c(j, k, ni),
                    &pf => c(j, nk, i), &hb => c(ni, j, k), &pb => c(ni, k, j),
                    &q => c(nj, nk, ni), &mh => c(i, nj, k), &q => c(i, nk, j),
                ];
                let g4 = combo![
                    &mt4 => c(ni, nj, k), &pb => c(ni, nk, j), &pa => c(nj, nk, i),
                    &t4 => c(i, j, k), &pe => c(j, k, i), &pb => c(i, nk, nj),
                    &pa => c(j, nk, ni), &hb => c(ni, j, nk), &pe => c(ni, k, nj),
                    &mh => c(i, nj, nk), &mq => c(i, k, j), &mq => c(nj, k, ni),
                ];
                let g5 = combo![
                    &pa => c(nj, k, ni), &h2 => c(i, j, k), &pa => c(i, k, j),
                    &pb => c(j, k, i), &mt4 => c(i, nj, nk), &pe => c(i, nk, nj),
                    &pf => c(j, nk, ni), &mt4 => c(ni, j, nk), &pb => c(ni, k, nj),
                    &mh => c(ni, nj, k), &q => c(ni, nk, j), &mq => c(nj, nk, i),
                ];
                let g6 = combo![
                    &pb => c(ni, nk, nj), &pa => c(nj, nk, ni), &h2 => c(i, j, nk),
                    &pf => c(i, k, nj), &t4 => c(i, nj, k), &pa => c(i, nk, j),
                    &pe => c(j, k, ni), &pb => c(j, nk, i), &t4 => c(ni, j, k),
                    &q => c(nj, k, i), &mh => c(ni, nj, nk), &mq => c(ni, k, j),
                ];
                out[(i, j, k)] = g1;
                out[(i, j, nk)] = g2;
                out[(nj, i, k)] = -&g3;
                out[(nj, i, nk)] = -&g4;
                out[(i, nj, k)] = g3;
                out[(i, nj, nk)] = g4;
                out[(ni, nj, k)] = g5;
                out[(ni, nj, nk)] = g6;
            }
        }
    }
    VectorTwoForm::from_raw(n, out)
}

/// `<theta^c(X,Y),Z> = [(dw)^+(X,Y,JZ) - (dw)^+(JX,JY,JZ)] / 2`.
pub fn chern_theta(a: &AlmostHermitianAlgebra) -> VectorTwoForm {
    let n = a.n();
    let p = d_omega_plus(a);
    let pt = p.components();
    let t = Tensor3::from_fn(2 * n, |x, y, z| {
        let idx = [x, y, z];
        (jt(pt, n, idx, J3) - jt(pt, n, idx, J123)) * rat(1, 2)
    });
    VectorTwoForm::from_raw(n, t)
}

/// `<theta^b(X,Y),Z> = (dw)^+(JX,JY,JZ)`.
pub fn bismut_theta(a: &AlmostHermitianAlgebra) -> VectorTwoForm {
    let n = a.n();
    let p = d_omega_plus(a);
    let pt = p.components();
    let t = Tensor3::from_fn(2 * n, |x, y, z| jt(pt, n, [x, y, z], J123));
    VectorTwoForm::from_raw(n, t)
}

/// `T^t = -N/4 + (1 - t/2) theta^c + (t/2) theta^b`.
pub fn gauduchon_torsion_from_thetas(a: &AlmostHermitianAlgebra, t: &Rational) -> VectorTwoForm {
    let half_t = t * rat(1, 2);
    nijenhuis(a)
        .scale(&rat(-1, 4))
        .add(&chern_theta(a).scale(&(int(1) - &half_t)))
        .add(&bismut_theta(a).scale(&half_t))
}

/// Each torsion component as an exact affine polynomial in `t`,
/// interpolated from `t = 0` and `t = 1`.
pub fn gauduchon_torsion_poly(a: &AlmostHermitianAlgebra) -> TPolyTensor {
    let t0 = gauduchon_torsion(a, &int(0));
    let t1 = gauduchon_torsion(a, &int(1));
    TPolyTensor::linear3(t0.components(), t1.components())
}

/// `(T(X,Y) + T(JX,JY)) / 2`, the (1,1) part of a torsion. For the torsion
/// of a Hermitian connection this recovers its `alpha`.
pub fn torsion_11_part(t: &VectorTwoForm) -> VectorTwoForm {
    let n = t.n();
    let tt = t.components();
    let out = Tensor3::from_fn(2 * n, |x, y, z| {
        (&tt[(x, y, z)] + jt(tt, n, [x, y, z], J12)) * rat(1, 2)
    });
    VectorTwoForm::from_raw(n, out)
}

/// `<T(X,Y),Z> = dw(JX,JY,JZ) - <N(X,Y),Z>`, valid when the Nijenhuis
/// tensor is totally skew; it is then the torsion at `t = 2`.
pub fn bismut_simplified_torsion(a: &AlmostHermitianAlgebra) -> Result<VectorTwoForm> {
    if let Some((x, y, z)) = nijenhuis_skew_witness(a) {
        return Err(Error::NijenhuisNotSkew { a: x, b: y, c: z });
    }
    let n = a.n();
    let dw = d_omega(a);
    let nij = nijenhuis(a);
    let (dt, nt) = (dw.components(), nij.components());
    let t = Tensor3::from_fn(2 * n, |x, y, z| jt(dt, n, [x, y, z], J123) - &nt[(x, y, z)]);
    Ok(VectorTwoForm::from_raw(n, t))
}
