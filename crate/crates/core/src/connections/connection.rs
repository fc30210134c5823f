use crate::error::{Error, Result};
use crate::hermitian::{AlmostHermitianAlgebra, VectorTwoForm};
use crate::rational::{rat, Rational};
use crate::tensor::Tensor3;

/// Coefficients `Gamma^c_ab = <nabla_{e_a} e_b, e_c>` of a left-invariant
/// connection, stored at `(a, b, c)`. No structure is imposed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    n: usize,
    g: Tensor3,
}

impl Connection {
    pub fn new(n: usize, g: Tensor3) -> Result<Self> {
        if g.dim() != 2 * n {
            return Err(Error::DimensionMismatch {
                expected: 2 * n,
                found: g.dim(),
            });
        }
        Ok(Self { n, g })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn coefficients(&self) -> &Tensor3 {
        &self.g
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Rational {
        &self.g[(a, b, c)]
    }

    pub fn is_zero(&self) -> bool {
        self.g.is_zero()
    }
}

/// `H^c_ab -> (H^c_ab - H^a_bc - H^b_ac) / 2`. Applied to a bracket or a
/// torsion, the two hats add up to the metric connection with that torsion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatTensor(Tensor3);

impl HatTensor {
    pub fn values(&self) -> &Tensor3 {
        &self.0
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Rational {
        &self.0[(a, b, c)]
    }
}

pub fn hat_transform(h: &Tensor3) -> HatTensor {
    let half = rat(1, 2);
    HatTensor(Tensor3::from_fn(h.dim(), |a, b, c| {
        (&h[(a, b, c)] - &h[(b, c, a)] - &h[(a, c, b)]) * &half
    }))
}

fn check_dim(a: &AlmostHermitianAlgebra, d: usize) -> Result<()> {
    if a.dim() == d {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: d,
        })
    }
}

/// The unique metric connection with torsion `t`:
/// `Gamma^k_ij = (C^k_ij - C^i_jk - C^j_ik + T^k_ij - T^i_jk - T^j_ik) / 2`.
pub fn connection_from_torsion(a: &AlmostHermitianAlgebra, t: &VectorTwoForm) -> Result<Connection> {
    check_dim(a, t.dim())?;
    let ch = hat_transform(a.constants());
    let th = hat_transform(t.components());
    Connection::new(a.n(), ch.values() + th.values())
}

/// Torsion of an arbitrary connection: `Gamma^c_ab - Gamma^c_ba - C^c_ab`.
pub fn torsion_of_connection(a: &AlmostHermitianAlgebra, g: &Connection) -> Result<VectorTwoForm> {
    check_dim(a, g.dim())?;
    let gg = g.coefficients();
    let t = Tensor3::from_fn(a.dim(), |x, y, z| &gg[(x, y, z)] - &gg[(y, x, z)] - a.c(x, y, z));
    Ok(VectorTwoForm::from_raw(a.n(), t))
}

/// First 1-based `(a, b, c)` with `Gamma^c_ab + Gamma^b_ac != 0`.
pub fn metric_compat_witness(g: &Connection) -> Option<(usize, usize, usize)> {
    let d = g.dim();
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                if *g.get(a, b, c) != -g.get(a, c, b) {
                    return Some((a + 1, b + 1, c + 1));
                }
            }
        }
    }
    None
}

pub fn verify_metric_compat(g: &Connection) -> bool {
    metric_compat_witness(g).is_none()
}

/// First 1-based `(a, j, k)`, `j, k <= n`, at which
/// `Gamma^k_{a,n+j} + Gamma^{n+k}_{aj} = 0` or
/// `Gamma^{n+k}_{a,n+j} - Gamma^k_{aj} = 0` fails.
pub fn j_parallel_witness(g: &Connection) -> Option<(usize, usize, usize)> {
    let n = g.n();
    for a in 0..2 * n {
        for j in 0..n {
            for k in 0..n {
                let first = g.get(a, n + j, k) + g.get(a, j, n + k);
                let second = g.get(a, n + j, n + k) - g.get(a, j, k);
                if !num::Zero::is_zero(&first) || !num::Zero::is_zero(&second) {
                    return Some((a + 1, j + 1, k + 1));
                }
            }
        }
    }
    None
}

pub fn verify_j_parallel(g: &Connection) -> bool {
    j_parallel_witness(g).is_none()
}
