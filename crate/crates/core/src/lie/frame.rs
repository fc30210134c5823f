use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tensor::Tensor3;

use super::LieAlgebra;

type Matrix = Vec<Vec<Rational>>;

/// An exact unitary change of standard frame, `e'_p = sum_a K_ap e_a`.
///
/// `K` is orthogonal and commutes with `J`, which in block form
/// `[[A, C], [B, D]]` means `A = D` and `C = -B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameChange {
    n: usize,
    k: Matrix,
}

impl FrameChange {
    pub fn new(n: usize, k: Matrix) -> Result<Self> {
        let d = 2 * n;
        if n == 0 {
            return Err(Error::NotUnitary("empty matrix".into()));
        }
        if k.len() != d || k.iter().any(|row| row.len() != d) {
            return Err(Error::NotUnitary(format!("matrix is not {d}x{d}")));
        }
        for r in 0..d {
            for c in 0..d {
                let dot: Rational = (0..d).map(|a| &k[a][r] * &k[a][c]).sum();
                let expected = if r == c { Rational::one() } else { Rational::zero() };
                if dot != expected {
                    return Err(Error::NotUnitary(format!(
                        "K^T K differs from the identity at ({}, {})",
                        r + 1,
                        c + 1
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if k[i][j] != k[n + i][n + j] || k[i][n + j] != -&k[n + i][j] {
                    return Err(Error::NotUnitary(format!(
                        "K does not commute with J (block entry ({}, {}))",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self { n, k })
    }

    pub fn identity(n: usize) -> Self {
        let d = 2 * n;
        let k = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| if r == c { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        Self { n, k }
    }

    /// Cayley transform `(I - S)(I + S)^{-1}` of `S = [[a, -b], [b, a]]`,
    /// with `a` skew-symmetric and `b` symmetric `n x n`. Every such `S` is
    /// skew and commutes with `J`, so the result is always unitary.
    pub fn cayley(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Result<Self> {
        let n = a.len();
        let square = |m: &[Vec<Rational>]| m.len() == n && m.iter().all(|r| r.len() == n);
        if n == 0 || !square(a) || !square(b) {
            return Err(Error::NotUnitary("Cayley blocks must be square and equal-sized".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if a[i][j] != -&a[j][i] || b[i][j] != b[j][i] {
                    return Err(Error::NotUnitary(
                        "Cayley blocks must be skew (first) and symmetric (second)".into(),
                    ));
                }
            }
        }
        let d = 2 * n;
        let s: Matrix = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| match (r < n, c < n) {
                        (true, true) => a[r][c].clone(),
                        (true, false) => -&b[r][c - n],
                        (false, true) => b[r - n][c].clone(),
                        (false, false) => a[r - n][c - n].clone(),
                    })
                    .collect()
            })
            .collect();
        let id = Self::identity(n).k;
        let minus: Matrix = (0..d).map(|r| (0..d).map(|c| &id[r][c] - &s[r][c]).collect()).collect();
        let plus: Matrix = (0..d).map(|r| (0..d).map(|c| &id[r][c] + &s[r][c]).collect()).collect();
        let inv = invert(plus).ok_or_else(|| Error::NotUnitary("I + S is singular".into()))?;
        Self::new(n, matmul(&minus, &inv))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.k
    }

    /// The change `self` followed by `other`, i.e. the matrix product
    /// `self * other`.
    pub fn compose(&self, other: &FrameChange) -> Result<FrameChange> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: 2 * self.n,
                found: 2 * other.n,
            });
        }
        Ok(FrameChange {
            n: self.n,
            k: matmul(&self.k, &other.k),
        })
    }

    /// Re-expresses a tensor with two lower and one upper index in the new
    /// frame: `H'^r_pq = sum K_ap K_bq K_cr H^c_ab` (using `K^{-1} = K^T`).
    pub fn transform(&self, h: &Tensor3) -> Result<Tensor3> {
        let d = 2 * self.n;
        if h.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: h.dim(),
            });
        }
        let k = &self.k;
        // Contract one slot at a time to keep this O(d^4).
        let mut cur = h.clone();
        for slot in 0..3 {
            cur = Tensor3::from_fn(d, |x, y, z| {
                let mut acc = Rational::zero();
                for m in 0..d {
                    let (kv, src) = match slot {
                        0 => (&k[m][x], &cur[(m, y, z)]),
                        1 => (&k[m][y], &cur[(x, m, z)]),
                        _ => (&k[m][z], &cur[(x, y, m)]),
                    };
                    if !kv.is_zero() && !src.is_zero() {
                        acc += kv * src;
                    }
                }
                acc
            });
        }
        Ok(cur)
    }

    /// Re-expresses `lie` in the frame `eK`.
    pub fn apply(&self, lie: &LieAlgebra) -> Result<LieAlgebra> {
        LieAlgebra::from_tensor(self.transform(lie.constants())?)
    }
}

fn matmul(x: &[Vec<Rational>], y: &[Vec<Rational>]) -> Matrix {
    let d = x.len();
    (0..d)
        .map(|r| (0..d).map(|c| (0..d).map(|m| &x[r][m] * &y[m][c]).sum()).collect())
        .collect()
}

/// Gauss-Jordan inverse over the rationals.
fn invert(mut m: Matrix) -> Option<Matrix> {
    let d = m.len();
    if !d.is_multiple_of(2) {
        return None;
    }
    let mut inv = FrameChange::identity(d / 2).k;
    for col in 0..d {
        let pivot = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        for c in 0..d {
            m[col][c] /= &p;
            inv[col][c] /= &p;
        }
        for r in (0..d).filter(|&r| r != col) {
            let f = m[r][col].clone();
            if f.is_zero() {
                continue;
            }
            for c in 0..d {
                let (mc, ic) = (m[col][c].clone(), inv[col][c].clone());
                m[r][c] -= &f * mc;
                inv[r][c] -= &f * ic;
            }
        }
    }
    Some(inv)
}
