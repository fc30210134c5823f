//! The standard-frame almost Hermitian structure on an even-dimensional Lie
//! algebra.
//!
//! The metric is the identity pairing of the frame and `J e_i = e_{n+i}`,
//! `J e_{n+i} = -e_i` for `i < n` (0-based). `J` is never stored; it acts on
//! indices through [`j_index`].

use num::Zero;

use crate::combo::combo;
use crate::error::{Error, Result};
use crate::lie::{catalog, BracketEntry, FrameChange, LieAlgebra};
use crate::rational::{int, rat, Rational};
use crate::tensor::Tensor3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostHermitianAlgebra {
    n: usize,
    base: LieAlgebra,
}

impl AlmostHermitianAlgebra {
    pub fn new(base: LieAlgebra) -> Result<Self> {
        let d = base.dim();
        if !d.is_multiple_of(2) {
            return Err(Error::OddDimension(d));
        }
        base.check_jacobi()?;
        Ok(Self { n: d / 2, base })
    }

    pub fn from_catalog(name: &str) -> Result<Self> {
        Self::new(catalog(name)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn base(&self) -> &LieAlgebra {
        &self.base
    }

    /// `C^k_ab`, 0-based.
    pub fn c(&self, a: usize, b: usize, k: usize) -> &Rational {
        self.base.c(a, b, k)
    }

    pub fn constants(&self) -> &Tensor3 {
        self.base.constants()
    }

    /// Fails with `NotProductForm` unless every nonzero `C^c_ab` has all
    /// indices in the first half of the frame.
    pub fn require_product_form(&self) -> Result<()> {
        match self.base.product_form_witness() {
            None => Ok(()),
            Some((a, b, c)) => Err(Error::NotProductForm { a, b, c }),
        }
    }
}

/// `J` on a 0-based frame index: the image index and whether it carries a
/// minus sign.
pub fn j_index(n: usize, a: usize) -> (usize, bool) {
    if a < n {
        (a + n, false)
    } else {
        (a - n, true)
    }
}

/// `J` on a 1-based frame index, returning the image index and its sign.
pub fn apply_j(n: usize, index: usize) -> Result<(usize, i8)> {
    if index == 0 || index > 2 * n {
        return Err(Error::IndexOutOfRange {
            index,
            dim: 2 * n,
        });
    }
    let (image, neg) = j_index(n, index - 1);
    Ok((image + 1, if neg { -1 } else { 1 }))
}

/// `omega(e_a, e_b) = <J e_a, e_b>`, 0-based.
pub fn omega(n: usize, a: usize, b: usize) -> Rational {
    let (ja, neg) = j_index(n, a);
    match (ja == b, neg) {
        (false, _) => Rational::zero(),
        (true, false) => int(1),
        (true, true) => int(-1),
    }
}

/// Entry `(a, b, c)` of `t` with `J` applied to the slots flagged in `mask`:
/// `t(J^m0 e_a, J^m1 e_b, J^m2 e_c)`. For a vector-valued 2-form the third
/// slot is the pairing `<t(.,.), J e_c>`.
pub(crate) fn jt(t: &Tensor3, n: usize, idx: [usize; 3], mask: [bool; 3]) -> Rational {
    let mut neg = false;
    let mut out = idx;
    for s in 0..3 {
        if mask[s] {
            let (image, flip) = j_index(n, idx[s]);
            out[s] = image;
            neg ^= flip;
        }
    }
    let v = &t[(out[0], out[1], out[2])];
    if neg {
        -v
    } else {
        v.clone()
    }
}

/// `omega(theta(e_a, e_b), e_c) = -<theta(e_a, e_b), J e_c>`.
pub(crate) fn omega_pairing(t: &Tensor3, n: usize, a: usize, b: usize, c: usize) -> Rational {
    -jt(t, n, [a, b, c], J3)
}

const J1: [bool; 3] = [true, false, false];
const J2: [bool; 3] = [false, true, false];
const J3: [bool; 3] = [false, false, true];
const J12: [bool; 3] = [true, true, false];
const J13: [bool; 3] = [true, false, true];
const J23: [bool; 3] = [false, true, true];
const J123: [bool; 3] = [true, true, true];

/// A vector-valued 2-form `theta^c_ab = <theta(e_a, e_b), e_c>`, stored at
/// `(a, b, c)`. Antisymmetric in `a, b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorTwoForm {
    n: usize,
    t: Tensor3,
}

impl VectorTwoForm {
    pub fn new(n: usize, t: Tensor3) -> Result<Self> {
        if t.dim() != 2 * n {
            return Err(Error::DimensionMismatch {
                expected: 2 * n,
                found: t.dim(),
            });
        }
        if let Some((a, b, c)) = t.antisymmetry_witness() {
            return Err(Error::NotAntisymmetric {
                a: a + 1,
                b: b + 1,
                c: c + 1,
            });
        }
        Ok(Self { n, t })
    }

    /// Builds a form from 1-based components with the same rules as bracket
    /// entries: one entry per unordered pair and upper index, antisymmetry
    /// filled in.
    pub fn from_entries(n: usize, entries: &[BracketEntry]) -> Result<Self> {
        let l = LieAlgebra::build(2 * n, entries)?;
        Ok(Self {
            n,
            t: l.constants().clone(),
        })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            t: Tensor3::zeros(2 * n),
        }
    }

    pub(crate) fn from_raw(n: usize, t: Tensor3) -> Self {
        debug_assert_eq!(t.dim(), 2 * n);
        debug_assert_eq!(t.antisymmetry_witness(), None);
        Self { n, t }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn components(&self) -> &Tensor3 {
        &self.t
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Rational {
        &self.t[(a, b, c)]
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_zero()
    }

    /// Nonzero components with `a < b`, 0-based, lexicographic.
    pub fn upper_entries(&self) -> Vec<((usize, usize, usize), Rational)> {
        self.t
            .nonzero()
            .filter(|((a, b, _), _)| a < b)
            .map(|(i, v)| (i, v.clone()))
            .collect()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_raw(self.n, self.t.scale(k))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_raw(self.n, &self.t + &other.t)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_raw(self.n, &self.t - &other.t)
    }

    /// Re-expresses the form in the frame `eK`.
    pub fn transformed(&self, k: &FrameChange) -> Result<Self> {
        Ok(Self::from_raw(self.n, k.transform(&self.t)?))
    }
}

/// A real 3-form `eta_abc = eta(e_a, e_b, e_c)`, stored densely and totally
/// antisymmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeForm {
    n: usize,
    t: Tensor3,
}

impl ThreeForm {
    pub fn new(n: usize, t: Tensor3) -> Result<Self> {
        if t.dim() != 2 * n {
            return Err(Error::DimensionMismatch {
                expected: 2 * n,
                found: t.dim(),
            });
        }
        if let Some((a, b, c)) = t.total_skew_witness() {
            return Err(Error::NotTotallySkew {
                a: a + 1,
                b: b + 1,
                c: c + 1,
            });
        }
        Ok(Self { n, t })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            t: Tensor3::zeros(2 * n),
        }
    }

    pub(crate) fn from_raw(n: usize, t: Tensor3) -> Self {
        debug_assert_eq!(t.dim(), 2 * n);
        debug_assert_eq!(t.total_skew_witness(), None);
        Self { n, t }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn components(&self) -> &Tensor3 {
        &self.t
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Rational {
        &self.t[(a, b, c)]
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_zero()
    }

    /// Nonzero components with `a < b < c`, 0-based, lexicographic.
    pub fn sorted_entries(&self) -> Vec<((usize, usize, usize), Rational)> {
        self.t
            .nonzero()
            .filter(|((a, b, c), _)| a < b && b < c)
            .map(|(i, v)| (i, v.clone()))
            .collect()
    }
}

/// The same algebra in the frame `eK`. The new frame is again standard
/// because `K` is unitary.
pub fn frame_change(a: &AlmostHermitianAlgebra, k: &FrameChange) -> Result<AlmostHermitianAlgebra> {
    if k.n() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: 2 * k.n(),
        });
    }
    AlmostHermitianAlgebra::new(k.apply(a.base())?)
}

/// Nijenhuis tensor from its `(i, j)` blocks, the rest filled by the
/// reflection symmetries `N(X, JY) = -J N(X, Y)` and `N(JX, JY) = -N(X, Y)`.
pub fn nijenhuis(a: &AlmostHermitianAlgebra) -> VectorTwoForm {
    let n = a.n();
    let c = |x, y, z| a.c(x, y, z);
    let mut t = Tensor3::zeros(2 * n);
    for i in 0..n {
        let ni = n + i;
        for j in 0..n {
            let nj = n + j;
            for k in 0..n {
                let nk = n + k;
                let low = combo![
                    -1 => c(ni, j, nk), -1 => c(i, nj, nk), 1 => c(i, j, k), -1 => c(ni, nj, k),
                ];
                let high = combo![
                    1 => c(ni, j, k), 1 => c(i, nj, k), 1 => c(i, j, nk), -1 => c(ni, nj, nk),
                ];
                t[(i, nj, nk)] = -&low;
                t[(nj, i, nk)] = low.clone();
                t[(ni, nj, k)] = -&low;
                t[(i, nj, k)] = high.clone();
                t[(nj, i, k)] = -&high;
                t[(ni, nj, nk)] = -&high;
                t[(i, j, k)] = low;
                t[(i, j, nk)] = high;
            }
        }
    }
    VectorTwoForm::from_raw(n, t)
}

pub fn is_integrable(a: &AlmostHermitianAlgebra) -> bool {
    nijenhuis(a).is_zero()
}

pub fn is_kahler(a: &AlmostHermitianAlgebra) -> bool {
    is_integrable(a) && d_omega(a).is_zero()
}

/// True iff `<N(e_a, e_b), e_c>` is alternating in all three slots.
pub fn nijenhuis_is_totally_skew(a: &AlmostHermitianAlgebra) -> bool {
    nijenhuis(a).components().total_skew_witness().is_none()
}

/// First 1-based triple at which `<N(e_a, e_b), e_c>` fails to be alternating.
pub fn nijenhuis_skew_witness(a: &AlmostHermitianAlgebra) -> Option<(usize, usize, usize)> {
    nijenhuis(a)
        .components()
        .total_skew_witness()
        .map(|(x, y, z)| (x + 1, y + 1, z + 1))
}

/// Exterior derivative of the fundamental form, from its four index blocks.
pub fn d_omega(a: &AlmostHermitianAlgebra) -> ThreeForm {
    let n = a.n();
    let c = |x, y, z| a.c(x, y, z);
    let mut t = Tensor3::zeros(2 * n);
    for i in 0..n {
        let ni = n + i;
        for j in 0..n {
            let nj = n + j;
            for k in 0..n {
                let nk = n + k;
                t.set_alternating(
                    i,
                    j,
                    k,
                    combo![1 => c(i, j, nk), 1 => c(j, k, ni), 1 => c(k, i, nj)],
                );
                t.set_alternating(
                    i,
                    j,
                    nk,
                    combo![-1 => c(i, j, k), 1 => c(j, nk, ni), 1 => c(nk, i, nj)],
                );
                t.set_alternating(
                    i,
                    nj,
                    nk,
                    combo![-1 => c(i, nj, k), 1 => c(nj, nk, ni), -1 => c(nk, i, j)],
                );
                t.set_alternating(
                    ni,
                    nj,
                    nk,
                    combo![-1 => c(ni, nj, k), -1 => c(nj, nk, i), -1 => c(nk, ni, j)],
                );
            }
        }
    }
    ThreeForm::from_raw(n, t)
}

/// Projection of a 3-form onto its `(2,1)+(1,2)` part:
/// `1/4 [3 eta(X,Y,Z) + eta(JX,JY,Z) + eta(JX,Y,JZ) + eta(X,JY,JZ)]`.
pub fn eta_plus(eta: &ThreeForm) -> ThreeForm {
    let n = eta.n();
    let e = eta.components();
    let t = Tensor3::from_fn(2 * n, |a, b, c| {
        let idx = [a, b, c];
        let s = int(3) * &e[(a, b, c)] + jt(e, n, idx, J12) + jt(e, n, idx, J13) + jt(e, n, idx, J23);
        s * rat(1, 4)
    });
    ThreeForm::from_raw(n, t)
}

/// `(d omega)^+` from its closed-form index blocks. Agrees with
/// `eta_plus(&d_omega(a))`.
pub fn d_omega_plus(a: &AlmostHermitianAlgebra) -> ThreeForm {
    let n = a.n();
    let c = |x, y, z| a.c(x, y, z);
    let q = rat(1, 4);
    let mut t = Tensor3::zeros(2 * n);
    for i in 0..n {
        let ni = n + i;
        for j in 0..n {
            let nj = n + j;
            for k in 0..n {
                let nk = n + k;
                let p1 = combo![
                    3 => c(i, j, nk), 3 => c(j, k, ni), 3 => c(k, i, nj),
                    1 => c(k, nj, i), -1 => c(nj, ni, nk), 1 => c(ni, k, j),
                    1 => c(j, ni, k), -1 => c(ni, nk, nj), 1 => c(nk, j, i),
                    -1 => c(i, nj, k), 1 => c(nj, nk, ni), -1 => c(nk, i, j),
                ];
                let p2 = combo![
                    -3 => c(i, j, k), 3 => c(j, nk, ni), 3 => c(nk, i, nj),
                    -1 => c(ni, nj, k), -1 => c(nj, nk, i), -1 => c(nk, ni, j),
                    1 => c(j, k, i), -1 => c(k, ni, nj), -1 => c(ni, j, nk),
                    -1 => c(i, k, j), 1 => c(k, nj, ni), 1 => c(nj, i, nk),
                ];
                let p3 = combo![
                    -3 => c(i, nj, k), 3 => c(nj, nk, ni), -3 => c(nk, i, j),
                    -1 => c(j, ni, k), 1 => c(ni, nk, nj), -1 => c(nk, j, i),
                    1 => c(k, ni, j), -1 => c(ni, nj, nk), 1 => c(nj, k, i),
                    1 => c(i, j, nk), 1 => c(j, k, ni), 1 => c(k, i, nj),
                ];
                let p4 = combo![
                    -3 => c(ni, nj, k), -3 => c(nj, nk, i), -3 => c(nk, ni, j),
                    -1 => c(i, j, k), 1 => c(j, nk, ni), 1 => c(nk, i, nj),
                    1 => c(i, k, j), -1 => c(k, nj, ni), -1 => c(nj, i, nk),
                    -1 => c(j, k, i), 1 => c(k, ni, nj), 1 => c(ni, j, nk),
                ];
                t.set_alternating(i, j, k, p1 * &q);
                t.set_alternating(i, j, nk, p2 * &q);
                t.set_alternating(i, nj, nk, p3 * &q);
                t.set_alternating(ni, nj, nk, p4 * &q);
            }
        }
    }
    ThreeForm::from_raw(n, t)
}

/// `theta_J(X,Y) = J theta(JX,Y) + J theta(X,JY) + theta(X,Y) - theta(JX,JY)`.
pub fn theta_j(theta: &VectorTwoForm) -> VectorTwoForm {
    let n = theta.n();
    let th = theta.components();
    let t = Tensor3::from_fn(2 * n, |a, b, c| {
        let idx = [a, b, c];
        // <J v, e_c> = -<v, J e_c>
        &th[(a, b, c)] - jt(th, n, idx, J13) - jt(th, n, idx, J23) - jt(th, n, idx, J12)
    });
    VectorTwoForm::from_raw(n, t)
}

/// `dw(JX,JY,JZ) - dw(JX,Y,Z) - dw(X,JY,Z) - dw(X,Y,JZ)` on frame triples.
/// Vanishes when `J` is integrable; for other inputs it is only reported.
pub fn integrable_identity_defect(a: &AlmostHermitianAlgebra) -> Tensor3 {
    let n = a.n();
    let dw = d_omega(a);
    let e = dw.components();
    Tensor3::from_fn(2 * n, |x, y, z| {
        let idx = [x, y, z];
        jt(e, n, idx, J123) - jt(e, n, idx, J1) - jt(e, n, idx, J2) - jt(e, n, idx, J3)
    })
}
