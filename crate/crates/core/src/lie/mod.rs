//! Lie algebras given by structure constants in a fixed frame.
//!
//! `C[(a, b, c)]` is `C^c_ab = <[e_a, e_b], e_c>`. Antisymmetry in `a, b` is
//! enforced at construction; the Jacobi identity is not, so that broken
//! inputs stay representable (see [`jacobi_defect`]).

mod catalog;
mod frame;

pub use catalog::{catalog, CATALOG_NAMES};
pub use frame::FrameChange;

use std::collections::HashSet;

use num::{BigInt, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tensor::{Entry, Scaled, ScaledTensor3, Tensor3, Tensor4};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    consts: Tensor3,
}

/// One prescribed bracket component `C^c_ab = value`, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketEntry {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub value: Rational,
}

impl BracketEntry {
    pub fn new(a: usize, b: usize, c: usize, value: Rational) -> Self {
        Self { a, b, c, value }
    }
}

impl LieAlgebra {
    /// Builds an algebra from 1-based entries. Each unordered pair `{a, b}`
    /// may appear at most once per `c`; an entry with `a > b` is read as
    /// `C^c_ba = -value`.
    pub fn build(dim: usize, entries: &[BracketEntry]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::IndexOutOfRange { index: 0, dim });
        }
        let mut consts = Tensor3::zeros(dim);
        let mut seen = HashSet::new();
        for e in entries {
            for index in [e.a, e.b, e.c] {
                if index == 0 || index > dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if e.a == e.b {
                return Err(Error::DiagonalBracket { a: e.a, c: e.c });
            }
            if !seen.insert((e.a.min(e.b), e.a.max(e.b), e.c)) {
                return Err(Error::DuplicateEntry { a: e.a, b: e.b, c: e.c });
            }
            let (a, b, c) = (e.a - 1, e.b - 1, e.c - 1);
            consts[(a, b, c)] = e.value.clone();
            consts[(b, a, c)] = -&e.value;
        }
        Ok(Self { consts })
    }

    /// Wraps a full array of structure constants; fails unless the array is
    /// antisymmetric in its lower indices.
    pub fn from_tensor(consts: Tensor3) -> Result<Self> {
        if consts.dim() == 0 {
            return Err(Error::IndexOutOfRange { index: 0, dim: 0 });
        }
        if let Some((a, b, c)) = consts.antisymmetry_witness() {
            return Err(Error::NotAntisymmetric {
                a: a + 1,
                b: b + 1,
                c: c + 1,
            });
        }
        Ok(Self { consts })
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            consts: Tensor3::zeros(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.consts.dim()
    }

    /// `C^c_ab` with 0-based indices.
    pub fn c(&self, a: usize, b: usize, c: usize) -> &Rational {
        &self.consts[(a, b, c)]
    }

    pub fn constants(&self) -> &Tensor3 {
        &self.consts
    }

    /// Nonzero components with `a < b`, 1-based, in lexicographic order.
    pub fn entries(&self) -> Vec<BracketEntry> {
        self.consts
            .nonzero()
            .filter(|((a, b, _), _)| a < b)
            .map(|((a, b, c), v)| BracketEntry::new(a + 1, b + 1, c + 1, v.clone()))
            .collect()
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        Self {
            consts: self.consts.scale(k),
        }
    }

    /// First 1-based `(a, b, c, l)` at which the Jacobi identity fails.
    pub fn jacobi_witness(&self) -> Option<(usize, usize, usize, usize)> {
        jacobi_defect(self)
            .nonzero()
            .next()
            .map(|((a, b, c, l), _)| (a + 1, b + 1, c + 1, l + 1))
    }

    pub fn check_jacobi(&self) -> Result<()> {
        match self.jacobi_witness() {
            None => Ok(()),
            Some((a, b, c, l)) => Err(Error::JacobiViolation { a, b, c, l }),
        }
    }

    /// True iff every nonzero `C^c_ab` has `a, b, c < n` where `dim = 2n`,
    /// i.e. the algebra splits as `h + a` with `a` an abelian ideal spanned
    /// by the second half of the frame. Returns the first offending
    /// component otherwise.
    pub fn product_form_witness(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        if !d.is_multiple_of(2) {
            return Some((d, d, d));
        }
        let n = d / 2;
        self.consts
            .nonzero()
            .find(|((a, b, c), _)| *a >= n || *b >= n || *c >= n)
            .map(|((a, b, c), _)| (a + 1, b + 1, c + 1))
    }
}

/// `J_abc^l = sum_p (C^p_ab C^l_pc + C^p_bc C^l_pa + C^p_ca C^l_pb)`, stored
/// at `(a, b, c, l)`.
pub fn jacobi_defect(lie: &LieAlgebra) -> Tensor4 {
    fn sums<E: Entry>(k: Scaled<'_, E>, d: usize, den: &BigInt) -> Tensor4 {
        Tensor4::from_fn(d, |a, b, c, l| {
            let mut acc = E::Acc::default();
            for p in 0..d {
                E::mul_add(&mut acc, k.at(a, b, p), k.at(p, c, l));
                E::mul_add(&mut acc, k.at(b, c, p), k.at(p, a, l));
                E::mul_add(&mut acc, k.at(c, a, p), k.at(p, b, l));
            }
            Rational::new(E::into_big(acc), den.clone())
        })
    }
    let k = ScaledTensor3::new(&lie.consts);
    let den = k.den() * k.den();
    match k.small() {
        Some(small) => sums(small, lie.dim(), &den),
        None => sums(k.big(), lie.dim(), &den),
    }
}

/// The algebra `h + a` with `a` abelian of the same dimension as `h`: `C` is
/// copied onto the first half of the frame and every component touching the
/// second half is zero.
pub fn product_with_abelian(h: &LieAlgebra) -> Result<LieAlgebra> {
    h.check_jacobi()?;
    let n = h.dim();
    let consts = Tensor3::from_fn(2 * n, |a, b, c| {
        if a < n && b < n && c < n {
            h.c(a, b, c).clone()
        } else {
            Rational::zero()
        }
    });
    Ok(LieAlgebra { consts })
}

/// Killing form `K_ab = tr(ad_a ad_b) = sum_{p,q} C^p_aq C^q_bp`.
pub fn killing_form(lie: &LieAlgebra) -> Vec<Vec<Rational>> {
    let d = lie.dim();
    (0..d)
        .map(|a| {
            (0..d)
                .map(|b| {
                    let mut acc = Rational::zero();
                    for p in 0..d {
                        for q in 0..d {
                            acc += lie.c(a, q, p) * lie.c(b, p, q);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// First 1-based `(i, j, k)` with `C^k_ij != -C^j_ik`, restricted to the
/// first `m` frame vectors.
pub(crate) fn biinvariance_witness(lie: &LieAlgebra, m: usize) -> Option<(usize, usize, usize)> {
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                if *lie.c(i, j, k) != -lie.c(i, k, j) {
                    return Some((i + 1, j + 1, k + 1));
                }
            }
        }
    }
    None
}

/// True iff `C^k_ij = -C^j_ik` for all indices, i.e. the identity pairing on
/// this frame is ad-invariant.
pub fn check_biinvariant_frame(lie: &LieAlgebra) -> bool {
    biinvariance_witness(lie, lie.dim()).is_none()
}
