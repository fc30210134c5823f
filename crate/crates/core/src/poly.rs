//! Exact polynomials of degree at most 2 in the Gauduchon parameter, and
//! tensors of them.

use num::{Signed, Zero};

use crate::rational::{rational_sqrt, Rational};
use crate::tensor::{Tensor3, Tensor4};

/// `c0 + c1 t + c2 t^2`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TPoly {
    pub c0: Rational,
    pub c1: Rational,
    pub c2: Rational,
}

/// Real roots of a [`TPoly`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyRoots {
    /// The zero polynomial.
    Everything,
    /// All real roots, ascending, each rational. May be empty.
    Rational(Vec<Rational>),
    /// A quadratic with two distinct irrational real roots.
    Irrational,
}

impl TPoly {
    pub fn new(c0: Rational, c1: Rational, c2: Rational) -> Self {
        Self { c0, c1, c2 }
    }

    pub fn coefficients(&self) -> [&Rational; 3] {
        [&self.c0, &self.c1, &self.c2]
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        &self.c0 + t * (&self.c1 + t * &self.c2)
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero() && self.c2.is_zero()
    }

    /// Index of the highest nonzero coefficient; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients().iter().rposition(|c| !c.is_zero())
    }

    pub fn roots(&self) -> PolyRoots {
        match self.degree() {
            None => PolyRoots::Everything,
            Some(0) => PolyRoots::Rational(vec![]),
            Some(1) => PolyRoots::Rational(vec![-&self.c0 / &self.c1]),
            _ => {
                let disc = &self.c1 * &self.c1 - Rational::from_integer(4.into()) * &self.c0 * &self.c2;
                if disc.is_negative() {
                    return PolyRoots::Rational(vec![]);
                }
                let Some(s) = rational_sqrt(&disc) else {
                    return PolyRoots::Irrational;
                };
                let two_a = &self.c2 * Rational::from_integer(2.into());
                let r1 = (-&self.c1 - &s) / &two_a;
                let r2 = (-&self.c1 + &s) / &two_a;
                let mut v = vec![r1, r2];
                v.sort();
                v.dedup();
                PolyRoots::Rational(v)
            }
        }
    }

    /// Linear interpolation through `(0, y0)` and `(1, y1)`.
    pub fn interpolate_linear(y0: &Rational, y1: &Rational) -> Self {
        Self::new(y0.clone(), y1 - y0, Rational::zero())
    }

    /// Quadratic interpolation through `(0, y0)`, `(1, y1)` and `(2, y2)`.
    pub fn interpolate_quadratic(y0: &Rational, y1: &Rational, y2: &Rational) -> Self {
        let two = Rational::from_integer(2.into());
        let c2 = (y2 - &two * y1 + y0) / &two;
        let c1 = y1 - y0 - &c2;
        Self::new(y0.clone(), c1, c2)
    }
}

/// A rank-3 or rank-4 array of [`TPoly`], indexed like [`Tensor3`] or
/// [`Tensor4`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPolyTensor {
    dim: usize,
    rank: usize,
    entries: Vec<TPoly>,
}

impl TPolyTensor {
    /// Pointwise linear interpolation of two rank-3 samples at `t = 0, 1`.
    pub fn linear3(at0: &Tensor3, at1: &Tensor3) -> Self {
        let d = at0.dim();
        let mut entries = Vec::with_capacity(d.pow(3));
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    entries.push(TPoly::interpolate_linear(&at0[(a, b, c)], &at1[(a, b, c)]));
                }
            }
        }
        Self { dim: d, rank: 3, entries }
    }

    /// Pointwise quadratic interpolation of three rank-4 samples at
    /// `t = 0, 1, 2`.
    pub fn quadratic4(at0: &Tensor4, at1: &Tensor4, at2: &Tensor4) -> Self {
        let d = at0.dim();
        let mut entries = Vec::with_capacity(d.pow(4));
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    for e in 0..d {
                        let i = (a, b, c, e);
                        entries.push(TPoly::interpolate_quadratic(&at0[i], &at1[i], &at2[i]));
                    }
                }
            }
        }
        Self { dim: d, rank: 4, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.rank, "index rank mismatch");
        idx.iter().fold(0, |acc, &i| {
            assert!(i < self.dim, "index out of range");
            acc * self.dim + i
        })
    }

    /// Entry at a 0-based index of length `rank`.
    pub fn get(&self, idx: &[usize]) -> &TPoly {
        &self.entries[self.offset(idx)]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(TPoly::is_zero)
    }

    /// Nonzero entries with their 0-based indices, lexicographic.
    pub fn nonzero(&self) -> impl Iterator<Item = (Vec<usize>, &TPoly)> + '_ {
        let (d, r) = (self.dim, self.rank);
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(move |(mut off, p)| {
                let mut idx = vec![0; r];
                for slot in (0..r).rev() {
                    idx[slot] = off % d;
                    off /= d;
                }
                (idx, p)
            })
    }

    pub fn eval3(&self, t: &Rational) -> Tensor3 {
        assert_eq!(self.rank, 3);
        Tensor3::from_fn(self.dim, |a, b, c| self.get(&[a, b, c]).eval(t))
    }

    pub fn eval4(&self, t: &Rational) -> Tensor4 {
        assert_eq!(self.rank, 4);
        Tensor4::from_fn(self.dim, |a, b, c, d| self.get(&[a, b, c, d]).eval(t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn degree_and_eval() {
        let p = TPoly::new(rat(-1, 4), int(0), rat(1, 16));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(&int(2)), int(0));
        assert_eq!(p.eval(&int(0)), rat(-1, 4));
        assert_eq!(TPoly::default().degree(), None);
        assert_eq!(TPoly::new(int(3), int(0), int(0)).degree(), Some(0));
    }

    #[test]
    fn roots() {
        let p = TPoly::new(rat(-1, 4), int(0), rat(1, 16));
        assert_eq!(p.roots(), PolyRoots::Rational(vec![int(-2), int(2)]));
        assert_eq!(TPoly::new(int(-2), int(0), int(1)).roots(), PolyRoots::Irrational);
        assert_eq!(TPoly::new(int(1), int(0), int(1)).roots(), PolyRoots::Rational(vec![]));
        assert_eq!(TPoly::new(int(1), int(2), int(1)).roots(), PolyRoots::Rational(vec![int(-1)]));
        assert_eq!(TPoly::new(int(1), int(2), int(0)).roots(), PolyRoots::Rational(vec![rat(-1, 2)]));
        assert_eq!(TPoly::default().roots(), PolyRoots::Everything);
    }

    #[test]
    fn interpolation_recovers_quadratic() {
        let p = TPoly::new(rat(1, 3), int(-2), rat(5, 7));
        let q = TPoly::interpolate_quadratic(&p.eval(&int(0)), &p.eval(&int(1)), &p.eval(&int(2)));
        assert_eq!(p, q);
    }

    #[test]
    fn nonzero_indices() {
        let mut a = Tensor3::zeros(2);
        let mut b = Tensor3::zeros(2);
        a[(1, 0, 1)] = int(1);
        b[(0, 1, 1)] = int(2);
        let t = TPolyTensor::linear3(&a, &b);
        let idx: Vec<_> = t.nonzero().map(|(i, _)| i).collect();
        assert_eq!(idx, vec![vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(t.eval3(&int(1)), b);
    }
}
