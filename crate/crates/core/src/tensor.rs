//! Dense rank-3 and rank-4 arrays of exact rationals.
//!
//! Indices are 0-based. For a rank-3 array holding a bracket, torsion or
//! connection, entry `(a, b, c)` is the component with lower indices `a, b`
//! and upper index `c`.

use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num::{BigInt, Integer, One, ToPrimitive, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Rational>,
}

impl Tensor3 {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Rational::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    data.push(f(a, b, c));
                }
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Nonzero entries in lexicographic index order.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize), &Rational)> + '_ {
        let d = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| ((idx / (d * d), (idx / d) % d, idx % d), v))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|v| v * k).collect(),
        }
    }

    /// First `(a, b, c)` with `t[(a,b,c)] != -t[(b,a,c)]`.
    pub fn antisymmetry_witness(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        for a in 0..d {
            for b in a..d {
                for c in 0..d {
                    if self[(a, b, c)] != -&self[(b, a, c)] {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// First `(a, b, c)` where the array fails to be alternating under some
    /// transposition of its three slots. Antisymmetry in the first two slots
    /// is checked first; then the swap of the last two slots is scanned over
    /// `a != b` (the `a == b` cases follow from the other two).
    pub fn total_skew_witness(&self) -> Option<(usize, usize, usize)> {
        if let Some(w) = self.antisymmetry_witness() {
            return Some(w);
        }
        let d = self.dim;
        for a in 0..d {
            for b in (0..d).filter(|&b| b != a) {
                for c in 0..d {
                    if self[(a, b, c)] != -&self[(a, c, b)] {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Sets `(a, b, c)` and all its permutations with the permutation sign.
    pub fn set_alternating(&mut self, a: usize, b: usize, c: usize, v: Rational) {
        let neg = -&v;
        self[(b, c, a)] = v.clone();
        self[(c, a, b)] = v.clone();
        self[(b, a, c)] = neg.clone();
        self[(a, c, b)] = neg.clone();
        self[(c, b, a)] = neg;
        self[(a, b, c)] = v;
    }
}

impl Index<(usize, usize, usize)> for Tensor3 {
    type Output = Rational;
    fn index(&self, (a, b, c): (usize, usize, usize)) -> &Rational {
        debug_assert!(a < self.dim && b < self.dim && c < self.dim);
        &self.data[(a * self.dim + b) * self.dim + c]
    }
}

impl IndexMut<(usize, usize, usize)> for Tensor3 {
    fn index_mut(&mut self, (a, b, c): (usize, usize, usize)) -> &mut Rational {
        debug_assert!(a < self.dim && b < self.dim && c < self.dim);
        &mut self.data[(a * self.dim + b) * self.dim + c]
    }
}

impl Add<&Tensor3> for &Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, rhs.dim);
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub<&Tensor3> for &Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, rhs.dim);
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Neg for &Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor4 {
    dim: usize,
    data: Vec<Rational>,
}

impl Tensor4 {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Rational::zero(); dim.pow(4)],
        }
    }

    pub fn from_fn(
        dim: usize,
        mut f: impl FnMut(usize, usize, usize, usize) -> Rational,
    ) -> Self {
        let mut data = Vec::with_capacity(dim.pow(4));
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    for d in 0..dim {
                        data.push(f(a, b, c, d));
                    }
                }
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nonzero(
        &self,
    ) -> impl Iterator<Item = ((usize, usize, usize, usize), &Rational)> + '_ {
        let d = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| {
                (
                    (idx / (d * d * d), (idx / (d * d)) % d, (idx / d) % d, idx % d),
                    v,
                )
            })
    }
}

impl Index<(usize, usize, usize, usize)> for Tensor4 {
    type Output = Rational;
    fn index(&self, (a, b, c, d): (usize, usize, usize, usize)) -> &Rational {
        let n = self.dim;
        debug_assert!(a < n && b < n && c < n && d < n);
        &self.data[((a * n + b) * n + c) * n + d]
    }
}

impl IndexMut<(usize, usize, usize, usize)> for Tensor4 {
    fn index_mut(&mut self, (a, b, c, d): (usize, usize, usize, usize)) -> &mut Rational {
        let n = self.dim;
        debug_assert!(a < n && b < n && c < n && d < n);
        &mut self.data[((a * n + b) * n + c) * n + d]
    }
}

impl Sub<&Tensor4> for &Tensor4 {
    type Output = Tensor4;
    fn sub(self, rhs: &Tensor4) -> Tensor4 {
        assert_eq!(self.dim, rhs.dim);
        Tensor4 {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(x, y)| x - y).collect(),
        }
    }
}

/// A [`Tensor3`] written over one common denominator, so that long sums of
/// products can run in integer arithmetic without a reduction per step.
/// Numerators below `2^31` in magnitude are also kept as `i64`, whose
/// products can be summed in `i128` without overflow at any size used here.
pub(crate) struct ScaledTensor3 {
    dim: usize,
    den: BigInt,
    big: Vec<BigInt>,
    small: Option<Vec<i64>>,
}

impl ScaledTensor3 {
    pub(crate) fn new(t: &Tensor3) -> Self {
        let den = t.data.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let big: Vec<BigInt> = t.data.iter().map(|v| v.numer() * (&den / v.denom())).collect();
        let bound = 1i64 << 31;
        let small = big
            .iter()
            .map(|v| v.to_i64().filter(|x| x.abs() < bound))
            .collect::<Option<Vec<i64>>>();
        Self { dim: t.dim, den, big, small }
    }

    pub(crate) fn den(&self) -> &BigInt {
        &self.den
    }

    pub(crate) fn small(&self) -> Option<Scaled<'_, i64>> {
        self.small.as_deref().map(|data| Scaled { dim: self.dim, data })
    }

    pub(crate) fn big(&self) -> Scaled<'_, BigInt> {
        Scaled {
            dim: self.dim,
            data: &self.big,
        }
    }
}

/// Borrowed numerators of a [`ScaledTensor3`].
#[derive(Clone, Copy)]
pub(crate) struct Scaled<'a, E> {
    dim: usize,
    data: &'a [E],
}

impl<E> Scaled<'_, E> {
    #[inline]
    pub(crate) fn at(&self, a: usize, b: usize, c: usize) -> &E {
        &self.data[(a * self.dim + b) * self.dim + c]
    }
}

/// Integer entry types with an accumulator for sums of products.
pub(crate) trait Entry {
    type Acc: Default;
    fn mul_add(acc: &mut Self::Acc, x: &Self, y: &Self);
    fn mul_sub(acc: &mut Self::Acc, x: &Self, y: &Self);
    fn into_big(acc: Self::Acc) -> BigInt;
}

impl Entry for i64 {
    type Acc = i128;

    #[inline]
    fn mul_add(acc: &mut i128, x: &i64, y: &i64) {
        *acc += i128::from(*x) * i128::from(*y);
    }

    #[inline]
    fn mul_sub(acc: &mut i128, x: &i64, y: &i64) {
        *acc -= i128::from(*x) * i128::from(*y);
    }

    fn into_big(acc: i128) -> BigInt {
        BigInt::from(acc)
    }
}

impl Entry for BigInt {
    type Acc = BigInt;

    #[inline]
    fn mul_add(acc: &mut BigInt, x: &BigInt, y: &BigInt) {
        if !x.is_zero() && !y.is_zero() {
            *acc += x * y;
        }
    }

    #[inline]
    fn mul_sub(acc: &mut BigInt, x: &BigInt, y: &BigInt) {
        if !x.is_zero() && !y.is_zero() {
            *acc -= x * y;
        }
    }

    fn into_big(acc: BigInt) -> BigInt {
        acc
    }
}
