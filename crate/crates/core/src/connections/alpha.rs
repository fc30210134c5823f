use crate::error::{Error, Result, Type11Condition};
use crate::hermitian::{AlmostHermitianAlgebra, ThreeForm, VectorTwoForm};
use crate::rational::rat;
use crate::tensor::Tensor3;

/// A vector-valued 2-form of type (1,1): `alpha(JX, JY) = alpha(X, Y)`.
/// Such forms parametrize the Hermitian connections one-to-one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaForm(VectorTwoForm);

impl AlphaForm {
    pub fn zeros(n: usize) -> Self {
        Self(VectorTwoForm::zeros(n))
    }

    pub fn form(&self) -> &VectorTwoForm {
        &self.0
    }

    pub fn into_form(self) -> VectorTwoForm {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &crate::Rational {
        self.0.get(a, b, c)
    }
}

/// Accepts `raw` iff `alpha^c_ij = alpha^c_{n+i,n+j}` and
/// `alpha^c_{i,n+j} = -alpha^c_{n+i,j}` for all `i, j < n` and all `c`.
/// The first failure in `(i, j, c)` order is reported, condition (a) before
/// (b) at the same triple.
pub fn validate_alpha(raw: VectorTwoForm) -> Result<AlphaForm> {
    let n = raw.n();
    for i in 0..n {
        for j in 0..n {
            for c in 0..2 * n {
                let fail = |condition| Error::NotType11 {
                    condition,
                    i: i + 1,
                    j: j + 1,
                    c: c + 1,
                };
                if raw.get(i, j, c) != raw.get(n + i, n + j, c) {
                    return Err(fail(Type11Condition::A));
                }
                if *raw.get(i, n + j, c) != -raw.get(n + i, j, c) {
                    return Err(fail(Type11Condition::B));
                }
            }
        }
    }
    Ok(AlphaForm(raw))
}

/// `alpha^+_abc = alpha^c_ab + alpha^a_bc + alpha^b_ca`.
pub fn alpha_plus(alpha: &AlphaForm) -> ThreeForm {
    let n = alpha.n();
    let al = alpha.form().components();
    let t = Tensor3::from_fn(2 * n, |a, b, c| &al[(a, b, c)] + &al[(b, c, a)] + &al[(c, a, b)]);
    ThreeForm::from_raw(n, t)
}

/// The (1,1) form whose Hermitian connection is the trivial one
/// (`Gamma = 0`) on a product `h + a` with `J h = a`:
/// `alpha^k_ij = alpha^k_{n+i,n+j} = -C^k_ij / 2`, all other blocks zero.
pub fn trivial_alpha(a: &AlmostHermitianAlgebra) -> Result<AlphaForm> {
    a.require_product_form()?;
    let n = a.n();
    let mut t = Tensor3::zeros(2 * n);
    let half = rat(-1, 2);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = a.c(i, j, k) * &half;
                t[(n + i, n + j, k)] = v.clone();
                t[(i, j, k)] = v;
            }
        }
    }
    validate_alpha(VectorTwoForm::from_raw(n, t))
}
