//! Exact linear combinations for transcribing component formulas.

use crate::rational::{int, Rational};

pub(crate) trait Coef {
    fn into_rational(self) -> Rational;
}

impl Coef for i64 {
    fn into_rational(self) -> Rational {
        int(self)
    }
}

impl Coef for Rational {
    fn into_rational(self) -> Rational {
        self
    }
}

impl Coef for &Rational {
    fn into_rational(self) -> Rational {
        self.clone()
    }
}

pub(crate) fn coef(c: impl Coef) -> Rational {
    c.into_rational()
}

/// `combo![c1 => x1, c2 => x2, ...]` evaluates `sum c_i * x_i`, where each
/// `x_i` is a `&Rational` and each `c_i` an `i64` or a rational.
macro_rules! combo {
    ($($c:expr => $x:expr),* $(,)?) => {{
        let mut acc = <$crate::rational::Rational as ::num::Zero>::zero();
        $({
            let x: &$crate::rational::Rational = $x;
            if !::num::Zero::is_zero(x) {
                acc += $crate::combo::coef($c) * x;
            }
        })*
        acc
    }};
}

pub(crate) use combo;
