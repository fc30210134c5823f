//! Curvature of left-invariant connections, the Gauduchon curvature as a
//! polynomial in `t`, and closedness of the torsion 3-form.

use num::{BigInt, Zero};

use crate::connections::{connection_from_torsion, gauduchon_torsion, hat_transform, Connection};
use crate::error::{Error, Result};
use crate::hermitian::{AlmostHermitianAlgebra, ThreeForm, VectorTwoForm};
use crate::lie::biinvariance_witness;
use crate::poly::{PolyRoots, TPoly, TPolyTensor};
use crate::rational::{int, rat, Rational};
use crate::tensor::{Entry, Scaled, ScaledTensor3, Tensor4};

/// `R_abcd = <R(e_a, e_b) e_c, e_d>` with
/// `R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curvature {
    n: usize,
    r: Tensor4,
}

impl Curvature {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &Tensor4 {
        &self.r
    }

    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> &Rational {
        &self.r[(a, b, c, d)]
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }
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

/// `R_abcd = sum_p (G^d_ap G^p_bc - G^d_bp G^p_ac - C^p_ab G^d_pc)`.
pub fn curvature_from_connection(a: &AlmostHermitianAlgebra, g: &Connection) -> Result<Curvature> {
    fn sums<E: Entry>(g: Scaled<'_, E>, c: Scaled<'_, E>, d: usize, f: [&BigInt; 2], den: &BigInt) -> Tensor4 {
        Tensor4::from_fn(d, |x, y, z, w| {
            let (mut quad, mut lin) = (E::Acc::default(), E::Acc::default());
            for p in 0..d {
                E::mul_add(&mut quad, g.at(x, p, w), g.at(y, z, p));
                E::mul_sub(&mut quad, g.at(y, p, w), g.at(x, z, p));
                E::mul_add(&mut lin, c.at(x, y, p), g.at(p, z, w));
            }
            Rational::new(E::into_big(quad) * f[0] - E::into_big(lin) * f[1], den.clone())
        })
    }
    check_dim(a, g.dim())?;
    let d = a.dim();
    let gg = ScaledTensor3::new(g.coefficients());
    let cc = ScaledTensor3::new(a.constants());
    // Both groups over gg.den()^2 * cc.den().
    let den = gg.den() * gg.den() * cc.den();
    let f = [cc.den(), gg.den()];
    let r = match (gg.small(), cc.small()) {
        (Some(gs), Some(cs)) => sums(gs, cs, d, f, &den),
        _ => sums(gg.big(), cc.big(), d, f, &den),
    };
    Ok(Curvature { n: a.n(), r })
}

/// Curvature of the metric connection with torsion `t`, expanded in the hat
/// tensors of the bracket and of `t` (bracket-only, torsion-only and mixed
/// groups). Agrees with the coefficient route.
pub fn curvature_via_hats(a: &AlmostHermitianAlgebra, t: &VectorTwoForm) -> Result<Curvature> {
    fn sums<E: Entry>(
        [c, h, br]: [Scaled<'_, E>; 3],
        d: usize,
        factors: &[BigInt; 5],
        den: &BigInt,
    ) -> Tensor4 {
        Tensor4::from_fn(d, |x, y, z, w| {
            let mut s: [E::Acc; 5] = Default::default();
            for p in 0..d {
                // bracket group
                E::mul_add(&mut s[0], c.at(x, p, w), c.at(y, z, p));
                E::mul_sub(&mut s[0], c.at(y, p, w), c.at(x, z, p));
                E::mul_sub(&mut s[1], br.at(x, y, p), c.at(p, z, w));
                // torsion group
                E::mul_add(&mut s[2], h.at(x, p, w), h.at(y, z, p));
                E::mul_sub(&mut s[2], h.at(y, p, w), h.at(x, z, p));
                // mixed group
                E::mul_add(&mut s[3], c.at(x, p, w), h.at(y, z, p));
                E::mul_add(&mut s[3], c.at(y, z, p), h.at(x, p, w));
                E::mul_sub(&mut s[3], c.at(y, p, w), h.at(x, z, p));
                E::mul_sub(&mut s[3], h.at(y, p, w), c.at(x, z, p));
                E::mul_sub(&mut s[4], br.at(x, y, p), h.at(p, z, w));
            }
            let num: BigInt = s.into_iter().zip(factors).map(|(v, f)| E::into_big(v) * f).sum();
            Rational::new(num, den.clone())
        })
    }
    check_dim(a, t.dim())?;
    let d = a.dim();
    let c = ScaledTensor3::new(hat_transform(a.constants()).values());
    let h = ScaledTensor3::new(hat_transform(t.components()).values());
    let br = ScaledTensor3::new(a.constants());
    let den = c.den() * c.den() * h.den() * h.den() * br.den();
    let factors = [
        &den / (c.den() * c.den()),
        &den / (br.den() * c.den()),
        &den / (h.den() * h.den()),
        &den / (c.den() * h.den()),
        &den / (br.den() * h.den()),
    ];
    let r = match (c.small(), h.small(), br.small()) {
        (Some(cs), Some(hs), Some(bs)) => sums([cs, hs, bs], d, &factors, &den),
        _ => sums([c.big(), h.big(), br.big()], d, &factors, &den),
    };
    Ok(Curvature { n: a.n(), r })
}

/// Curvature of the Gauduchon connection at `t`.
pub fn gauduchon_curvature(a: &AlmostHermitianAlgebra, t: &Rational) -> Curvature {
    let g = connection_from_torsion(a, &gauduchon_torsion(a, t)).expect("dimensions agree");
    curvature_from_connection(a, &g).expect("dimensions agree")
}

/// Every `R_abcd` of the Gauduchon connection as an exact polynomial of
/// degree at most 2 in `t`, interpolated from `t = 0, 1, 2`.
pub fn gauduchon_curvature_poly(a: &AlmostHermitianAlgebra) -> TPolyTensor {
    let r0 = gauduchon_curvature(a, &int(0));
    let r1 = gauduchon_curvature(a, &int(1));
    let r2 = gauduchon_curvature(a, &int(2));
    TPolyTensor::quadratic4(r0.components(), r1.components(), r2.components())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatReport {
    /// Every Gauduchon connection is flat.
    pub identically_flat: bool,
    /// Rational `t`, ascending, at which the curvature was evaluated and
    /// found to vanish. Empty when `identically_flat`.
    pub rational_roots: Vec<Rational>,
    /// Distinct entries whose real roots are irrational; these cannot be
    /// certified exactly and are excluded from `rational_roots`.
    pub unresolved_quadratics: Vec<TPoly>,
}

/// The parameters `t` for which the Gauduchon connection is flat.
pub fn flat_t_values(a: &AlmostHermitianAlgebra) -> FlatReport {
    let poly = gauduchon_curvature_poly(a);
    if poly.is_zero() {
        return FlatReport {
            identically_flat: true,
            rational_roots: vec![],
            unresolved_quadratics: vec![],
        };
    }
    let mut candidates: Option<Vec<Rational>> = None;
    let mut unresolved: Vec<TPoly> = Vec::new();
    for (_, p) in poly.nonzero() {
        match p.roots() {
            PolyRoots::Everything => {}
            PolyRoots::Irrational => {
                if !unresolved.contains(p) {
                    unresolved.push(p.clone());
                }
                // No rational t annihilates this entry.
                candidates = Some(vec![]);
            }
            PolyRoots::Rational(roots) => {
                candidates = Some(match candidates {
                    None => roots,
                    Some(prev) => prev.into_iter().filter(|r| roots.contains(r)).collect(),
                });
            }
        }
    }
    let rational_roots = candidates
        .unwrap_or_default()
        .into_iter()
        .filter(|t| gauduchon_curvature(a, t).is_zero())
        .collect();
    FlatReport {
        identically_flat: false,
        rational_roots,
        unresolved_quadratics: unresolved,
    }
}

/// For a product `h + a` whose `h` block is bi-invariant in this frame,
/// checks that the curvature polynomial is
/// `(t^2/16 - 1/4) sum_p C^p_ij C^l_pk` on the blocks `(i,j,k,l)` and
/// `(i,j,n+k,n+l)` and zero everywhere else.
pub fn compact_product_closed_form_check(a: &AlmostHermitianAlgebra) -> Result<bool> {
    a.require_product_form()?;
    let n = a.n();
    if let Some((i, j, k)) = biinvariance_witness(a.base(), n) {
        return Err(Error::NotBiinvariantFrame { i, j, k });
    }
    let poly = gauduchon_curvature_poly(a);
    let d = 2 * n;
    let c0 = rat(-1, 4);
    let c2 = rat(1, 16);
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                for w in 0..d {
                    let expected = if x < n && y < n && ((z < n && w < n) || (z >= n && w >= n)) {
                        let (k, l) = (z % n, w % n);
                        let s: Rational = (0..n).map(|p| a.c(x, y, p) * a.c(p, k, l)).sum();
                        TPoly::new(&c0 * &s, Rational::zero(), &c2 * &s)
                    } else {
                        TPoly::default()
                    };
                    if *poly.get(&[x, y, z, w]) != expected {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// `beta_abc = <T(e_a, e_b), e_c>` for a totally skew torsion.
pub fn torsion_three_form(t: &VectorTwoForm) -> Result<ThreeForm> {
    ThreeForm::new(t.n(), t.components().clone())
}

/// Left-invariant exterior derivative of a 3-form:
/// `d beta(a,b,c,d) = -beta([a,b],c,d) + beta([a,c],b,d) - beta([a,d],b,c)
///  - beta([b,c],a,d) + beta([b,d],a,c) - beta([c,d],a,b)`.
pub fn d_three_form(a: &AlmostHermitianAlgebra, beta: &ThreeForm) -> Result<Tensor4> {
    check_dim(a, beta.dim())?;
    let d = a.dim();
    let b = beta.components();
    let br = |x: usize, y: usize, u: usize, v: usize| -> Rational {
        let mut acc = Rational::zero();
        for p in 0..d {
            let cp = a.c(x, y, p);
            if !cp.is_zero() {
                acc += cp * &b[(p, u, v)];
            }
        }
        acc
    };
    Ok(Tensor4::from_fn(d, |x, y, z, w| {
        -br(x, y, z, w) + br(x, z, y, w) - br(x, w, y, z) - br(y, z, x, w) + br(y, w, x, z)
            - br(z, w, x, y)
    }))
}

/// Outcome of the strong-Kähler-with-torsion test at `t = 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SktReport {
    Skt,
    /// The `t = 2` torsion is not totally skew; 1-based witness.
    NotSkew(usize, usize, usize),
    /// The torsion 3-form is not closed; 1-based witness.
    NotClosed(usize, usize, usize, usize),
}

pub fn skt_report(a: &AlmostHermitianAlgebra) -> SktReport {
    let t = gauduchon_torsion(a, &int(2));
    let beta = match torsion_three_form(&t) {
        Ok(b) => b,
        Err(Error::NotTotallySkew { a, b, c }) => return SktReport::NotSkew(a, b, c),
        Err(e) => unreachable!("unexpected error {e}"),
    };
    let db = d_three_form(a, &beta).expect("dimensions agree");
    let witness = db.nonzero().next().map(|(i, _)| i);
    match witness {
        None => SktReport::Skt,
        Some((x, y, z, w)) => SktReport::NotClosed(x + 1, y + 1, z + 1, w + 1),
    }
}

/// True iff the `t = 2` torsion is totally skew and its 3-form is closed.
pub fn is_skt(a: &AlmostHermitianAlgebra) -> bool {
    skt_report(a) == SktReport::Skt
}
