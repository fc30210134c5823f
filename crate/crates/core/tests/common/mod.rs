//! Independent oracles and seeded random inputs shared by the integration
//! tests. Nothing here calls the closed-form component formulas.

#![allow(dead_code)]

use lieherm::connections::{validate_alpha, AlphaForm};
use lieherm::hermitian::{AlmostHermitianAlgebra, VectorTwoForm};
use lieherm::lie::{catalog, product_with_abelian, BracketEntry, FrameChange, LieAlgebra};
use lieherm::{rat, Rational, Tensor3, Tensor4};
use num::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Vector = Vec<Rational>;

pub fn basis(d: usize, a: usize) -> Vector {
    (0..d).map(|i| if i == a { rat(1, 1) } else { Rational::zero() }).collect()
}

pub fn dot(u: &Vector, v: &Vector) -> Rational {
    u.iter().zip(v).map(|(x, y)| x * y).sum()
}

pub fn add(u: &Vector, v: &Vector) -> Vector {
    u.iter().zip(v).map(|(x, y)| x + y).collect()
}

pub fn sub(u: &Vector, v: &Vector) -> Vector {
    u.iter().zip(v).map(|(x, y)| x - y).collect()
}

/// `J` as a linear map: the first half of the frame goes to the second
/// half and the second half to minus the first.
pub fn j(u: &Vector) -> Vector {
    let n = u.len() / 2;
    (0..2 * n).map(|i| if i < n { -&u[n + i] } else { u[i - n].clone() }).collect()
}

pub fn bracket(l: &LieAlgebra, u: &Vector, v: &Vector) -> Vector {
    let d = l.dim();
    (0..d)
        .map(|c| {
            let mut acc = Rational::zero();
            for a in 0..d {
                if u[a].is_zero() {
                    continue;
                }
                for b in 0..d {
                    if !v[b].is_zero() {
                        acc += &u[a] * &v[b] * l.c(a, b, c);
                    }
                }
            }
            acc
        })
        .collect()
}

/// `omega(u, v) = <J u, v>`.
pub fn omega(u: &Vector, v: &Vector) -> Rational {
    dot(&j(u), v)
}

/// `N(X,Y) = J[JX,Y] + J[X,JY] + [X,Y] - [JX,JY]`, component `(a,b,c)`.
pub fn nijenhuis_oracle(l: &LieAlgebra) -> Tensor3 {
    let d = l.dim();
    Tensor3::from_fn(d, |a, b, c| {
        let (x, y) = (basis(d, a), basis(d, b));
        let v = add(
            &add(&j(&bracket(l, &j(&x), &y)), &j(&bracket(l, &x, &j(&y)))),
            &sub(&bracket(l, &x, &y), &bracket(l, &j(&x), &j(&y))),
        );
        v[c].clone()
    })
}

/// `dw(X,Y,Z) = -w([X,Y],Z) - w([Y,Z],X) - w([Z,X],Y)`.
pub fn d_omega_oracle(l: &LieAlgebra) -> Tensor3 {
    let d = l.dim();
    Tensor3::from_fn(d, |a, b, c| {
        let (x, y, z) = (basis(d, a), basis(d, b), basis(d, c));
        -omega(&bracket(l, &x, &y), &z) - omega(&bracket(l, &y, &z), &x) - omega(&bracket(l, &z, &x), &y)
    })
}

/// Evaluates a trilinear form given by components on arbitrary vectors.
pub fn eval3(t: &Tensor3, x: &Vector, y: &Vector, z: &Vector) -> Rational {
    let d = t.dim();
    let mut acc = Rational::zero();
    for a in 0..d {
        if x[a].is_zero() {
            continue;
        }
        for b in 0..d {
            if y[b].is_zero() {
                continue;
            }
            for c in 0..d {
                if !z[c].is_zero() {
                    acc += &x[a] * &y[b] * &z[c] * &t[(a, b, c)];
                }
            }
        }
    }
    acc
}

/// `nabla_X Y` for a left-invariant connection with coefficients `g`.
pub fn nabla(g: &Tensor3, x: &Vector, y: &Vector) -> Vector {
    let d = g.dim();
    (0..d).map(|c| eval3(g, x, y, &basis(d, c))).collect()
}

/// `<R(X,Y)Z, W>` straight from `R = [nabla_X, nabla_Y] - nabla_[X,Y]`,
/// with every `nabla` applied to left-invariant fields.
pub fn curvature_oracle(l: &LieAlgebra, g: &Tensor3) -> Tensor4 {
    let d = l.dim();
    Tensor4::from_fn(d, |a, b, c, e| {
        let (x, y, z) = (basis(d, a), basis(d, b), basis(d, c));
        let r = sub(
            &sub(&nabla(g, &x, &nabla(g, &y, &z)), &nabla(g, &y, &nabla(g, &x, &z))),
            &nabla(g, &bracket(l, &x, &y), &z),
        );
        r[e].clone()
    })
}

/// Exterior derivative of a left-invariant 3-form by the general
/// alternating sum over pairs.
pub fn d_three_form_oracle(l: &LieAlgebra, beta: &Tensor3) -> Tensor4 {
    let d = l.dim();
    Tensor4::from_fn(d, |a, b, c, e| {
        let xs = [basis(d, a), basis(d, b), basis(d, c), basis(d, e)];
        let mut acc = Rational::zero();
        for i in 0..4 {
            for k in i + 1..4 {
                let rest: Vec<&Vector> = (0..4).filter(|&m| m != i && m != k).map(|m| &xs[m]).collect();
                let v = eval3(beta, &bracket(l, &xs[i], &xs[k]), rest[0], rest[1]);
                if (i + k) % 2 == 0 {
                    acc += v;
                } else {
                    acc -= v;
                }
            }
        }
        acc
    })
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let p: i64 = rng.gen_range(-3..=3);
    let q: i64 = rng.gen_range(1..=3);
    rat(p, q)
}

fn square(rng: &mut ChaCha8Rng, n: usize, f: impl Fn(usize, usize, &mut ChaCha8Rng) -> Option<Rational>) -> Vec<Vec<Rational>> {
    let mut m = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if let Some(v) = f(i, k, rng) {
                m[i][k] = v;
            }
        }
    }
    m
}

/// A random exact unitary matrix from the Cayley transform of a random
/// `J`-commuting skew matrix with entries in `{-1, -1/2, 0, 1/2, 1}`.
pub fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> FrameChange {
    let pick = |rng: &mut ChaCha8Rng| rat(rng.gen_range(-2..=2), 2);
    let mut a = square(rng, n, |_, _, _| None);
    let mut b = square(rng, n, |_, _, _| None);
    for i in 0..n {
        for k in i..n {
            let bv = pick(rng);
            b[i][k] = bv.clone();
            b[k][i] = bv;
            if k > i {
                let av = pick(rng);
                a[k][i] = -&av;
                a[i][k] = av;
            }
        }
    }
    FrameChange::cayley(&a, &b).expect("Cayley transform of a skew matrix is unitary")
}

/// `R x R^m` with `ad(e_1)` a random matrix on the ideal.
pub fn semidirect(rng: &mut ChaCha8Rng, dim: usize) -> LieAlgebra {
    let mut entries = Vec::new();
    for i in 2..=dim {
        for c in 2..=dim {
            if rng.gen_bool(0.5) {
                let v = small_rational(rng);
                if !v.is_zero() {
                    entries.push(BracketEntry::new(1, i, c, v));
                }
            }
        }
    }
    LieAlgebra::build(dim, &entries).unwrap()
}

/// Two-step nilpotent: brackets of the first `dim - z` vectors land in the
/// last `z`, which are central.
pub fn two_step(rng: &mut ChaCha8Rng, dim: usize, z: usize) -> LieAlgebra {
    let m = dim - z;
    let mut entries = Vec::new();
    for a in 1..=m {
        for b in a + 1..=m {
            for c in m + 1..=dim {
                let v = small_rational(rng);
                if !v.is_zero() {
                    entries.push(BracketEntry::new(a, b, c, v));
                }
            }
        }
    }
    LieAlgebra::build(dim, &entries).unwrap()
}

/// `so(3)` (scaled) plus an abelian summand, in total dimension `dim >= 3`.
pub fn so3_plus_abelian(scale: &Rational, dim: usize) -> LieAlgebra {
    let so3 = catalog("so3").unwrap().scaled(scale);
    let entries: Vec<BracketEntry> = so3.entries();
    LieAlgebra::build(dim, &entries).unwrap()
}

/// A random Jacobi-zero algebra of dimension `2n`, drawn from several
/// families, optionally re-expressed in a random unitary frame.
pub fn random_algebra(rng: &mut ChaCha8Rng, n: usize, rotate: bool) -> AlmostHermitianAlgebra {
    let d = 2 * n;
    let base = match rng.gen_range(0..5) {
        0 => semidirect(rng, d),
        1 if d >= 3 => {
            let z = rng.gen_range(1..=d - 2);
            two_step(rng, d, z)
        }
        2 if d >= 4 => so3_plus_abelian(&small_nonzero(rng), d),
        3 => product_with_abelian(&semidirect(rng, n)).unwrap(),
        _ if n == 3 => product_with_abelian(&catalog("so3").unwrap().scaled(&small_nonzero(rng))).unwrap(),
        _ => product_with_abelian(&two_step(rng, n, 1)).unwrap(),
    };
    let a = AlmostHermitianAlgebra::new(base).unwrap();
    if rotate {
        lieherm::hermitian::frame_change(&a, &random_unitary(rng, n)).unwrap()
    } else {
        a
    }
}

/// `h (x) C` viewed as a real algebra with `J` multiplication by `i`; its
/// complex structure is always integrable.
pub fn complexification(h: &LieAlgebra) -> LieAlgebra {
    let n = h.dim();
    let mut entries = Vec::new();
    for e in h.entries() {
        let (a, b, c) = (e.a, e.b, e.c);
        entries.push(BracketEntry::new(a, b, c, e.value.clone()));
        entries.push(BracketEntry::new(n + a, n + b, c, -&e.value));
    }
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                let v = h.c(a - 1, b - 1, c - 1);
                if !v.is_zero() {
                    entries.push(BracketEntry::new(a, n + b, n + c, v.clone()));
                }
            }
        }
    }
    LieAlgebra::build(2 * n, &entries).unwrap()
}

pub fn small_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let v = small_rational(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

/// A random antisymmetric vector-valued 2-form.
pub fn random_two_form(rng: &mut ChaCha8Rng, n: usize) -> VectorTwoForm {
    let d = 2 * n;
    let mut t = Tensor3::zeros(d);
    for a in 0..d {
        for b in a + 1..d {
            for c in 0..d {
                if rng.gen_bool(0.4) {
                    let v = small_rational(rng);
                    t[(b, a, c)] = -&v;
                    t[(a, b, c)] = v;
                }
            }
        }
    }
    VectorTwoForm::new(n, t).unwrap()
}

/// A random (1,1) form: `(beta(X,Y) + beta(JX,JY)) / 2` for random `beta`,
/// computed with the vector-level `J`.
pub fn random_alpha(rng: &mut ChaCha8Rng, n: usize) -> AlphaForm {
    let beta = random_two_form(rng, n);
    let d = 2 * n;
    let bt = beta.components();
    let t = Tensor3::from_fn(d, |a, b, c| {
        let (x, y, z) = (basis(d, a), basis(d, b), basis(d, c));
        (eval3(bt, &x, &y, &z) + eval3(bt, &j(&x), &j(&y), &z)) * rat(1, 2)
    });
    validate_alpha(VectorTwoForm::new(n, t).unwrap()).expect("projection is of type (1,1)")
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}
