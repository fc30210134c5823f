//! Library operations against definition-level oracles on catalog and
//! random algebras.

mod common;

use common::*;
use lieherm::connections::{connection_from_torsion, gauduchon_torsion, hermitian_torsion};
use lieherm::curvature::{curvature_from_connection, d_three_form};
use lieherm::hermitian::{
    d_omega, d_omega_plus, eta_plus, nijenhuis, AlmostHermitianAlgebra, ThreeForm,
};
use lieherm::lie::{catalog, jacobi_defect, killing_form};
use lieherm::{int, rat, Rational, Tensor3};
use num::Zero;

fn catalog_algebras() -> Vec<AlmostHermitianAlgebra> {
    ["abelian2", "abelian4", "abdo4", "so3xR3"]
        .iter()
        .map(|n| AlmostHermitianAlgebra::from_catalog(n).unwrap())
        .collect()
}

#[test]
fn nijenhuis_matches_definition() {
    let mut rng = seeded(11);
    let mut algebras = catalog_algebras();
    for k in 0..12 {
        algebras.push(random_algebra(&mut rng, 2 + k % 2, k % 3 == 0));
    }
    for a in &algebras {
        assert_eq!(nijenhuis(a).components(), &nijenhuis_oracle(a.base()));
    }
}

#[test]
fn d_omega_matches_invariant_formula() {
    let mut rng = seeded(12);
    let mut algebras = catalog_algebras();
    for k in 0..12 {
        algebras.push(random_algebra(&mut rng, 2 + k % 2, k % 2 == 0));
    }
    for a in &algebras {
        assert_eq!(d_omega(a).components(), &d_omega_oracle(a.base()));
        assert_eq!(d_omega_plus(a), eta_plus(&d_omega(a)));
    }
}

#[test]
fn d_omega_spot_values_from_oracle() {
    let so3xr3 = d_omega_oracle(&catalog("so3xR3").unwrap());
    assert_eq!(so3xr3[(0, 1, 5)], int(1));
    let abdo4 = d_omega_oracle(&catalog("abdo4").unwrap());
    assert_eq!(abdo4[(0, 1, 3)], int(-2));
}

#[test]
fn jacobi_defect_by_expansion() {
    // [e1,e2]=e2, [e1,e3]=e3, [e2,e3]=e1: the cyclic double bracket sum on
    // (e1,e2,e3) is e1 + 0 + e1.
    let broken = lieherm::lie::LieAlgebra::build(
        3,
        &[
            lieherm::lie::BracketEntry::new(1, 2, 2, int(1)),
            lieherm::lie::BracketEntry::new(1, 3, 3, int(1)),
            lieherm::lie::BracketEntry::new(2, 3, 1, int(1)),
        ],
    )
    .unwrap();
    let d = 3;
    let (x, y, z) = (basis(d, 0), basis(d, 1), basis(d, 2));
    let cyc = add(
        &add(
            &bracket(&broken, &bracket(&broken, &x, &y), &z),
            &bracket(&broken, &bracket(&broken, &y, &z), &x),
        ),
        &bracket(&broken, &bracket(&broken, &z, &x), &y),
    );
    let defect = jacobi_defect(&broken);
    for l in 0..3 {
        assert_eq!(defect[(0, 1, 2, l)], cyc[l]);
    }
    assert_eq!(defect[(0, 1, 2, 0)], int(2));
}

#[test]
fn killing_form_of_so3_by_traces() {
    let so3 = catalog("so3").unwrap();
    let k = killing_form(&so3);
    for a in 0..3 {
        for b in 0..3 {
            // tr(ad_a ad_b) = sum_c <[e_a,[e_b,e_c]], e_c>
            let tr: Rational = (0..3)
                .map(|c| {
                    bracket(&so3, &basis(3, a), &bracket(&so3, &basis(3, b), &basis(3, c)))[c].clone()
                })
                .sum();
            assert_eq!(k[a][b], tr);
            assert_eq!(k[a][b], if a == b { int(-2) } else { int(0) });
        }
    }
}

#[test]
fn curvature_matches_operator_definition() {
    let mut rng = seeded(13);
    let mut cases = Vec::new();
    for a in catalog_algebras() {
        cases.push((a.clone(), gauduchon_torsion(&a, &rat(1, 3))));
    }
    for k in 0..4 {
        let a = random_algebra(&mut rng, 2, k % 2 == 1);
        let al = random_alpha(&mut rng, 2);
        let t = hermitian_torsion(&a, &al).unwrap();
        cases.push((a, t));
    }
    for (a, t) in &cases {
        let g = connection_from_torsion(a, t).unwrap();
        assert_eq!(
            curvature_from_connection(a, &g).unwrap().components(),
            &curvature_oracle(a.base(), g.coefficients())
        );
    }
}

#[test]
fn d_three_form_matches_alternating_sum() {
    let mut rng = seeded(14);
    for k in 0..8 {
        let a = if k == 0 {
            AlmostHermitianAlgebra::from_catalog("abdo4").unwrap()
        } else {
            random_algebra(&mut rng, 2, k % 2 == 0)
        };
        let d = a.dim();
        let mut t = Tensor3::zeros(d);
        for x in 0..d {
            for y in x + 1..d {
                for z in y + 1..d {
                    t.set_alternating(x, y, z, small_rational(&mut rng));
                }
            }
        }
        let beta = ThreeForm::new(a.n(), t.clone()).unwrap();
        assert_eq!(d_three_form(&a, &beta).unwrap(), d_three_form_oracle(a.base(), &t));
    }
}

#[test]
fn d_three_form_basis_values_on_abdo4() {
    let l = catalog("abdo4").unwrap();
    let mut b123 = Tensor3::zeros(4);
    b123.set_alternating(0, 1, 2, int(1));
    let mut b234 = Tensor3::zeros(4);
    b234.set_alternating(1, 2, 3, int(1));
    assert!(d_three_form_oracle(&l, &b123)[(0, 1, 2, 3)].is_zero());
    assert_eq!(d_three_form_oracle(&l, &b234)[(0, 1, 2, 3)], int(-3));
}
