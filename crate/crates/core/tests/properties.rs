//! Property tests over seeded random algebras, frames and `(1,1)` forms.

mod common;

use common::*;
use lieherm::connections::{
    bismut_simplified_torsion, connection_from_torsion, gauduchon_alpha, gauduchon_torsion,
    gauduchon_torsion_from_thetas, gauduchon_torsion_poly, hermitian_torsion, torsion_11_part,
    torsion_of_connection, verify_metric_compat,
};
use lieherm::curvature::{
    curvature_from_connection, gauduchon_curvature, gauduchon_curvature_poly,
};
use lieherm::hermitian::{
    d_omega, d_omega_plus, eta_plus, frame_change, integrable_identity_defect, is_integrable,
    nijenhuis, nijenhuis_is_totally_skew, theta_j, AlmostHermitianAlgebra, ThreeForm,
    VectorTwoForm,
};
use lieherm::lie::{
    jacobi_defect, killing_form, product_with_abelian,
};
use lieherm::verify::{verify_suite, ConnectionSource};
use lieherm::{int, rat, Rational, Tensor3};
use num::Zero;
use proptest::prelude::*;
use rand::Rng;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(24)
}

fn random_integrable(seed: u64, n: usize) -> AlmostHermitianAlgebra {
    let mut rng = seeded(seed);
    let h = match rng.gen_range(0..3) {
        0 => semidirect(&mut rng, n),
        1 if n >= 3 => two_step(&mut rng, n, 1),
        _ if n >= 3 => so3_plus_abelian(&small_nonzero(&mut rng), n),
        _ => semidirect(&mut rng, n),
    };
    let a = AlmostHermitianAlgebra::new(complexification(&h)).unwrap();
    frame_change(&a, &random_unitary(&mut rng, n)).unwrap()
}

fn vecs(d: usize) -> Vec<Vector> {
    (0..d).map(|a| basis(d, a)).collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn brackets_are_antisymmetric(seed in any::<u64>(), n in 1usize..=3, rotate in any::<bool>()) {
        let a = random_algebra(&mut seeded(seed), n, rotate);
        let d = a.dim();
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    prop_assert_eq!(a.c(x, y, z), &-a.c(y, x, z));
                }
            }
        }
        prop_assert!(jacobi_defect(a.base()).is_zero());
    }

    #[test]
    fn killing_form_is_ad_invariant(seed in any::<u64>(), n in 1usize..=3) {
        let a = random_algebra(&mut seeded(seed), n, true);
        let k = killing_form(a.base());
        let d = a.dim();
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let s: Rational = (0..d)
                        .map(|p| a.c(x, y, p) * &k[p][z] + a.c(x, z, p) * &k[y][p])
                        .sum();
                    prop_assert!(s.is_zero());
                }
            }
        }
    }

    #[test]
    fn product_has_abelian_half(seed in any::<u64>(), n in 2usize..=4) {
        let h = semidirect(&mut seeded(seed), n);
        let g = product_with_abelian(&h).unwrap();
        for x in 0..2 * n {
            for y in 0..2 * n {
                for z in 0..2 * n {
                    if x.max(y).max(z) >= n {
                        prop_assert!(g.c(x, y, z).is_zero());
                    } else {
                        prop_assert_eq!(g.c(x, y, z), h.c(x, y, z));
                    }
                }
            }
        }
    }

    #[test]
    fn frame_changes_compose(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = seeded(seed);
        let a = random_algebra(&mut rng, n, false);
        let k1 = random_unitary(&mut rng, n);
        let k2 = random_unitary(&mut rng, n);
        let stepwise = frame_change(&frame_change(&a, &k1).unwrap(), &k2).unwrap();
        let direct = frame_change(&a, &k1.compose(&k2).unwrap()).unwrap();
        prop_assert_eq!(stepwise.constants(), direct.constants());
        prop_assert!(jacobi_defect(stepwise.base()).is_zero());
    }

    #[test]
    fn nijenhuis_reflections(seed in any::<u64>(), n in 1usize..=3) {
        let a = random_algebra(&mut seeded(seed), n, true);
        let nij = nijenhuis(&a);
        let t = nij.components();
        prop_assert_eq!(t, &nijenhuis_oracle(a.base()));
        let vs = vecs(a.dim());
        for x in &vs {
            for y in &vs {
                for z in &vs {
                    prop_assert_eq!(eval3(t, x, &j(y), z), eval3(t, x, y, &j(z)));
                    prop_assert_eq!(eval3(t, &j(x), &j(y), z), -eval3(t, x, y, z));
                }
            }
        }
    }

    #[test]
    fn theta_j_squared(seed in any::<u64>(), n in 1usize..=3) {
        let th = random_two_form(&mut seeded(seed), n);
        let once = theta_j(&th);
        prop_assert_eq!(theta_j(&once), once.scale(&int(4)));
    }

    #[test]
    fn theta_j_pattern(seed in any::<u64>(), n in 1usize..=3) {
        let tj = theta_j(&random_two_form(&mut seeded(seed), n));
        let t = tj.components();
        let vs = vecs(2 * n);
        for x in &vs {
            for y in &vs {
                for z in &vs {
                    prop_assert_eq!(eval3(t, x, &j(y), z), eval3(t, x, y, &j(z)));
                }
            }
        }
    }

    #[test]
    fn theta_j_kills_type_11(seed in any::<u64>(), n in 1usize..=3) {
        let al = random_alpha(&mut seeded(seed), n);
        prop_assert!(theta_j(al.form()).is_zero());
    }

    #[test]
    fn d_omega_plus_is_projection(seed in any::<u64>(), n in 1usize..=3) {
        let a = random_algebra(&mut seeded(seed), n, true);
        let dw = d_omega(&a);
        prop_assert_eq!(dw.components(), &d_omega_oracle(a.base()));
        let plus = d_omega_plus(&a);
        prop_assert_eq!(&plus, &eta_plus(&dw));
        prop_assert_eq!(&eta_plus(&plus), &plus);
    }

    #[test]
    fn integrable_identities(seed in any::<u64>(), n in 1usize..=3) {
        let a = random_integrable(seed, n);
        prop_assert!(is_integrable(&a));
        let dw = d_omega(&a);
        prop_assert_eq!(&d_omega_plus(&a), &dw);
        prop_assert!(integrable_identity_defect(&a).is_zero());
    }

    #[test]
    fn torsion_recovers_alpha(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = seeded(seed);
        let a = random_algebra(&mut rng, n, true);
        let al = random_alpha(&mut rng, n);
        let other = random_alpha(&mut rng, n);
        let t = hermitian_torsion(&a, &al).unwrap();
        prop_assert_eq!(&torsion_11_part(&t), al.form());
        let t2 = hermitian_torsion(&a, &other).unwrap();
        prop_assert_eq!(al.form() == other.form(), t == t2);
    }

    #[test]
    fn torsion_connection_round_trip(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = seeded(seed);
        let a = random_algebra(&mut rng, n, true);
        let t = random_two_form(&mut rng, n);
        let g = connection_from_torsion(&a, &t).unwrap();
        prop_assert!(verify_metric_compat(&g));
        prop_assert_eq!(torsion_of_connection(&a, &g).unwrap(), t);
    }

    #[test]
    fn gauduchon_routes_agree(seed in any::<u64>(), n in 1usize..=3, p in -6i64..=6, q in 1i64..=3) {
        let a = random_algebra(&mut seeded(seed), n, true);
        let t = rat(p, q);
        let closed = gauduchon_torsion(&a, &t);
        prop_assert_eq!(&closed, &hermitian_torsion(&a, &gauduchon_alpha(&a, &t)).unwrap());
        prop_assert_eq!(&closed, &gauduchon_torsion_from_thetas(&a, &t));
        prop_assert_eq!(closed.components(), &gauduchon_torsion_poly(&a).eval3(&t));
    }

    #[test]
    fn suite_passes_on_random_alpha(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = seeded(seed);
        let a = random_algebra(&mut rng, n, true);
        let al = random_alpha(&mut rng, n);
        let report = verify_suite(&a, &ConnectionSource::Alpha(al)).unwrap();
        prop_assert!(report.all_passed(), "{:?}", report);
    }

    #[test]
    fn curvature_matches_operator_definition(seed in any::<u64>(), n in 1usize..=2) {
        let mut rng = seeded(seed);
        let a = random_algebra(&mut rng, n, true);
        let t = hermitian_torsion(&a, &random_alpha(&mut rng, n)).unwrap();
        let g = connection_from_torsion(&a, &t).unwrap();
        let r = curvature_from_connection(&a, &g).unwrap();
        prop_assert_eq!(r.components(), &curvature_oracle(a.base(), g.coefficients()));
        let d = a.dim();
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    for w in 0..d {
                        prop_assert_eq!(r.get(x, y, z, w), &-r.get(x, y, w, z));
                    }
                }
            }
        }
    }
}

#[test]
fn curvature_polynomial_matches_samples() {
    let mut rng = seeded(71);
    let ts = [int(-2), int(-1), int(0), rat(1, 2), int(3)];
    for k in 0..12 {
        let a = random_algebra(&mut rng, 1 + k % 3, true);
        let poly = gauduchon_curvature_poly(&a);
        for t in &ts {
            assert_eq!(&poly.eval4(t), gauduchon_curvature(&a, t).components());
        }
    }
}

/// Products with a bi-invariant `h`, rotated, have totally skew `N`.
fn skew_nijenhuis_inputs() -> Vec<AlmostHermitianAlgebra> {
    let mut rng = seeded(72);
    let mut out = vec![
        AlmostHermitianAlgebra::from_catalog("so3xR3").unwrap(),
        AlmostHermitianAlgebra::from_catalog("abelian2").unwrap(),
        AlmostHermitianAlgebra::from_catalog("abelian6").unwrap(),
    ];
    for k in 0..6 {
        let s = small_nonzero(&mut rng);
        let h = lieherm::lie::catalog("so3").unwrap().scaled(&s);
        let a = AlmostHermitianAlgebra::new(product_with_abelian(&h).unwrap()).unwrap();
        out.push(frame_change(&a, &random_unitary(&mut rng, 3)).unwrap());
        out.push(random_integrable(100 + k, 1 + (k as usize) % 3));
    }
    out
}

#[test]
fn appendix_identities_on_skew_nijenhuis() {
    for a in skew_nijenhuis_inputs() {
        assert!(nijenhuis_is_totally_skew(&a));
        assert_eq!(bismut_simplified_torsion(&a).unwrap(), gauduchon_torsion(&a, &int(2)));
        let nt = nijenhuis(&a);
        let dw: ThreeForm = d_omega(&a);
        let (n3, w) = (nt.components(), dw.components());
        let vs = vecs(a.dim());
        for x in &vs {
            for y in &vs {
                for z in &vs {
                    let lhs = int(3) * eval3(n3, x, y, z);
                    let rhs = -eval3(w, x, &j(y), z) - eval3(w, &j(x), y, z)
                        + eval3(w, &j(x), &j(y), &j(z))
                        - eval3(w, x, y, &j(z));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn gauduchon_torsion_is_tensorial() {
    let mut rng = seeded(73);
    for k in 0..20 {
        let n = 1 + k % 3;
        let a = random_algebra(&mut rng, n, false);
        let u = random_unitary(&mut rng, n);
        let moved = frame_change(&a, &u).unwrap();
        for t in [int(0), int(1), int(2), int(-2), rat(1, 3)] {
            let before: VectorTwoForm = gauduchon_torsion(&a, &t);
            let after = gauduchon_torsion(&moved, &t);
            assert_eq!(before.transformed(&u).unwrap(), after);
        }
    }
}

#[test]
fn complexification_is_standard() {
    let h = lieherm::lie::catalog("so3").unwrap();
    let g = complexification(&h);
    assert!(jacobi_defect(&g).is_zero());
    let a = AlmostHermitianAlgebra::new(g).unwrap();
    assert!(is_integrable(&a));
    let _: Tensor3 = integrable_identity_defect(&a);
}
