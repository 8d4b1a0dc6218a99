mod common;

use common::*;
use malcev_super::algebra::*;
use malcev_super::fixtures::*;
use malcev_super::graded::{GradedLinearMap, SuperSpace};
use malcev_super::linalg::Matrix;
use malcev_super::modules::*;
use malcev_super::operators::*;
use malcev_super::search::{grid_o_operators, grid_rota_baxter};
use malcev_super::{q, Error, Superalgebra};
use proptest::prelude::*;

fn oracle_oop_ok(t: &GradedLinearMap, r: &Representation) -> bool {
    let mats: Vec<Matrix> = r.actions().iter().map(|m| m.matrix().clone()).collect();
    let vpar: Vec<u8> = r.space().parities().iter().map(|p| p.bit()).collect();
    o_operator_ok(&Oracle::mul_of(r.algebra()), &mats, &vpar, t.matrix())
}

/// The 2-dimensional non-abelian Lie algebra `[x, y] = y`.
fn two_dim() -> Superalgebra {
    Superalgebra::with_product(SuperSpace::new(2, 0), vec![(0, 1, 1, q(1)), (1, 0, 1, q(-1))]).unwrap()
}

fn gl11() -> Superalgebra {
    commutator_superalgebra(&gl11_associative(), MUL).unwrap()
}

fn form(space: SuperSpace, rows: &[&[i64]]) -> BilinearForm {
    BilinearForm::new(space, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
}

#[test]
fn zero_operator_gives_zero_product() {
    for r in [sl2_standard(), malcev_1_1_module(), Representation::coadjoint(&gl11()).unwrap()] {
        let z = GradedLinearMap::zero(r.space(), r.algebra().space());
        assert!(check_o_operator_malcev(&z, &r).unwrap().holds());
        assert!(pre_malcev_from_o_operator(&z, &r).unwrap().product().unwrap().is_zero());
    }
}

#[test]
fn every_map_into_an_abelian_algebra_with_zero_action_is_an_o_operator() {
    let a = zero_algebra(1, 1);
    let r = Representation::zero(a.clone(), SuperSpace::new(2, 1));
    for seed in 0..10 {
        let t = random_even_map(r.space(), a.space(), seed, 3);
        assert!(check_o_operator_malcev(&t, &r).unwrap().holds());
    }
}

#[test]
fn identity_on_left_multiplication_returns_the_pre_malcev_algebra() {
    for p in [pre_malcev_1_1(), pre_malcev_1_1_b(), pre_malcev_1_1_family(2, -1, 3, 1)] {
        let l = Representation::left_multiplication(&p).unwrap();
        let id = GradedLinearMap::identity(p.space());
        assert!(check_o_operator_malcev(&id, &l).unwrap().holds());
        assert!(oracle_oop_ok(&id, &l));
        assert_eq!(pre_malcev_from_o_operator(&id, &l).unwrap().product().unwrap(), p.product().unwrap());
        let c = compatible_pre_malcev_from_invertible_oop(&id, &l).unwrap();
        assert_eq!(c.product().unwrap(), p.product().unwrap());
    }
}

#[test]
fn identity_on_adjoint_of_sl2_fails() {
    let a = sl2();
    let ad = Representation::adjoint(&a).unwrap();
    let id = GradedLinearMap::identity(a.space());
    let rep = check_o_operator_malcev(&id, &ad).unwrap();
    assert!(!rep.holds());
    assert!(!rep.witnesses.is_empty());
    assert!(!oracle_oop_ok(&id, &ad));
    assert!(matches!(pre_malcev_from_o_operator(&id, &ad), Err(Error::Precondition(_))));
    assert!(!check_rota_baxter(&id, &a, RbVariant::Unsigned).unwrap().holds());
}

#[test]
fn identity_is_rota_baxter_only_on_abelian_algebras() {
    let z = zero_algebra(2, 1);
    assert!(check_rota_baxter(&GradedLinearMap::identity(z.space()), &z, RbVariant::Unsigned).unwrap().holds());
    for a in [two_dim(), malcev_1_1(), gl11()] {
        assert!(!check_rota_baxter(&GradedLinearMap::identity(a.space()), &a, RbVariant::Unsigned).unwrap().holds());
    }
}

#[test]
fn standard_operator_on_sl2_gives_pre_malcev() {
    let r = sl2_standard();
    let t = sl2_standard_oop();
    assert!(check_o_operator_malcev(&t, &r).unwrap().holds());
    assert!(oracle_oop_ok(&t, &r));
    let p = pre_malcev_from_o_operator(&t, &r).unwrap();
    let rep = check_pre_malcev(&p).unwrap();
    assert!(rep.holds());
    assert_eq!(rep.checked, 16);
    assert!(pre_malcev_ok(&Oracle::mul_of(&p)));
}

#[test]
fn odd_operators_are_rejected() {
    let r = malcev_1_1_module();
    let t = GradedLinearMap::new(
        r.space().clone(),
        r.algebra().space().clone(),
        vec![vec![q(0), q(1)], vec![q(1), q(0)]],
        malcev_super::graded::Parity::Odd,
    )
    .unwrap();
    assert!(matches!(check_o_operator_malcev(&t, &r), Err(Error::ParityViolation(_))));
}

#[test]
fn grid_operators_agree_with_oracle_and_give_pre_malcev() {
    let reps = [
        sl2_standard(),
        malcev_1_1_module(),
        Representation::adjoint(&gl11()).unwrap(),
        Representation::coadjoint(&malcev_1_1()).unwrap(),
        Representation::coadjoint(&two_dim()).unwrap(),
    ];
    let mut total = 0;
    for r in &reps {
        for t in grid_o_operators(r, 1).unwrap() {
            assert!(oracle_oop_ok(&t, r));
            let p = pre_malcev_from_o_operator(&t, r).unwrap();
            assert!(check_pre_malcev(&p).unwrap().holds());
            total += 1;
        }
    }
    assert!(total > 150, "{total}");
}

#[test]
fn image_structure_is_well_defined_and_t_is_a_homomorphism() {
    let reps = [sl2_standard(), malcev_1_1_module(), Representation::adjoint(&gl11()).unwrap()];
    let mut rank_deficient = 0;
    for r in &reps {
        for t in grid_o_operators(r, 1).unwrap() {
            let img = induced_structure_on_image(&t, r).unwrap();
            assert_eq!(img.pivots.len(), t.rank());
            if t.rank() < r.space().dim() {
                rank_deficient += 1;
            }
            assert!(check_pre_malcev(&img.algebra).unwrap().holds());
            let p = pre_malcev_from_o_operator(&t, r).unwrap();
            let prod = img.algebra.product().unwrap();
            let k = img.pivots.len();
            // T(b_i · b_j) expressed in the image basis equals T(b_i) · T(b_j)
            for a in 0..k {
                for b in 0..k {
                    let img_ab = t.apply_coords(p.product().unwrap().cell(img.pivots[a], img.pivots[b]));
                    let mut via_basis = vec![q(0); t.codomain().dim()];
                    for (c, coeff) in prod.cell(a, b).iter().enumerate() {
                        for (row, v) in via_basis.iter_mut().enumerate() {
                            *v += coeff * &img.basis[c][row];
                        }
                    }
                    assert_eq!(img_ab, via_basis);
                }
            }
        }
    }
    assert!(rank_deficient > 0);
}

#[test]
fn invertible_operators_give_compatible_structures() {
    let a = two_dim();
    let co = Representation::coadjoint(&a).unwrap();
    let inv: Vec<_> = grid_o_operators(&co, 1).unwrap().into_iter().filter(|t| t.is_invertible()).collect();
    assert_eq!(inv.len(), 6);
    for t in &inv {
        let p = compatible_pre_malcev_from_invertible_oop(t, &co).unwrap();
        assert!(check_pre_malcev(&p).unwrap().holds());
        assert!(is_compatible(&p, &a).unwrap());
    }
    let singular = GradedLinearMap::zero(co.space(), a.space());
    assert!(compatible_pre_malcev_from_invertible_oop(&singular, &co).is_err());
}

#[test]
fn rota_baxter_is_o_operator_for_adjoint() {
    for a in [sl2(), malcev_1_1(), gl11(), two_dim()] {
        let ad = Representation::adjoint(&a).unwrap();
        for r in grid_rota_baxter(&a, 1).unwrap() {
            assert!(check_o_operator_malcev(&r, &ad).unwrap().holds());
            let p1 = pre_malcev_from_rota_baxter(&r, &a).unwrap();
            let p2 = pre_malcev_from_o_operator(&r, &ad).unwrap();
            assert_eq!(p1.product().unwrap(), p2.product().unwrap());
        }
    }
}

#[test]
fn rb_variants_agree_on_even_algebras_and_split_on_gl11() {
    for a in [sl2(), two_dim()] {
        for seed in 0..20 {
            let r = random_even_map(a.space(), a.space(), seed, 1);
            assert_eq!(
                check_rota_baxter(&r, &a, RbVariant::Unsigned).unwrap().holds(),
                check_rota_baxter(&r, &a, RbVariant::Signed).unwrap().holds()
            );
        }
    }
    let g = gl11();
    let rbs = grid_rota_baxter(&g, 1).unwrap();
    let only_unsigned = rbs.iter().filter(|r| !check_rota_baxter(r, &g, RbVariant::Signed).unwrap().holds()).count();
    assert_eq!((rbs.len(), only_unsigned), (101, 8));
}

#[test]
fn trace_form_on_sl2_is_invariant() {
    let w = form(SuperSpace::new(3, 0), &[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
    let f = classify_form(&w, &sl2()).unwrap();
    assert_eq!(
        f,
        FormFlags {
            supersymmetric: true,
            skew_supersymmetric: false,
            nondegenerate: true,
            invariant: true
        }
    );
    let bad = form(SuperSpace::new(3, 0), &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
    assert!(!bad.is_invariant(&sl2()).unwrap());
}

#[test]
fn supertrace_form_on_gl11_is_invariant() {
    // str(xy) on E11, E22 | E12, E21
    let w = form(SuperSpace::new(2, 2), &[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    let f = classify_form(&w, &gl11()).unwrap();
    assert!(f.supersymmetric && !f.skew_supersymmetric && f.nondegenerate && f.invariant);
}

#[test]
fn forms_reject_mixed_parity_values() {
    let m = vec![vec![q(0), q(1)], vec![q(0), q(0)]];
    assert!(matches!(BilinearForm::new(SuperSpace::new(1, 1), m), Err(Error::ParityViolation(_))));
}

#[test]
fn symplectic_on_abelian_algebras_gives_zero_product() {
    for (a, w) in [
        (zero_algebra(2, 0), form(SuperSpace::new(2, 0), &[&[0, 1], &[-1, 0]])),
        (zero_algebra(0, 2), form(SuperSpace::new(0, 2), &[&[0, 1], &[1, 0]])),
        (zero_algebra(2, 1), form(SuperSpace::new(2, 1), &[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 1]])),
    ] {
        assert!(check_symplectic(&w, &a).unwrap().holds());
        assert!(pre_malcev_from_symplectic(&w, &a).unwrap().product().unwrap().is_zero());
    }
}

#[test]
fn symplectic_on_two_dim_algebra_is_compatible_and_scale_free() {
    let a = two_dim();
    let w = form(SuperSpace::new(2, 0), &[&[0, 1], &[-1, 0]]);
    let p = pre_malcev_from_symplectic(&w, &a).unwrap();
    assert!(check_pre_malcev(&p).unwrap().holds());
    assert!(is_compatible(&p, &a).unwrap());
    for c in [q(2), q(-3), malcev_super::scalar::Scalar::ratio(1, 5).unwrap()] {
        let p2 = pre_malcev_from_symplectic(&w.scale(&c), &a).unwrap();
        assert_eq!(p.product().unwrap(), p2.product().unwrap());
    }
}

#[test]
fn symplectic_flags_report_clauses() {
    let a = zero_algebra(2, 0);
    let sym = form(SuperSpace::new(2, 0), &[&[0, 1], &[1, 0]]);
    let r = check_symplectic(&sym, &a).unwrap();
    assert!(r.witnesses.iter().any(|w| w.clause.as_deref() == Some("skew-supersymmetric")));
    let degenerate = BilinearForm::zero(a.space());
    let r = check_symplectic(&degenerate, &a).unwrap();
    assert!(r.witnesses.iter().any(|w| w.clause.as_deref() == Some("nondegenerate")));
    assert!(pre_malcev_from_symplectic(&degenerate, &a).is_err());
}

#[test]
fn octonion_rb_gives_pre_alternative_through_both_routes() {
    let o = split_octonions();
    let r = split_octonion_rb();
    let b = regular_bimodule(&o);
    assert!(check_o_operator_alternative(&r, &b).unwrap().holds());
    let pa = pre_alternative_from_o_operator(&r, &b).unwrap();
    assert_eq!(pa, pre_alternative_from_rota_baxter(&o, &r));
    assert!(check_pre_alternative(&pa).unwrap().holds());
    assert!(pre_alternative_ok(&Oracle::new(&pa, PREC), &Oracle::new(&pa, SUCC)));
    let via_pa = pre_malcev_from_pre_alternative(&pa).unwrap();
    let rep = rep_from_bimodule(&b).unwrap();
    let via_oop = pre_malcev_from_o_operator(&r, &rep).unwrap();
    assert_eq!(via_pa.product().unwrap(), via_oop.product().unwrap());
    assert!(check_pre_malcev(&via_oop).unwrap().holds());
}

#[test]
fn envelope_rb_stays_pre_alternative() {
    let env = grassmann_envelope(&split_octonions());
    let r = envelope_operator(&split_octonion_rb(), &env);
    let b = regular_bimodule(&env);
    assert!(check_o_operator_alternative(&r, &b).unwrap().holds());
    let pa = pre_alternative_from_o_operator(&r, &b).unwrap();
    assert!(check_pre_alternative(&pa).unwrap().holds());
}

#[test]
fn non_operator_is_refused_for_pre_alternative() {
    let o = split_octonions();
    let id = GradedLinearMap::identity(o.space());
    assert!(matches!(pre_alternative_from_o_operator(&id, &regular_bimodule(&o)), Err(Error::Precondition(_))));
}

fn small_reps() -> Vec<Representation> {
    vec![
        sl2_standard(),
        malcev_1_1_module(),
        Representation::adjoint(&gl11()).unwrap(),
        Representation::coadjoint(&two_dim()).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn o_operator_verdict_matches_oracle(k in 0usize..4, seed in 0u64..10_000, range in 1i64..3) {
        let r = &small_reps()[k];
        let t = random_even_map(r.space(), r.algebra().space(), seed, range);
        let lib = check_o_operator_malcev(&t, r).unwrap().holds();
        prop_assert_eq!(lib, oracle_oop_ok(&t, r));
        prop_assert_eq!(lib, pre_malcev_from_o_operator(&t, r).is_ok());
    }

    #[test]
    fn grid_operators_pass_under_scaling(k in 0usize..4, pick in 0usize..1000, c in -4i64..5) {
        let r = &small_reps()[k];
        let ops = grid_o_operators(r, 1).unwrap();
        let t = &ops[pick % ops.len()];
        // T ↦ cT scales both sides by c²
        prop_assert!(check_o_operator_malcev(&t.scale(&q(c)), r).unwrap().holds());
    }

    #[test]
    fn rb_equals_adjoint_o_operator(seed in 0u64..10_000) {
        let a = gl11();
        let ad = Representation::adjoint(&a).unwrap();
        let r = random_even_map(a.space(), a.space(), seed, 1);
        prop_assert_eq!(
            check_rota_baxter(&r, &a, RbVariant::Unsigned).unwrap().holds(),
            check_o_operator_malcev(&r, &ad).unwrap().holds()
        );
    }
}
