//! Worked examples across the public API, each checked against a value computed
//! by hand.

use trigva_core::fock::relations::unitary_weight;
use trigva_core::fock::{a_coeff, FockSpace, Trunc};
use trigva_core::liealg::covariant::CovSetup;
use trigva_core::liealg::dq::{dq_translate, DqElem};
use trigva_core::liealg::gl::{e, e_to_g, g, g_to_e, sigma, tau};
use trigva_core::liealg::{
    affine_bracket, cov_bracket, gl_bracket, gl_form, trig_bracket, AffElem, CovElem, TrigElem,
    TrigKind,
};
use trigva_core::lin::Lin;
use trigva_core::qring::Scalar;
use trigva_core::vacuum::{graded_dim_v, IntervalAlg, PbwVector, VacuumModule};

fn q(e: i32) -> Scalar {
    Scalar::q_pow(e)
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn gen(kind: TrigKind, a: i32, m: i32) -> TrigElem {
    TrigElem::generator(kind, a, m)
}

#[test]
fn gl_infinity() {
    assert_eq!(gl_bracket(&e(1, 2), &e(2, 1)), e(1, 1).sub(&e(2, 2)));
    assert!(gl_bracket(&e(1, 2), &e(3, 4)).is_zero());
    assert_eq!(gl_bracket(&e(1, -1), &e(-1, 1)), e(1, 1).sub(&e(-1, -1)));
    assert_eq!(gl_form(&e(1, 2), &e(2, 1)), int(1));
    assert!(gl_form(&e(1, 2), &e(1, 2)).is_zero());
    assert_eq!(gl_form(&g(1, 3), &g(-1, 3)), int(1));
    assert_eq!(g_to_e(1, 0), (1, -1));
    assert_eq!(e_to_g(2, 4), Some((-1, 3)));
    assert_eq!(e_to_g(0, 1), None);
    assert_eq!(sigma(2, &e(0, 0)), e(2, 2));
    assert_eq!(tau(&e(1, 2)), e(2, 1).neg());
    assert_eq!(tau(&g(1, 0)), g(-1, 0).neg());
}

#[test]
fn trigonometric_brackets() {
    use TrigKind::*;
    let qm = &q(-1) - &q(1);
    assert_eq!(
        trig_bracket(&gen(A, 1, 0), &gen(A, 0, 1)).unwrap(),
        gen(A, 1, 1).scale(&qm)
    );
    assert_eq!(
        trig_bracket(&gen(A, 1, 1), &gen(A, -1, -1)).unwrap(),
        TrigElem::central_elem(A, int(1))
    );
    assert_eq!(
        trig_bracket(&gen(B, 1, 0), &gen(B, 1, 1)).unwrap(),
        gen(B, 2, 1).scale(&qm).add(&gen(B, 0, 1).scale(&qm))
    );
    let d = trig_bracket(&gen(D, 1, 1), &gen(D, -1, -1)).unwrap();
    let expect = gen(D, 2, 0)
        .scale(&(&q(-2) * &(&q(-2) - &q(2))))
        .add(&TrigElem::central_elem(D, int(2)));
    assert_eq!(d, expect);
    for kind in TrigKind::ALL {
        let x = gen(kind, 2, -1).add(&gen(kind, 1, 3).scale(&int(3)));
        assert!(trig_bracket(&x, &x).unwrap().is_zero());
    }
    assert_eq!(gen(B, -1, 2), gen(B, 1, 2).neg());
    assert!(gen(B, 0, 2).is_zero());
    assert!(gen(D, 0, 5).is_zero());
}

#[test]
fn affine_algebra() {
    let x = AffElem::loop_elem(&g(1, 0), 1);
    let y = AffElem::loop_elem(&g(-1, 0), -1);
    let mut expect = AffElem::loop_elem(&g(0, 1).sub(&g(0, -1)), 0);
    expect.central = int(1);
    assert_eq!(affine_bracket(&x, &y), expect);
    let z = AffElem::loop_elem(&g(0, 1), 2);
    let w = AffElem::loop_elem(&g(0, 1), -2);
    let mut two_k = AffElem::zero();
    two_k.central = int(2);
    assert_eq!(affine_bracket(&z, &w), two_k);
    let mut k = AffElem::zero();
    k.central = int(1);
    assert!(affine_bracket(&k, &x).is_zero());
}

#[test]
fn covariant_algebra() {
    let s = CovSetup::type_a();
    let x = CovElem::rep(s, 1, 1);
    let y = CovElem::rep(s, -1, -1);
    assert_eq!(
        cov_bracket(&x, &y).unwrap(),
        CovElem::central_elem(s, int(1))
    );
    let a = CovElem::rep(s, 1, 0);
    let b = CovElem::rep(s, 0, 1);
    assert_eq!(cov_bracket(&a, &b).unwrap(), x.scale(&(&q(-1) - &q(1))));
    // G_{1,2} ⊗ t^3 reduces to q^{-6} G_{1,0} ⊗ t^3
    let mut red = CovElem::zero(s);
    red.add_loop(&g(1, 2), 3, &int(1)).unwrap();
    assert_eq!(red, CovElem::rep(s, 1, 3).scale(&q(-6)));
    let sb = CovSetup::type_b();
    assert_eq!(CovElem::rep(sb, -1, 2), CovElem::rep(sb, 1, 2).neg());
    assert!(CovElem::rep(sb, 0, 2).is_zero());
}

#[test]
fn quantum_torus_translation() {
    assert_eq!(
        dq_translate(&DqElem::generator(0, 1)),
        gen(TrigKind::A, 1, 0).neg()
    );
    let c = DqElem {
        terms: Lin::zero(),
        central: int(1),
    };
    assert_eq!(
        dq_translate(&c),
        TrigElem::central_elem(TrigKind::A, int(1))
    );
}

#[test]
fn vacuum_module() {
    let alg = IntervalAlg::new(-1, 1).unwrap();
    let level = Scalar::param(0);
    let v = VacuumModule::new(alg, level.clone());
    let alg = v.alg();
    let g10 = alg.index_of(1, -1).unwrap();
    let gm10 = alg.index_of(-1, 1).unwrap();
    let g01 = alg.index_of(1, 1).unwrap();
    let one = VacuumModule::vacuum();
    let b = v.mode(gm10, -1, &one);
    assert_eq!(v.mode(g10, 1, &b), one.scale(&level));
    assert!(v.mode(g01, 0, &one).is_zero());
    assert_eq!(v.mode(g10, -1, &one), PbwVector::basis(vec![(1, g10)]));
    assert_eq!(v.va_product_modes(g10, gm10, 1).unwrap(), one.scale(&level));
    assert!(v.va_product_modes(g10, gm10, 3).unwrap().is_zero());
    assert!(v.d_operator(&one).is_zero());
    assert_eq!(v.d_operator(&b), v.mode(gm10, -2, &one));
    assert_eq!(v.apply_r(1, &one).unwrap(), one);
    assert_eq!(graded_dim_v(&IntervalAlg::new(0, 1).unwrap(), 2), 5);
    assert_eq!(graded_dim_v(&IntervalAlg::new(0, 3).unwrap(), 1), 8);
}

#[test]
fn fock_modes() {
    let space = FockSpace::new(Trunc::new(6, 6, 4).unwrap(), 0).unwrap();
    let x1 = FockSpace::var(1);
    assert_eq!(space.mode(0, 1, &x1).unwrap(), FockSpace::vacuum());
    let two_x2 = FockSpace::var(2).scale(&int(2));
    assert_eq!(space.mode(0, -2, &FockSpace::vacuum()).unwrap(), two_x2);
    for alpha in [1, -2, 3] {
        let w = space.mode(alpha, 0, &FockSpace::vacuum()).unwrap();
        let expect = &(&Scalar::param_pow(0, alpha) * &q(alpha))
            * &Scalar::sin_bracket(alpha).invert().unwrap();
        assert_eq!(a_coeff(alpha, 0), expect);
        assert_eq!(w, FockSpace::vacuum().scale(&expect));
    }
    let u = Scalar::param(0);
    assert_eq!(
        unitary_weight(1, &[(1, 0)]).unwrap(),
        &(&u * &q(1)) * &Scalar::sin_bracket(1).invert().unwrap()
    );
    assert_eq!(
        unitary_weight(2, &[(2, 0)]).unwrap(),
        &(&int(2) * &(&Scalar::param_pow(0, 2) * &q(2)))
            * &Scalar::sin_bracket(2).invert().unwrap()
    );
}
