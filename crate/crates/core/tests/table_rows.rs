//! Classical table rows: formula value against fixed points of a constructed element.

use fpr_core::exact_math::Rational;
use fpr_core::fpr_formulas::{evaluate, Params};
use fpr_core::gf_linear::{build_element, Automorphism, ElementSpec, Field, FormKind, Geometry, PointKind, PointSet, Sign, DEFAULT_POINT_BUDGET};
use fpr_core::model::record;

fn geo(kind: FormKind, n: usize, field_order: u64, eps: Option<Sign>) -> Geometry {
    Geometry::standard(kind, n, Field::of_order(field_order).unwrap(), eps).unwrap()
}

fn element_fpr(g: &Geometry, kind: PointKind, spec: &ElementSpec) -> Rational {
    let pts = PointSet::enumerate(g.clone(), kind, DEFAULT_POINT_BUDGET).unwrap();
    let x = build_element(spec, g).unwrap();
    let fixed = pts.fixed_point_count(&x).unwrap();
    Rational::ratio(fixed as i64, pts.len() as i64)
}

fn row(id: &str, p: Params) -> (Rational, ElementSpec) {
    let rec = record(id).unwrap();
    let v = evaluate(id, &p).unwrap().value;
    let spec = (rec.spec)(&p).unwrap();
    (v, spec)
}

fn check(id: &str, p: Params, g: Geometry, kind: PointKind) -> Rational {
    let (v, spec) = row(id, p);
    assert_eq!(element_fpr(&g, kind, &spec), v, "{id}");
    v
}

fn r(a: i64, b: i64) -> Rational {
    Rational::ratio(a, b)
}

#[test]
fn linear_rows() {
    let lin = |n, q| geo(FormKind::Linear, n, q, None);
    assert_eq!(check("tab:class/L/P1/J2", Params::nq(3, 2), lin(3, 2), PointKind::Subspaces(1)), r(3, 7));
    assert_eq!(check("tab:class/L/P1/J2", Params::nq(4, 2), lin(4, 2), PointKind::Subspaces(1)), r(7, 15));
    assert_eq!(check("tab:class/L/P1/J2", Params::nq(3, 3), lin(3, 3), PointKind::Subspaces(1)), r(4, 13));
    assert_eq!(check("tab:class/L/P1/omega", Params::nq(3, 3), lin(3, 3), PointKind::Subspaces(1)), r(5, 13));
    assert_eq!(check("tab:class/L/P1/omega", Params::nq(2, 8), lin(2, 8), PointKind::Subspaces(1)), r(2, 9));
    check("tab:class/L/P1/omega", Params::nq(3, 4), lin(3, 4), PointKind::Subspaces(1));
    check("tab:class/L/P1/J2", Params::nq(3, 5), lin(3, 5), PointKind::Subspaces(1));
    assert_eq!(check("tab:class/L/P1/phi", Params::nq(2, 8), lin(2, 8), PointKind::Subspaces(1)), r(1, 3));
    assert_eq!(check("tab:subb2/L2/P1/torus", Params::nq(2, 8), lin(2, 8), PointKind::Subspaces(1)), r(2, 9));
}

#[test]
fn unitary_rows() {
    let uni = |n, q: u64| geo(FormKind::Unitary, n, q * q, None);
    assert_eq!(check("tab:class/U/P2/tau", Params::nq(4, 2), uni(4, 2), PointKind::TotallySingular(2)), r(5, 9));
    assert_eq!(check("tab:class/U/P2/tau", Params::nq(4, 3), uni(4, 3), PointKind::TotallySingular(2)), r(5, 14));
    assert_eq!(check("tab:class/U/P2/omegaI2", Params::nq(4, 2), uni(4, 2), PointKind::TotallySingular(2)), r(1, 3));
    assert_eq!(check("tab:class/U/N1/omega", Params::nq(4, 2), uni(4, 2), PointKind::Nondegenerate { m: 1, eta: None }), r(13, 40));
    check("tab:class/U/N1/omega", Params::nq(6, 2), uni(6, 2), PointKind::Nondegenerate { m: 1, eta: None });
    check("tab:class/U/P1/omega", Params::nq(5, 2), uni(5, 2), PointKind::TotallySingular(1));
    assert_eq!(check("tab:subb2/U4/P2/tau", Params::nq(4, 2), uni(4, 2), PointKind::TotallySingular(2)), r(5, 9));
}

#[test]
fn symplectic_rows() {
    let sp = |n, q| geo(FormKind::Symplectic, n, q, None);
    assert_eq!(check("tab:class/Sp/P1/J2", Params::nq(6, 2), sp(6, 2), PointKind::TotallySingular(1)), r(31, 63));
    assert_eq!(check("tab:class/Sp/P1/J2", Params::nq(4, 3), sp(4, 3), PointKind::TotallySingular(1)), r(13, 40));
    for eps in [Sign::Minus, Sign::Plus] {
        for n in [6, 8] {
            check("tab:class/Sp/Oeps/b1", Params::nqe(n, 2, eps), sp(n as usize, 2), PointKind::QuadraticForms(eps));
        }
    }
    assert_eq!(check("tab:class/Sp/Oeps/b1", Params::nqe(6, 2, Sign::Minus), sp(6, 2), PointKind::QuadraticForms(Sign::Minus)), r(4, 7));
    assert_eq!(check("tab:class/Sp/Oeps/b1", Params::nqe(6, 2, Sign::Plus), sp(6, 2), PointKind::QuadraticForms(Sign::Plus)), r(4, 9));
    assert_eq!(check("tab:class/Sp/Ominus/Lambda", Params::nq(6, 2), sp(6, 2), PointKind::QuadraticForms(Sign::Minus)), r(5, 14));
    check("tab:class/Sp/Ominus/Lambda", Params::nq(8, 2), sp(8, 2), PointKind::QuadraticForms(Sign::Minus));
    assert_eq!(check("tab:subb2/Sp/Ominus/b1", Params::nq(6, 2), sp(6, 2), PointKind::QuadraticForms(Sign::Minus)), r(4, 7));
    check("tab:subb2/Sp/Ominus/b1", Params::nq(8, 2), sp(8, 2), PointKind::QuadraticForms(Sign::Minus));
    assert_eq!(check("tab:subb2/Sp/Ominus/Lambda", Params::nq(6, 2), sp(6, 2), PointKind::QuadraticForms(Sign::Minus)), r(5, 14));
}

#[test]
fn odd_orthogonal_rows() {
    let o7 = geo(FormKind::Quadratic, 7, 3, None);
    assert_eq!(check("tab:class/O/P1/rplus", Params::nq(7, 3), o7.clone(), PointKind::TotallySingular(1)), r(5, 14));
    check("tab:class/O/N1minus/rminus", Params::nq(7, 3), o7, PointKind::Nondegenerate { m: 1, eta: Some(Sign::Minus) });
}

#[test]
fn even_orthogonal_rows_q2() {
    for eps in [Sign::Minus, Sign::Plus] {
        let g = geo(FormKind::Quadratic, 8, 2, Some(eps));
        check("tab:class/Oeps/P1/b1", Params::nqe(8, 2, eps), g.clone(), PointKind::TotallySingular(1));
        check("tab:class/Oeps/N1/b1", Params::nqe(8, 2, eps), g, PointKind::Nonsingular1);
    }
    let minus = geo(FormKind::Quadratic, 8, 2, Some(Sign::Minus));
    assert_eq!(check("tab:class/Oeps/P1/Lambda", Params::nqe(8, 2, Sign::Minus), minus.clone(), PointKind::TotallySingular(1)), r(5, 17));
    assert_eq!(check("tab:subb2/Ominus/P1/b1", Params::nqe(8, 2, Sign::Minus), minus, PointKind::TotallySingular(1)), r(9, 17));
    let plus = geo(FormKind::Quadratic, 8, 2, Some(Sign::Plus));
    check("tab:class/Oeps/N1/Lambda", Params::nqe(8, 2, Sign::Plus), plus.clone(), PointKind::Nonsingular1);
    check("tab:subb2/Oplus/N1/b1", Params::nqe(8, 2, Sign::Plus), plus, PointKind::Nonsingular1);
}

#[test]
fn even_orthogonal_rows_q3() {
    let minus = geo(FormKind::Quadratic, 8, 3, Some(Sign::Minus));
    check("tab:class/Oeps/P1/r", Params::nqe(8, 3, Sign::Minus), minus.clone(), PointKind::TotallySingular(1));
    check("tab:class/Oeps/N1/r_sq", Params::nqe(8, 3, Sign::Minus), minus, PointKind::SquareDiscriminant1);
    let plus = geo(FormKind::Quadratic, 8, 3, Some(Sign::Plus));
    check("tab:class/Oeps/N1/r_nsq", Params::nqe(8, 3, Sign::Plus), plus, PointKind::SquareDiscriminant1);
}

#[test]
fn dual_b1_rows_agree() {
    for n in [8i64, 10, 12, 14] {
        let a = evaluate("tab:class/Oeps/P1/b1", &Params::nqe(n, 2, Sign::Minus)).unwrap().value;
        let b = evaluate("tab:subb2/Ominus/P1/b1", &Params::nqe(n, 2, Sign::Minus)).unwrap().value;
        assert_eq!(a, b);
        let c = evaluate("tab:class/Oeps/N1/b1", &Params::nqe(n, 2, Sign::Plus)).unwrap().value;
        let d = evaluate("tab:subb2/Oplus/N1/b1", &Params::nqe(n, 2, Sign::Plus)).unwrap().value;
        assert_eq!(c, d);
    }
    for n in [6i64, 8, 10, 12] {
        let a = evaluate("tab:class/Sp/Oeps/b1", &Params::nqe(n, 2, Sign::Minus)).unwrap().value;
        let b = evaluate("tab:subb2/Sp/Ominus/b1", &Params::nq(n, 2)).unwrap().value;
        assert_eq!(a, b);
    }
}

#[test]
fn field_automorphism_element() {
    let spec = ElementSpec::automorphism(Automorphism::Field, 3);
    let g = geo(FormKind::Linear, 2, 8, None);
    assert_eq!(element_fpr(&g, PointKind::Subspaces(1), &spec), r(1, 3));
}
