//! The fixed list of verification cases.

use std::sync::Arc;

use super::build::{AffineH, ElementRef, GroupBuild, GroupDef, OmegaBuild};
use super::{Check, Expected, Provenance, Suite, VerificationCase};
use crate::classifier::BoundKind;
use crate::exact_math::{is_prime, Rational};
use crate::fpr_formulas::Params;
use crate::gf_linear::{Automorphism, ElementSpec, FormKind, PointKind, Sign};
use crate::model::{ActionSpec, Family, GroupSpec};

pub const M22_2_JSON: &str = include_str!("../../data/m22_2.json");

/// Orders up to which the fpr identity is checked against a full coset enumeration.
const IDENTITY_ORDER_LIMIT: u64 = 100_000;

fn r(a: i64, b: i64) -> Rational {
    Rational::ratio(a, b)
}

fn def(key: &str, build: GroupBuild, order: Option<u64>, closable: bool) -> Arc<GroupDef> {
    Arc::new(GroupDef { key: key.into(), build, order, closable })
}

fn sym_alt(n: usize, alt: bool) -> Arc<GroupDef> {
    let order: u64 = (1..=n as u64).product::<u64>() / if alt { 2 } else { 1 };
    let key = format!("{}{n}", if alt { "A" } else { "S" });
    def(&key, GroupBuild::SymAlt { n, alt }, Some(order), n <= 9)
}

fn classical(key: &str, kind: FormKind, n: usize, q: u64, eps: Option<Sign>, extras: Vec<ElementSpec>, base: PointKind, order: u64) -> Arc<GroupDef> {
    def(key, GroupBuild::Classical { kind, n, q, eps, extras, base }, Some(order), true)
}

fn geometry(key: &str, kind: FormKind, n: usize, q: u64, eps: Option<Sign>) -> Arc<GroupDef> {
    def(key, GroupBuild::Classical { kind, n, q, eps, extras: Vec::new(), base: PointKind::Subspaces(1) }, None, false)
}

fn affine(key: &str, p: u64, d: usize, h: AffineH, order: u64) -> Arc<GroupDef> {
    def(key, GroupBuild::Affine { p, d, h }, Some(order), true)
}

fn params(f: impl FnOnce(&mut Params)) -> Params {
    let mut p = Params::default();
    f(&mut p);
    p
}

fn formula(id: &'static str, p: Params) -> Expected {
    Expected::Formula { id, params: p }
}

struct Builder {
    cases: Vec<VerificationCase>,
}

/// Shared fields of a block of cases on one group and action.
#[derive(Clone)]
struct On {
    group: Arc<GroupDef>,
    omega: OmegaBuild,
    spec: Option<(GroupSpec, ActionSpec)>,
    suites: Vec<Suite>,
}

impl On {
    fn new(group: &Arc<GroupDef>, omega: OmegaBuild, suites: &[Suite]) -> Self {
        On { group: group.clone(), omega, spec: None, suites: suites.to_vec() }
    }

    fn spec(mut self, g: GroupSpec, a: ActionSpec) -> Self {
        self.spec = Some((g, a));
        self
    }
}

impl Builder {
    fn push(&mut self, on: &On, id: impl Into<String>, check: Check, provenance: Provenance, anchor: &str) {
        self.push_with(on, id, check, provenance, anchor, &[]);
    }

    fn push_with(&mut self, on: &On, id: impl Into<String>, check: Check, provenance: Provenance, anchor: &str, extra: &[Suite]) {
        let mut suites = on.suites.clone();
        suites.extend_from_slice(extra);
        self.cases.push(VerificationCase {
            id: id.into(),
            suites,
            group: on.group.clone(),
            omega: on.omega.clone(),
            spec: on.spec.clone(),
            check,
            provenance,
            anchor: anchor.into(),
            optional: false,
        });
    }

    fn element(&mut self, on: &On, id: &str, element: ElementRef, expected: Expected, provenance: Provenance, anchor: &str) {
        self.push(on, id, Check::ElementFpr { element, expected }, provenance, anchor);
    }

    /// Exception scan under the main bound plus the invariant checks every closable action gets.
    fn scans(&mut self, on: &On, prefix: &str) {
        if on.spec.is_some() {
            self.push_with(on, format!("{prefix}/exceptions"), Check::Exceptions { bound: BoundKind::Main }, Provenance::Paper, "exception scan under 1/(r+1)", &[Suite::Exceptions]);
        }
        let burn = On { suites: vec![Suite::Burnside], ..on.clone() };
        self.push(&burn, format!("{prefix}/burnside"), Check::Burnside, Provenance::Trivial, "orbit counting");
        if on.group.order.is_some_and(|o| o <= IDENTITY_ORDER_LIMIT) {
            self.push(&burn, format!("{prefix}/fpr-identity"), Check::FprIdentity, Provenance::Trivial, "fixed points against class intersections");
        }
    }
}

fn row_spec(id: &str, p: &Params) -> ElementSpec {
    let rec = crate::model::record(id).expect("known row");
    (rec.spec)(p).expect("row has an element")
}

fn cycle(len: u64) -> String {
    let pts: Vec<String> = (0..len).map(|i| i.to_string()).collect();
    format!("({})", pts.join(" "))
}

fn primes_up_to(n: u64) -> impl Iterator<Item = u64> {
    (2..=n).filter(|&p| is_prime(p))
}

fn subset_cases(b: &mut Builder) {
    for n in 5..=9usize {
        for alt in [false, true] {
            let g = sym_alt(n, alt);
            let gs = if alt { GroupSpec::alt(n as u32) } else { GroupSpec::sym(n as u32) };
            let name = &g.key;
            for l in (1..n).filter(|l| 2 * l < n) {
                let on = On::new(&g, OmegaBuild::Subsets(l), &[Suite::Subset]).spec(gs.clone(), ActionSpec::Subsets { l: l as u32 });
                let prefix = format!("subset/{name}/l{l}");
                if !alt {
                    for rr in primes_up_to(n as u64) {
                        let p = params(|p| {
                            p.n = Some(n as i64);
                            p.l = Some(l as i64);
                            p.r = Some(rr as i64);
                        });
                        b.element(&on, &format!("{prefix}/rcycle{rr}"), ElementRef::Cycles(cycle(rr)), formula("subset-rcycle", p), Provenance::Paper, "r-cycle on l-subsets");
                    }
                }
                for rr in primes_up_to(n as u64) {
                    let p = params(|p| {
                        p.n = Some(n as i64);
                        p.l = Some(l as i64);
                        p.r = Some(rr as i64);
                        p.alt = Some(alt);
                    });
                    b.push(&on, format!("{prefix}/max{rr}"), Check::MaxFpr { r: rr, expected: formula("subset-max", p) }, Provenance::Paper, "largest fpr of order r on l-subsets");
                }
                let mi = On { suites: vec![Suite::Minindex], ..on.clone() };
                b.push(&mi, format!("{prefix}/minindex"), Check::MinIndex { expected: Expected::IndexFormula, witnesses: None }, Provenance::Paper, "minimal index on l-subsets");
                let md = On { suites: vec![Suite::Mindeg], ..on.clone() };
                b.push(&md, format!("{prefix}/mindeg"), Check::MinDegree { expected: Expected::DegreeFormula }, Provenance::Paper, "minimal degree on l-subsets");
                for (bound, tag) in [(BoundKind::OneOverR, "one-over-r"), (BoundKind::Sqrt, "sqrt")] {
                    let ex = On { suites: vec![Suite::Exceptions], ..on.clone() };
                    b.push(&ex, format!("{prefix}/exceptions-{tag}"), Check::Exceptions { bound }, Provenance::Paper, "exception scan under a weaker bound");
                }
                b.scans(&on, &prefix);
            }
        }
    }
}

fn partition_cases(b: &mut Builder) {
    for n in [6usize, 8, 10] {
        let g = sym_alt(n, false);
        let on = On::new(&g, OmegaBuild::Partitions, &[Suite::Subset]).spec(GroupSpec::sym(n as u32), ActionSpec::Partitions);
        let prefix = format!("partitions/S{n}");
        let p = params(|p| p.n = Some(n as i64));
        b.element(&on, &format!("{prefix}/transposition"), ElementRef::Cycles("(0 1)".into()), formula("partition-transposition", p), Provenance::Paper, "transposition on bisections");
        if g.closable {
            let md = On { suites: vec![Suite::Mindeg], ..on.clone() };
            b.push(&md, format!("{prefix}/mindeg"), Check::MinDegree { expected: Expected::DegreeFormula }, Provenance::Paper, "minimal degree on bisections");
            b.scans(&on, &prefix);
        }
    }
}

fn a6_cases(b: &mut Builder) {
    let a6 = sym_alt(6, true);
    let s6 = sym_alt(6, false);
    let tables = [Suite::Tables];
    let a5prim = On::new(&a6, OmegaBuild::Cosets(vec!["(0 1 2 3 4)", "(0 5)(1 4)"]), &tables).spec(GroupSpec::alt(6), ActionSpec::Catalog { name: "A5prim".into() });
    b.element(&a5prim, "tab:a6/A6/A5prim/33", ElementRef::Cycles("(0 1 2)(3 4 5)".into()), Expected::Value(r(1, 2)), Provenance::Paper, "A6 on cosets of a primitive A5, element (3^2)");
    b.scans(&a5prim, "a6/A6/A5prim");
    let s5prim = On::new(&s6, OmegaBuild::Cosets(vec!["(0 1 2 3 4)", "(0 5)(1 4)", "(1 2 4 3)"]), &tables).spec(GroupSpec::sym(6), ActionSpec::Catalog { name: "S5prim".into() });
    b.element(&s5prim, "tab:a6/S6/S5prim/23", ElementRef::Cycles("(0 1)(2 3)(4 5)".into()), Expected::Value(r(2, 3)), Provenance::Paper, "S6 on cosets of a primitive S5, element (2^3)");
    b.element(&s5prim, "tab:a6/S6/S5prim/33", ElementRef::Cycles("(0 1 2)(3 4 5)".into()), Expected::Value(r(1, 2)), Provenance::Paper, "S6 on cosets of a primitive S5, element (3^2)");
    let mi = On { suites: vec![Suite::Minindex], ..s5prim.clone() };
    b.push(&mi, "a6/S6/S5prim/minindex", Check::MinIndex { expected: Expected::IndexFormula, witnesses: None }, Provenance::Derived, "twisted degree 6 action");
    let md = On { suites: vec![Suite::Mindeg], ..s5prim.clone() };
    b.push(&md, "a6/S6/S5prim/mindeg", Check::MinDegree { expected: Expected::DegreeFormula }, Provenance::Derived, "twisted degree 6 action");
    b.scans(&s5prim, "a6/S6/S5prim");
    let s2wrs3 = On::new(&s6, OmegaBuild::Cosets(vec!["(0 1)", "(2 3 4 5)", "(2 3)"]), &tables).spec(GroupSpec::sym(6), ActionSpec::Catalog { name: "S2wrS3".into() });
    b.element(&s2wrs3, "tab:a6/S6/S2wrS3/2", ElementRef::Cycles("(0 1)".into()), Expected::Value(r(7, 15)), Provenance::Paper, "S6 on 15 cosets, transposition");
    b.scans(&s2wrs3, "a6/S6/S2wrS3");
    let pgl = classical(
        "PGammaL2(9)",
        FormKind::Linear,
        2,
        9,
        None,
        vec![ElementSpec::scalar(2, 1, 8), ElementSpec::automorphism(Automorphism::Field, 2)],
        PointKind::Subspaces(1),
        1440,
    );
    let on = On::new(&pgl, OmegaBuild::Natural, &tables).spec(GroupSpec::alt(6).with("2^2"), ActionSpec::Catalog { name: "(S3wrS2).2".into() });
    b.element(&on, "tab:a6/A6.2^2/S3wrS2.2/2", ElementRef::Spec(ElementSpec::automorphism(Automorphism::Field, 2)), Expected::Value(r(2, 5)), Provenance::Paper, "A6.2^2 on 10 points, field involution");
    b.scans(&on, "a6/A6.2^2/S3wrS2.2");
}

fn m22_cases(b: &mut Builder) {
    let g = def("M22:2", GroupBuild::File { text: M22_2_JSON }, Some(887_040), true);
    let on = On::new(&g, OmegaBuild::Natural, &[Suite::Tables]).spec(GroupSpec::new(Family::Sporadic { name: "M22:2".into() }), ActionSpec::Catalog { name: "L3(4).2_2".into() });
    b.push(&on, "m22.2/order", Check::Order { expected: 887_040 }, Provenance::Paper, "order of M22:2");
    b.push(&on, "m22.2/degree", Check::Degree { expected: 22 }, Provenance::Paper, "degree of M22:2");
    b.element(&on, "m22.2/2B", ElementRef::Class { order: 2, fixed: 8 }, Expected::Value(r(4, 11)), Provenance::Paper, "involution class fixing 8 points");
    let md = On { suites: vec![Suite::Mindeg], ..on.clone() };
    b.push(&md, "m22.2/mindeg", Check::MinDegree { expected: Expected::Integer(14) }, Provenance::Paper, "minimal degree of M22:2");
    b.push(&md, "m22.2/mindeg-formula", Check::MinDegree { expected: Expected::DegreeFormula }, Provenance::Paper, "minimal degree of M22:2");
    b.scans(&on, "m22.2");
}

fn linear_cases(b: &mut Builder) {
    let sub = [Suite::Subspace];
    let l27 = classical("L2(7)", FormKind::Linear, 2, 7, None, vec![], PointKind::Subspaces(1), 168);
    let on = On::new(&l27, OmegaBuild::Natural, &sub).spec(GroupSpec::new(Family::Linear { n: 2, q: 7 }), ActionSpec::P { m: 1 });
    b.scans(&on, "l2(7)/P1");

    let l283 = classical("L2(8):3", FormKind::Linear, 2, 8, None, vec![ElementSpec::automorphism(Automorphism::Field, 3)], PointKind::Subspaces(1), 1512);
    let on = On::new(&l283, OmegaBuild::Natural, &sub).spec(GroupSpec::new(Family::Linear { n: 2, q: 8 }).with("phi"), ActionSpec::P { m: 1 });
    b.element(&on, "l2(8):3/P1/phi", ElementRef::Spec(ElementSpec::automorphism(Automorphism::Field, 3)), formula("tab:class/L/P1/phi", Params::nq(2, 8)), Provenance::Paper, "field automorphism on the projective line");
    b.element(&on, "l2(8):3/P1/torus", ElementRef::Spec(ElementSpec::scalar(2, 1, 7)), formula("tab:class/L/P1/omega", Params::nq(2, 8)), Provenance::Paper, "split torus element of order 7");
    let mi = On { suites: vec![Suite::Minindex], ..on.clone() };
    b.push(&mi, "l2(8):3/P1/minindex", Check::MinIndex { expected: Expected::Integer(4), witnesses: Some(vec![2, 3]) }, Provenance::Paper, "L2(8):3 on 9 points");
    b.push(&mi, "l2(8):3/P1/minindex-formula", Check::MinIndex { expected: Expected::IndexFormula, witnesses: None }, Provenance::Paper, "L2(8):3 on 9 points");
    let md = On { suites: vec![Suite::Mindeg], ..on.clone() };
    b.push(&md, "l2(8):3/P1/mindeg", Check::MinDegree { expected: Expected::DegreeFormula }, Provenance::Paper, "general minimal degree bound");
    b.scans(&on, "l2(8):3/P1");

    let l32 = classical("L3(2)", FormKind::Linear, 3, 2, None, vec![], PointKind::Subspaces(1), 168);
    let on = On::new(&l32, OmegaBuild::Natural, &[Suite::Subspace, Suite::Tables]).spec(GroupSpec::new(Family::Linear { n: 3, q: 2 }), ActionSpec::P { m: 1 });
    b.element(&on, "l3(2)/P1/transvection", ElementRef::Spec(ElementSpec::transvection(3, 2)), Expected::Value(r(3, 7)), Provenance::Paper, "L3(2) on 1-spaces, transvection");
    let md = On { suites: vec![Suite::Mindeg], ..on.clone() };
    b.push(&md, "l3(2)/P1/mindeg", Check::MinDegree { expected: Expected::DegreeFormula }, Provenance::Paper, "L_n(2) on 1-spaces");
    b.scans(&on, "l3(2)/P1");
    let on = On::new(&l32, OmegaBuild::Points(PointKind::Subspaces(2)), &sub).spec(GroupSpec::new(Family::Linear { n: 3, q: 2 }), ActionSpec::P { m: 1 });
    b.element(&on, "l3(2)/P2/transvection", ElementRef::Spec(ElementSpec::transvection(3, 2)), Expected::Value(r(3, 7)), Provenance::Derived, "L3(2) on 2-spaces, transvection");

    let l33 = classical("L3(3)", FormKind::Linear, 3, 3, None, vec![], PointKind::Subspaces(1), 5616);
    let on = On::new(&l33, OmegaBuild::Natural, &sub).spec(GroupSpec::new(Family::Linear { n: 3, q: 3 }), ActionSpec::P { m: 1 });
    b.element(&on, "l3(3)/P1/transvection", ElementRef::Spec(ElementSpec::transvection(3, 3)), formula("tab:class/L/P1/J2", Params::nq(3, 3)), Provenance::Paper, "L3(3) on 1-spaces, transvection");
    b.element(&on, "l3(3)/P1/omega", ElementRef::Spec(ElementSpec::scalar(3, 1, 2)), formula("tab:class/L/P1/omega", Params::nq(3, 3)), Provenance::Paper, "L3(3) on 1-spaces, reflection");
    let md = On { suites: vec![Suite::Mindeg], ..on.clone() };
    b.push(&md, "l3(3)/P1/mindeg", Check::MinDegree { expected: Expected::DegreeFormula }, Provenance::Paper, "L_n(3) on 1-spaces");
    b.scans(&on, "l3(3)/P1");

    let l42 = classical("L4(2)", FormKind::Linear, 4, 2, None, vec![], PointKind::Subspaces(1), 20160);
    let on = On::new(&l42, OmegaBuild::Natural, &[Suite::Subspace, Suite::Tables]).spec(GroupSpec::new(Family::Linear { n: 4, q: 2 }), ActionSpec::P { m: 1 });
    b.element(&on, "l4(2)/P1/transvection", ElementRef::Spec(ElementSpec::transvection(4, 2)), Expected::Value(r(7, 15)), Provenance::Paper, "L4(2) on 1-spaces, transvection");
    let md = On { suites: vec![Suite::Mindeg], ..on.clone() };
    b.push(&md, "l4(2)/P1/mindeg", Check::MinDegree { expected: Expected::DegreeFormula }, Provenance::Paper, "L_n(2) on 1-spaces");
    b.scans(&on, "l4(2)/P1");
    let on = On::new(&l42, OmegaBuild::Points(PointKind::Subspaces(2)), &sub).spec(GroupSpec::new(Family::Linear { n: 4, q: 2 }), ActionSpec::P { m: 2 });
    b.scans(&on, "l4(2)/P2");
}

fn unitary_cases(b: &mut Builder) {
    let tau = ElementSpec::automorphism(Automorphism::Graph, 2);
    let base = PointKind::TotallySingular(2);
    let u42 = classical("U4(2)", FormKind::Unitary, 4, 4, None, vec![], base, 25920);
    let u422 = classical("U4(2).2", FormKind::Unitary, 4, 4, None, vec![tau.clone()], base, 51840);
    let actions = [
        ("P1", PointKind::TotallySingular(1), ActionSpec::P { m: 1 }),
        ("P2", PointKind::TotallySingular(2), ActionSpec::P { m: 2 }),
        ("N1", PointKind::Nondegenerate { m: 1, eta: None }, ActionSpec::N { m: 1, eta: None }),
    ];
    for (g, name, spec) in [(&u42, "u4(2)", GroupSpec::new(Family::Unitary { n: 4, q: 2 })), (&u422, "u4(2).2", GroupSpec::new(Family::Unitary { n: 4, q: 2 }).with("tau"))] {
        for (act, kind, a) in &actions {
            let on = On::new(g, OmegaBuild::Points(*kind), &[Suite::Subspace]).spec(spec.clone(), a.clone());
            b.scans(&on, &format!("{name}/{act}"));
        }
    }
    let on = On::new(&u42, OmegaBuild::Points(PointKind::Nondegenerate { m: 1, eta: None }), &[Suite::Subspace, Suite::Tables]);
    b.element(&on, "u4(2)/N1/omega", ElementRef::Spec(ElementSpec::scalar(4, 1, 3)), formula("tab:class/U/N1/omega", Params::nq(4, 2)), Provenance::Paper, "U4(2) on nondegenerate 1-spaces, order 3 diagonal element");
    let on = On::new(&u42, OmegaBuild::Points(PointKind::TotallySingular(2)), &[Suite::Subspace]);
    b.element(&on, "u4(2)/P2/omegaI2", ElementRef::Spec(ElementSpec::scalar(4, 2, 3)), formula("tab:class/U/P2/omegaI2", Params::nq(4, 2)), Provenance::Paper, "U4(2) on totally singular 2-spaces, order 3 element");
    let on = On::new(&u422, OmegaBuild::Points(PointKind::TotallySingular(2)), &[Suite::Subspace, Suite::Tables])
        .spec(GroupSpec::new(Family::Unitary { n: 4, q: 2 }).with("tau"), ActionSpec::P { m: 2 });
    b.element(&on, "u4(2).2/P2/tau", ElementRef::Spec(tau.clone()), Expected::Value(r(5, 9)), Provenance::Paper, "U4(2).2 on totally singular 2-spaces, graph automorphism");
    b.element(&on, "u4(2).2/P2/tau-formula", ElementRef::Spec(tau), formula("tab:class/U/P2/tau", Params::nq(4, 2)), Provenance::Paper, "U4(q) on totally singular 2-spaces, graph automorphism");
    let mi = On { suites: vec![Suite::Minindex], ..on.clone() };
    b.push(&mi, "u4(2).2/P2/minindex", Check::MinIndex { expected: Expected::IndexFormula, witnesses: None }, Provenance::Paper, "U4(2).2 on totally singular 2-spaces");
    let md = On { suites: vec![Suite::Mindeg], ..on.clone() };
    b.push(&md, "u4(2).2/P2/mindeg", Check::MinDegree { expected: Expected::DegreeFormula }, Provenance::Paper, "U4(q) on totally singular 2-spaces with tau");
}

fn symplectic_cases(b: &mut Builder) {
    let sp6 = classical("Sp6(2)", FormKind::Symplectic, 6, 2, None, vec![], PointKind::QuadraticForms(Sign::Minus), 1_451_520);
    let spec = GroupSpec::new(Family::Symplectic { n: 6, q: 2 });
    let b1 = ElementSpec::transvection(6, 2);
    let sub = [Suite::Subspace];

    let p1 = On::new(&sp6, OmegaBuild::Points(PointKind::TotallySingular(1)), &sub).spec(spec.clone(), ActionSpec::P { m: 1 });
    b.push(&p1, "sp6/order", Check::Order { expected: 1_451_520 }, Provenance::Trivial, "order of Sp6(2)");
    b.element(&p1, "sp6/P1/transvection", ElementRef::Spec(b1.clone()), formula("tab:class/Sp/P1/J2", Params::nq(6, 2)), Provenance::Paper, "Sp_n(q) on 1-spaces, transvection");
    b.push(&p1, "sp6/P1/max2", Check::MaxFpr { r: 2, expected: formula("tab:class/Sp/P1/J2", Params::nq(6, 2)) }, Provenance::Paper, "Sp_n(q) on 1-spaces, largest involution fpr");
    let md = On { suites: vec![Suite::Mindeg], ..p1.clone() };
    b.push(&md, "sp6/P1/mindeg", Check::MinDegree { expected: Expected::DegreeFormula }, Provenance::Paper, "Sp_n(2) on 1-spaces");
    b.scans(&p1, "sp6/P1");
    for m in [2usize, 3] {
        let on = On::new(&sp6, OmegaBuild::Points(PointKind::TotallySingular(m)), &sub).spec(spec.clone(), ActionSpec::P { m: m as u32 });
        b.scans(&on, &format!("sp6/P{m}"));
    }

    let minus = On::new(&sp6, OmegaBuild::Points(PointKind::QuadraticForms(Sign::Minus)), &[Suite::Subspace, Suite::Tables])
        .spec(spec.clone(), ActionSpec::OEpsilon { eps: Sign::Minus });
    b.push(&minus, "sp6/Ominus/degree", Check::Degree { expected: 28 }, Provenance::Trivial, "number of minus-type forms");
    b.element(&minus, "sp6/Ominus/b1", ElementRef::Spec(b1.clone()), Expected::Value(r(4, 7)), Provenance::Derived, "Sp6(2) on cosets of O6-(2), transvection");
    b.element(&minus, "sp6/Ominus/b1/class-row", ElementRef::Spec(b1.clone()), formula("tab:class/Sp/Oeps/b1", Params::nqe(6, 2, Sign::Minus)), Provenance::Paper, "Sp_n(2) on cosets of O_n^eps(2), transvection");
    b.element(&minus, "sp6/Ominus/b1/subb2-row", ElementRef::Spec(b1.clone()), formula("tab:subb2/Sp/Ominus/b1", Params::nq(6, 2)), Provenance::Paper, "Sp_n(2) on cosets of O_n^-(2), transvection, 1/r table");
    b.element(&minus, "sp6/Ominus/Lambda", ElementRef::Spec(row_spec("tab:class/Sp/Ominus/Lambda", &Params::nq(6, 2))), formula("tab:class/Sp/Ominus/Lambda", Params::nq(6, 2)), Provenance::Paper, "Sp_n(2) on cosets of O_n^-(2), order 3 element");
    let mi = On { suites: vec![Suite::Minindex], ..minus.clone() };
    b.push(&mi, "sp6/Ominus/minindex", Check::MinIndex { expected: Expected::IndexFormula, witnesses: None }, Provenance::Paper, "Sp_n(2) on cosets of O_n^-(2)");
    let md = On { suites: vec![Suite::Mindeg], ..minus.clone() };
    b.push(&md, "sp6/Ominus/mindeg", Check::MinDegree { expected: Expected::DegreeFormula }, Provenance::Paper, "Sp_n(2) on cosets of O_n^eps(2)");
    let ex = On { suites: vec![Suite::Exceptions], ..minus.clone() };
    b.push(&ex, "sp6/Ominus/exceptions-one-over-r", Check::Exceptions { bound: BoundKind::OneOverR }, Provenance::Paper, "exception scan under 1/r");
    b.scans(&minus, "sp6/Ominus");

    let plus = On::new(&sp6, OmegaBuild::Points(PointKind::QuadraticForms(Sign::Plus)), &sub).spec(spec, ActionSpec::OEpsilon { eps: Sign::Plus });
    b.element(&plus, "sp6/Oplus/b1", ElementRef::Spec(b1), formula("tab:class/Sp/Oeps/b1", Params::nqe(6, 2, Sign::Plus)), Provenance::Paper, "Sp_n(2) on cosets of O_n^eps(2), transvection");
    let md = On { suites: vec![Suite::Mindeg], ..plus.clone() };
    b.push(&md, "sp6/Oplus/mindeg", Check::MinDegree { expected: Expected::DegreeFormula }, Provenance::Paper, "Sp_n(2) on cosets of O_n^eps(2)");
    b.scans(&plus, "sp6/Oplus");
}

/// Table rows at parameters too large to close: the element is built and its
/// fixed points counted on the enumerated action.
fn element_level_rows(b: &mut Builder) {
    let sub = [Suite::Subspace, Suite::Tables];
    let row = |b: &mut Builder, g: &Arc<GroupDef>, kind: PointKind, id: &'static str, p: Params, case: &str| {
        let on = On::new(g, OmegaBuild::Points(kind), &sub);
        let anchor = crate::model::record(id).expect("known row").anchor;
        b.element(&on, case, ElementRef::Spec(row_spec(id, &p)), formula(id, p), Provenance::Paper, anchor);
    };
    let l34 = geometry("GL3(4)", FormKind::Linear, 3, 4, None);
    row(b, &l34, PointKind::Subspaces(1), "tab:class/L/P1/omega", Params::nq(3, 4), "rows/L3(4)/P1/omega");
    let l35 = geometry("GL3(5)", FormKind::Linear, 3, 5, None);
    row(b, &l35, PointKind::Subspaces(1), "tab:class/L/P1/J2", Params::nq(3, 5), "rows/L3(5)/P1/J2");
    let l28 = geometry("GL2(8)", FormKind::Linear, 2, 8, None);
    row(b, &l28, PointKind::Subspaces(1), "tab:subb2/L2/P1/torus", Params::nq(2, 8), "rows/L2(8)/P1/torus-subb2");

    let u43 = geometry("GU4(3)", FormKind::Unitary, 4, 9, None);
    row(b, &u43, PointKind::TotallySingular(2), "tab:class/U/P2/tau", Params::nq(4, 3), "rows/U4(3)/P2/tau");
    let u52 = geometry("GU5(2)", FormKind::Unitary, 5, 4, None);
    row(b, &u52, PointKind::TotallySingular(1), "tab:class/U/P1/omega", Params::nq(5, 2), "rows/U5(2)/P1/omega");
    let u62 = geometry("GU6(2)", FormKind::Unitary, 6, 4, None);
    row(b, &u62, PointKind::Nondegenerate { m: 1, eta: None }, "tab:class/U/N1/omega", Params::nq(6, 2), "rows/U6(2)/N1/omega");
    let u42 = geometry("GU4(2)", FormKind::Unitary, 4, 4, None);
    row(b, &u42, PointKind::TotallySingular(2), "tab:subb2/U4/P2/tau", Params::nq(4, 2), "rows/U4(2)/P2/tau-subb2");

    let sp43 = geometry("Sp4(3)", FormKind::Symplectic, 4, 3, None);
    row(b, &sp43, PointKind::TotallySingular(1), "tab:class/Sp/P1/J2", Params::nq(4, 3), "rows/Sp4(3)/P1/J2");
    let sp82 = geometry("Sp8(2)", FormKind::Symplectic, 8, 2, None);
    for eps in [Sign::Minus, Sign::Plus] {
        row(b, &sp82, PointKind::QuadraticForms(eps), "tab:class/Sp/Oeps/b1", Params::nqe(8, 2, eps), &format!("rows/Sp8(2)/O{eps}/b1"));
    }
    row(b, &sp82, PointKind::QuadraticForms(Sign::Minus), "tab:class/Sp/Ominus/Lambda", Params::nq(8, 2), "rows/Sp8(2)/O-/Lambda");
    row(b, &sp82, PointKind::QuadraticForms(Sign::Minus), "tab:subb2/Sp/Ominus/b1", Params::nq(8, 2), "rows/Sp8(2)/O-/b1-subb2");

    let o73 = geometry("O7(3)", FormKind::Quadratic, 7, 3, None);
    row(b, &o73, PointKind::TotallySingular(1), "tab:class/O/P1/rplus", Params::nq(7, 3), "rows/O7(3)/P1/rplus");
    row(b, &o73, PointKind::Nondegenerate { m: 1, eta: Some(Sign::Minus) }, "tab:class/O/N1minus/rminus", Params::nq(7, 3), "rows/O7(3)/N1-/rminus");

    for eps in [Sign::Minus, Sign::Plus] {
        let key = format!("O8{eps}(2)");
        let g = geometry(&key, FormKind::Quadratic, 8, 2, Some(eps));
        row(b, &g, PointKind::TotallySingular(1), "tab:class/Oeps/P1/b1", Params::nqe(8, 2, eps), &format!("rows/{key}/P1/b1"));
        row(b, &g, PointKind::Nonsingular1, "tab:class/Oeps/N1/b1", Params::nqe(8, 2, eps), &format!("rows/{key}/N1/b1"));
    }
    let o8m = geometry("O8-(2)", FormKind::Quadratic, 8, 2, Some(Sign::Minus));
    row(b, &o8m, PointKind::TotallySingular(1), "tab:class/Oeps/P1/Lambda", Params::nqe(8, 2, Sign::Minus), "rows/O8-(2)/P1/Lambda");
    row(b, &o8m, PointKind::TotallySingular(1), "tab:subb2/Ominus/P1/b1", Params::nqe(8, 2, Sign::Minus), "rows/O8-(2)/P1/b1-subb2");
    let o8p = geometry("O8+(2)", FormKind::Quadratic, 8, 2, Some(Sign::Plus));
    row(b, &o8p, PointKind::Nonsingular1, "tab:class/Oeps/N1/Lambda", Params::nqe(8, 2, Sign::Plus), "rows/O8+(2)/N1/Lambda");
    row(b, &o8p, PointKind::Nonsingular1, "tab:subb2/Oplus/N1/b1", Params::nqe(8, 2, Sign::Plus), "rows/O8+(2)/N1/b1-subb2");

    let o83m = geometry("O8-(3)", FormKind::Quadratic, 8, 3, Some(Sign::Minus));
    row(b, &o83m, PointKind::TotallySingular(1), "tab:class/Oeps/P1/r", Params::nqe(8, 3, Sign::Minus), "rows/O8-(3)/P1/r");
    row(b, &o83m, PointKind::SquareDiscriminant1, "tab:class/Oeps/N1/r_sq", Params::nqe(8, 3, Sign::Minus), "rows/O8-(3)/N1/r_sq");
    let o83p = geometry("O8+(3)", FormKind::Quadratic, 8, 3, Some(Sign::Plus));
    row(b, &o83p, PointKind::SquareDiscriminant1, "tab:class/Oeps/N1/r_nsq", Params::nqe(8, 3, Sign::Plus), "rows/O8+(3)/N1/r_nsq");
}

fn affine_cases(b: &mut Builder) {
    let aff = [Suite::Affine];
    let agl23 = affine("AGL2(3)", 3, 2, AffineH::General, 432);
    let spec = GroupSpec::new(Family::Affine { p: 3, d: 2, h: "GL2(3)".into() }).with("transvection");
    let on = On::new(&agl23, OmegaBuild::Natural, &aff).spec(spec, ActionSpec::NaturalPoints);
    let p = params(|p| {
        p.p = Some(3);
        p.d = Some(2);
        p.e = Some(1);
    });
    b.element(&on, "affine/3^2:GL23/transvection", ElementRef::Spec(ElementSpec::transvection(2, 3)), formula("affine", p), Provenance::Paper, "affine transvection fixes a line");
    b.push(&on, "affine/3^2:GL23/max3", Check::MaxFpr { r: 3, expected: Expected::Value(r(1, 3)) }, Provenance::Paper, "affine transvection is the largest");
    b.scans(&on, "affine/3^2:GL23");

    let agl42 = affine("AGL4(2)", 2, 4, AffineH::General, 322_560);
    let spec = GroupSpec::new(Family::Affine { p: 2, d: 4, h: "GL4(2)".into() }).with("transvection");
    let on = On::new(&agl42, OmegaBuild::Natural, &aff).spec(spec, ActionSpec::NaturalPoints);
    let p = params(|p| {
        p.p = Some(2);
        p.d = Some(4);
        p.e = Some(3);
    });
    b.element(&on, "affine/2^4:GL42/transvection", ElementRef::Spec(ElementSpec::transvection(4, 2)), formula("affine", p), Provenance::Paper, "affine transvection fixes a hyperplane");
    let md = On { suites: vec![Suite::Mindeg], ..on.clone() };
    b.push(&md, "affine/2^4:GL42/mindeg", Check::MinDegree { expected: Expected::DegreeFormula }, Provenance::Paper, "affine group over GF(2) with a transvection");
    b.scans(&on, "affine/2^4:GL42");

    let agaml = affine("AGammaL1(16)", 2, 4, AffineH::SemilinearOne, 960);
    let spec = GroupSpec::new(Family::Affine { p: 2, d: 4, h: "GammaL1(16)".into() });
    let on = On::new(&agaml, OmegaBuild::Natural, &aff).spec(spec, ActionSpec::NaturalPoints);
    b.scans(&on, "affine/2^4:GammaL1(16)");

    for (key, p, d, order) in [("7:3", 7u64, 1usize, 21u64), ("13:3", 13, 1, 39), ("5^2:3", 5, 2, 75)] {
        let g = affine(key, p, d, AffineH::Mult(3), order);
        let spec = GroupSpec::new(Family::Affine { p, d: d as u32, h: "3".into() }).with("odd-order");
        let on = On::new(&g, OmegaBuild::Natural, &aff).spec(spec, ActionSpec::NaturalPoints);
        let mi = On { suites: vec![Suite::Minindex, Suite::Affine], ..on.clone() };
        b.push(&mi, format!("affine/{key}/odd-index-bounds"), Check::OddIndexBounds { p, d: d as u32 }, Provenance::Paper, "odd order affine minimal index bounds");
        b.scans(&on, &format!("affine/{key}"));
    }
}

fn diagonal_cases(b: &mut Builder) {
    let g = def("diag(A5^2)", GroupBuild::DiagonalA5, Some(7200), true);
    let on = On::new(&g, OmegaBuild::Natural, &[Suite::Diagonal]).spec(GroupSpec::new(Family::Diagonal { t: "A5".into(), k: 2 }), ActionSpec::NaturalPoints);
    b.push(&on, "diag/A5/k2/degree", Check::Degree { expected: 60 }, Provenance::Trivial, "cosets of the diagonal");
    let p = params(|p| {
        p.t_order = Some(60);
        p.inversions = Some(16);
    });
    let swap = ElementRef::Diagonal { left: String::new(), right: String::new(), swap: true };
    b.element(&on, "diag/A5/k2/R1-identity-alpha", swap, formula("diagonal-inversions", p), Provenance::Derived, "swap fixes the elements inverted by it");
    let p = params(|p| {
        p.t_order = Some(60);
        p.centralizer = Some(4);
        p.k = Some(2);
    });
    let inner = ElementRef::Diagonal { left: "(0 1)(2 3)".into(), right: "(0 1)(2 3)".into(), swap: false };
    b.element(&on, "diag/A5/k2/inner-involution", inner, formula("diagonal-r2", p), Provenance::Paper, "diagonal automorphism fixes its centralizer");
    b.push(&on, "diag/A5/k2/max2", Check::MaxFpr { r: 2, expected: Expected::Value(r(4, 15)) }, Provenance::Derived, "largest involution fpr");
    b.scans(&on, "diag/A5/k2");
}

fn product_cases(b: &mut Builder) {
    let s5 = sym_alt(5, false);
    let comp = GroupDef { key: "S5".into(), build: s5.build.clone(), order: Some(120), closable: true };
    let g = def("S5wrS2", GroupBuild::Wreath { component: Box::new(comp), omega: OmegaBuild::Natural, k: 2 }, Some(28_800), true);
    let spec = GroupSpec::new(Family::Product { component: Box::new(GroupSpec::sym(5)), k: 2 });
    let on = On::new(&g, OmegaBuild::Natural, &[Suite::Product]).spec(spec, ActionSpec::ProductOf { component: Box::new(ActionSpec::Subsets { l: 1 }) });
    b.push(&on, "product/S5wrS2/degree", Check::Degree { expected: 25 }, Provenance::Trivial, "product action degree");
    for (name, x, v) in [("x1-transposition", "(0 1)", r(3, 5)), ("x1-3cycle", "(0 1 2)", r(2, 5)), ("x1-5cycle", "(0 1 2 3 4)", Rational::zero())] {
        let el = ElementRef::Wreath { comps: vec![ElementRef::Cycles(x.into()), ElementRef::Identity], perm: vec![0, 1] };
        let p = params(|p| p.values = vec![v]);
        b.element(&on, &format!("product/S5wrS2/{name}"), el, formula("product", p), Provenance::Derived, "component ratio with an identity coordinate");
    }
    let both = ElementRef::Wreath { comps: vec![ElementRef::Cycles("(0 1)".into()), ElementRef::Cycles("(0 1)".into())], perm: vec![0, 1] };
    let p = params(|p| p.values = vec![r(3, 5), r(3, 5)]);
    b.element(&on, "product/S5wrS2/x1x2", both, formula("product", p), Provenance::Derived, "product of component ratios");
    b.push(&on, "product/S5wrS2/pi-bound", Check::ProductBound, Provenance::Paper, "coordinate-moving elements");
    let mi = On { suites: vec![Suite::Minindex], ..on.clone() };
    b.push(&mi, "product/S5wrS2/minindex", Check::MinIndex { expected: Expected::IndexFormula, witnesses: None }, Provenance::Derived, "product action minimal index");
    let md = On { suites: vec![Suite::Mindeg], ..on.clone() };
    b.push(&md, "product/S5wrS2/mindeg", Check::MinDegree { expected: Expected::DegreeFormula }, Provenance::Derived, "product action minimal degree");
    b.scans(&on, "product/S5wrS2");

    let l283 = GroupDef {
        key: "L2(8):3".into(),
        build: GroupBuild::Classical {
            kind: FormKind::Linear,
            n: 2,
            q: 8,
            eps: None,
            extras: vec![ElementSpec::automorphism(Automorphism::Field, 3)],
            base: PointKind::Subspaces(1),
        },
        order: Some(1512),
        closable: true,
    };
    let g = def("L2(8):3wrS2", GroupBuild::Wreath { component: Box::new(l283), omega: OmegaBuild::Natural, k: 2 }, None, false);
    let on = On::new(&g, OmegaBuild::Natural, &[Suite::Product]);
    let phi = ElementRef::Spec(ElementSpec::automorphism(Automorphism::Field, 3));
    let el = ElementRef::Wreath { comps: vec![phi.clone(), ElementRef::Identity], perm: vec![0, 1] };
    let p = params(|p| p.values = vec![r(1, 3)]);
    b.element(&on, "product/L2(8):3wrS2/x1-phi", el, formula("product", p), Provenance::Derived, "component ratio with an identity coordinate");
    let el = ElementRef::Wreath { comps: vec![phi.clone(), phi], perm: vec![0, 1] };
    let p = params(|p| p.values = vec![r(1, 3), r(1, 3)]);
    b.element(&on, "product/L2(8):3wrS2/x1x2-phi", el, formula("product", p), Provenance::Derived, "product of component ratios");
    let swap = ElementRef::Wreath { comps: vec![ElementRef::Identity, ElementRef::Identity], perm: vec![1, 0] };
    let p = params(|p| {
        p.gamma = Some(9);
        p.h = Some(1);
        p.r = Some(2);
    });
    b.element(&on, "product/L2(8):3wrS2/swap", swap, formula("product-pi-bound", p), Provenance::Derived, "coordinate swap fixes the diagonal");
}

fn a5_natural(b: &mut Builder) {
    let a5 = sym_alt(5, true);
    let on = On::new(&a5, OmegaBuild::Natural, &[Suite::Minindex]).spec(GroupSpec::alt(5), ActionSpec::Subsets { l: 1 });
    b.push(&on, "a5/natural/minindex", Check::MinIndex { expected: Expected::Integer(2), witnesses: None }, Provenance::Paper, "A5 on 5 points");
}

/// Every verification case, in a fixed order.
pub fn catalog() -> Vec<VerificationCase> {
    let mut b = Builder { cases: Vec::new() };
    a6_cases(&mut b);
    partition_cases(&mut b);
    m22_cases(&mut b);
    linear_cases(&mut b);
    unitary_cases(&mut b);
    symplectic_cases(&mut b);
    element_level_rows(&mut b);
    affine_cases(&mut b);
    diagonal_cases(&mut b);
    product_cases(&mut b);
    a5_natural(&mut b);
    subset_cases(&mut b);
    b.cases
}

/// Named (group, action) pairs addressable as `catalog:<name>`.
pub fn named_actions() -> Vec<(String, Arc<GroupDef>, OmegaBuild)> {
    let mut seen = std::collections::BTreeMap::new();
    for c in catalog() {
        if !c.group.closable {
            continue;
        }
        let act = match &c.omega {
            OmegaBuild::Natural => "natural".to_string(),
            OmegaBuild::Subsets(l) => format!("subsets{l}"),
            OmegaBuild::Partitions => "partitions".into(),
            OmegaBuild::Cosets(_) => c.spec.as_ref().map_or("cosets".into(), |(_, a)| a.to_string().trim_start_matches("catalog:").to_string()),
            OmegaBuild::Points(k) => point_name(*k),
        };
        let group = if c.group.key == "Sp6(2)" { "sp6".to_string() } else { c.group.key.to_lowercase() };
        let name = format!("{group}-{act}");
        seen.entry(name).or_insert((c.group.clone(), c.omega.clone()));
    }
    seen.into_iter().map(|(k, (g, o))| (k, g, o)).collect()
}

fn point_name(k: PointKind) -> String {
    match k {
        PointKind::Subspaces(m) | PointKind::TotallySingular(m) => format!("P{m}"),
        PointKind::Nondegenerate { m, eta: None } => format!("N{m}"),
        PointKind::Nondegenerate { m, eta: Some(e) } => format!("N{m}{e}"),
        PointKind::Nonsingular1 => "N1ns".into(),
        PointKind::SquareDiscriminant1 => "N1sq".into(),
        PointKind::Flags(m) => format!("flags{m}"),
        PointKind::QuadraticForms(e) => format!("O{e}"),
    }
}
