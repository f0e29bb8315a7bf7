//! Catalog of verification cases and the engine comparing formulas with brute force.

pub mod build;
pub mod catalog;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::{exceeds, exceptions_for_bound, minimal_degree_formula, minimal_index_formula, odd_order_index_bounds, BoundKind, IndexValue};
use crate::error::{invalid, Error, Result};
use crate::exact_math::{is_prime, Rational};
use crate::fpr_formulas::{evaluate, fpr_product_pi_bound, Params};
use crate::model::{ActionSpec, GroupSpec, RecordKind};
use crate::perm_core::{brute_fpr_via_classes, burnside_sum, fpr_of, min_index_of, minimal_degree_of, ClassImage, PermGroup};

pub use build::{build_omega, realize, AffineH, Elem, ElementRef, GroupBuild, GroupDef, Omega, OmegaBuild, Realized};
pub use catalog::catalog;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Tables,
    Subset,
    Subspace,
    Affine,
    Diagonal,
    Product,
    Minindex,
    Mindeg,
    Burnside,
    Exceptions,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Tables,
        Suite::Subset,
        Suite::Subspace,
        Suite::Affine,
        Suite::Diagonal,
        Suite::Product,
        Suite::Minindex,
        Suite::Mindeg,
        Suite::Burnside,
        Suite::Exceptions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Subset => "subset",
            Suite::Subspace => "subspace",
            Suite::Affine => "affine",
            Suite::Diagonal => "diagonal",
            Suite::Product => "product",
            Suite::Minindex => "minindex",
            Suite::Mindeg => "mindeg",
            Suite::Burnside => "burnside",
            Suite::Exceptions => "exceptions",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| invalid(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

#[derive(Clone, Debug)]
pub enum Expected {
    Value(Rational),
    Formula { id: &'static str, params: Params },
    Integer(u64),
    IndexFormula,
    DegreeFormula,
}

#[derive(Clone, Debug)]
pub enum Check {
    ElementFpr { element: ElementRef, expected: Expected },
    /// Largest fpr over elements of order r.
    MaxFpr { r: u64, expected: Expected },
    /// Per-prime set of brute fpr values above the bound against the table lookup.
    Exceptions { bound: BoundKind },
    MinIndex { expected: Expected, witnesses: Option<Vec<u64>> },
    MinDegree { expected: Expected },
    Order { expected: u64 },
    Degree { expected: u64 },
    /// Σ_g fix(g) = |G|·(number of orbits).
    Burnside,
    /// fpr(x) = |x^G ∩ H| / |x^G| on every class, H a point stabilizer.
    FprIdentity,
    /// Prime-order elements moving the coordinates of a product action
    /// satisfy fpr ≤ |Γ|^{−(r−1)}.
    ProductBound,
    OddIndexBounds { p: u64, d: u32 },
}

impl Check {
    pub fn mode(&self) -> &'static str {
        match self {
            Check::ElementFpr { .. } => "element_fpr",
            Check::MaxFpr { .. } => "class_scan",
            Check::Exceptions { .. } => "exception_scan",
            Check::MinIndex { .. } | Check::OddIndexBounds { .. } => "min_index",
            Check::MinDegree { .. } => "min_degree",
            Check::Order { .. } | Check::Degree { .. } => "degree_only",
            Check::Burnside | Check::FprIdentity | Check::ProductBound => "class_scan",
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationCase {
    pub id: String,
    pub suites: Vec<Suite>,
    pub group: Arc<GroupDef>,
    pub omega: OmegaBuild,
    pub spec: Option<(GroupSpec, ActionSpec)>,
    pub check: Check,
    pub provenance: Provenance,
    pub anchor: String,
    pub optional: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub case: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    pub provenance: Provenance,
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_order: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u64>,
    pub ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub infeasible: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub suite: String,
    pub total: Counts,
    pub per_suite: BTreeMap<String, Counts>,
    pub ms: u64,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.total.fail == 0
    }
}

struct Outcome {
    computed: String,
    expected: String,
    pass: bool,
    detail: Option<String>,
}

impl Outcome {
    fn compare<T: PartialEq + fmt::Display>(computed: T, expected: T) -> Outcome {
        let pass = computed == expected;
        Outcome { computed: computed.to_string(), expected: expected.to_string(), pass, detail: None }
    }
}

/// One realized group with lazily built actions and class scans.
struct Env<'a> {
    real: &'a Realized,
    omegas: HashMap<String, Arc<Omega>>,
    classes: HashMap<String, Arc<Vec<ClassImage>>>,
}

impl<'a> Env<'a> {
    fn new(real: &'a Realized) -> Self {
        Env { real, omegas: HashMap::new(), classes: HashMap::new() }
    }

    fn omega(&mut self, ob: &OmegaBuild) -> Result<Arc<Omega>> {
        let key = ob.key();
        if let Some(o) = self.omegas.get(&key) {
            return Ok(o.clone());
        }
        let o = Arc::new(build_omega(self.real, ob)?);
        self.omegas.insert(key, o.clone());
        Ok(o)
    }

    fn group(&self) -> Result<&'a PermGroup> {
        match &self.real.group {
            Some(g) if self.real.def.closable => Ok(g),
            _ => Err(Error::Unsupported(format!("{} is element-level only", self.real.def.key))),
        }
    }

    fn omega_gens(&mut self, ob: &OmegaBuild) -> Result<Vec<crate::perm_core::Permutation>> {
        let om = self.omega(ob)?;
        self.real.gen_elems.iter().map(|e| om.image(self.real, e)).collect()
    }

    fn classes(&mut self, ob: &OmegaBuild) -> Result<Arc<Vec<ClassImage>>> {
        let key = ob.key();
        if let Some(c) = self.classes.get(&key) {
            return Ok(c.clone());
        }
        let g = self.group()?;
        let om = self.omega(ob)?;
        let imgs = if om.is_identity() {
            g.class_images(None)?
        } else {
            let target = self.omega_gens(ob)?;
            g.class_images(Some(&target))?
        };
        let c = Arc::new(imgs);
        self.classes.insert(key, c.clone());
        Ok(c)
    }
}

fn expected_value(e: &Expected) -> Result<Rational> {
    match e {
        Expected::Value(v) => Ok(v.clone()),
        Expected::Formula { id, params } => Ok(evaluate(id, params)?.value),
        Expected::Integer(n) => Ok(Rational::from(&BigUint::from(*n))),
        _ => Err(invalid("expected value is not a single rational")),
    }
}

fn set_string(s: &BTreeSet<Rational>) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn primes_of(classes: &[ClassImage]) -> BTreeSet<u64> {
    classes.iter().map(|c| c.order).filter(|&o| is_prime(o)).collect()
}

fn spec_of(case: &VerificationCase) -> Result<&(GroupSpec, ActionSpec)> {
    case.spec.as_ref().ok_or_else(|| invalid("case has no group/action spec"))
}

fn evaluate_check(case: &VerificationCase, env: &mut Env) -> Result<Outcome> {
    let real = env.real;
    match &case.check {
        Check::ElementFpr { element, expected } => {
            let want = expected_value(expected)?;
            let om = env.omega(&case.omega)?;
            if let ElementRef::Class { order, fixed } = element {
                let classes = env.classes(&case.omega)?;
                let hit = classes.iter().find(|c| c.order == *order && c.image.fixed_point_count() == *fixed);
                let got = hit.map(|c| fpr_of(&c.image));
                return Ok(match got {
                    Some(v) => Outcome::compare(v, want),
                    None => Outcome {
                        computed: "none".into(),
                        expected: want.to_string(),
                        pass: false,
                        detail: Some(format!("no class of order {order} fixing {fixed} points")),
                    },
                });
            }
            let e = real.element(element)?;
            let x = om.image(real, &e)?;
            let mut out = Outcome::compare(fpr_of(&x), want);
            if real.def.closable {
                if let Some(g) = &real.group {
                    if !g.contains(&real.base_image(&e)?)? {
                        out.pass = false;
                        out.detail = Some("element is not in the group".into());
                    }
                }
            }
            Ok(out)
        }
        Check::MaxFpr { r, expected } => {
            let classes = env.classes(&case.omega)?;
            let got = classes.iter().filter(|c| c.order == *r).map(|c| fpr_of(&c.image)).max();
            let want = expected_value(expected)?;
            Ok(match got {
                Some(v) => Outcome::compare(v, want),
                None => Outcome { computed: "none".into(), expected: want.to_string(), pass: false, detail: Some(format!("no elements of order {r}")) },
            })
        }
        Check::Exceptions { bound } => {
            let (g, a) = spec_of(case)?;
            let classes = env.classes(&case.omega)?;
            let mut computed = Vec::new();
            let mut expected = Vec::new();
            let mut first_diff = None;
            for r in primes_of(&classes) {
                let mut brute = BTreeSet::new();
                for c in classes.iter().filter(|c| c.order == r) {
                    let v = fpr_of(&c.image);
                    if exceeds(&v, r as i64, *bound)? {
                        brute.insert(v);
                    }
                }
                let hits = exceptions_for_bound(g, a, r as i64, *bound)?;
                let table: BTreeSet<Rational> = hits.iter().map(|h| h.value.clone()).collect();
                let family = hits.iter().any(|h| h.kind == RecordKind::FamilyMax);
                let ok = if family { brute.last() == table.last() } else { brute == table };
                let tag = if family { "max " } else { "" };
                computed.push(format!("{r}:{tag}{}", set_string(&brute)));
                expected.push(format!("{r}:{tag}{}", set_string(&table)));
                if !ok && first_diff.is_none() {
                    first_diff = Some(format!("first differing prime {r}: brute {} vs table {}", set_string(&brute), set_string(&table)));
                }
            }
            Ok(Outcome { computed: computed.join(" "), expected: expected.join(" "), pass: first_diff.is_none(), detail: first_diff })
        }
        Check::MinIndex { expected, witnesses } => {
            let classes = env.classes(&case.omega)?;
            let (ind, wit) = min_index_of(&classes)?;
            let m = env.omega(&case.omega)?.degree as u64;
            let ind_r = Rational::from(&BigUint::from(ind));
            let mut problems = Vec::new();
            if wit.iter().any(|&o| !is_prime(o)) {
                problems.push(format!("witness orders {wit:?} are not all prime"));
            }
            let primes = primes_of(&classes);
            if primes.contains(&2) && !wit.contains(&2) {
                problems.push("no involution attains the minimal index".into());
            }
            if let Some(&r) = primes.iter().next() {
                let cap = Rational::from(&BigUint::from(m)) * (Rational::one() - Rational::ratio(1, r as i64));
                if ind_r > cap {
                    problems.push(format!("Ind exceeds m(1 − 1/{r}) = {cap}"));
                }
            }
            if let Some(w) = witnesses {
                if w != &wit {
                    problems.push(format!("witness orders {wit:?}, expected {w:?}"));
                }
            }
            let (expected_s, ok) = match expected {
                Expected::IndexFormula => {
                    let (g, a) = spec_of(case)?;
                    match minimal_index_formula(g, a)? {
                        IndexValue::Exact { value, .. } => (value.to_string(), value == BigUint::from(ind)),
                        IndexValue::RangeOnly { lower, upper, .. } => {
                            let lo_ok = lower.as_ref().map_or(true, |l| ind_r >= *l);
                            let hi_ok = upper.as_ref().map_or(true, |u| ind_r <= *u);
                            let show = |v: &Option<Rational>| v.as_ref().map_or("?".to_string(), |v| v.to_string());
                            (format!("[{}, {}]", show(&lower), show(&upper)), lo_ok && hi_ok)
                        }
                        IndexValue::ThresholdOnly { .. } => return Err(invalid("unexpected threshold result")),
                    }
                }
                other => {
                    let v = expected_value(other)?;
                    (v.to_string(), v == ind_r)
                }
            };
            let pass = ok && problems.is_empty();
            Ok(Outcome { computed: ind.to_string(), expected: expected_s, pass, detail: (!problems.is_empty()).then(|| problems.join("; ")) })
        }
        Check::MinDegree { expected } => {
            let classes = env.classes(&case.omega)?;
            let mu = minimal_degree_of(&classes)?;
            let mu_r = Rational::from(&BigUint::from(mu));
            match expected {
                Expected::DegreeFormula => {
                    let (g, a) = spec_of(case)?;
                    match minimal_degree_formula(g, a)? {
                        IndexValue::Exact { value, .. } => Ok(Outcome::compare(BigUint::from(mu), value)),
                        IndexValue::ThresholdOnly { bound, .. } => {
                            let b = bound.ok_or_else(|| invalid("no degree bound"))?;
                            let pass = mu_r >= b;
                            Ok(Outcome { computed: mu.to_string(), expected: format!("≥ {b}"), pass, detail: None })
                        }
                        IndexValue::RangeOnly { .. } => Err(invalid("unexpected range result")),
                    }
                }
                other => Ok(Outcome::compare(mu_r, expected_value(other)?)),
            }
        }
        Check::Order { expected } => {
            let g = env.group()?;
            Ok(Outcome::compare(g.order()?, BigUint::from(*expected)))
        }
        Check::Degree { expected } => Ok(Outcome::compare(env.omega(&case.omega)?.degree as u64, *expected)),
        Check::Burnside => {
            let classes = env.classes(&case.omega)?;
            let om = env.omega(&case.omega)?;
            let gens = env.omega_gens(&case.omega)?;
            let orbits = PermGroup::new(om.degree, gens)?.orbits().len();
            let order = env.group()?.order()?;
            Ok(Outcome::compare(burnside_sum(&classes), order * BigUint::from(orbits)))
        }
        Check::FprIdentity => {
            let om = env.omega(&case.omega)?;
            let gens = env.omega_gens(&case.omega)?;
            let order = env.group()?.order()?;
            let cap = usize::try_from(order).map_err(|_| invalid("group too large"))?;
            let og = PermGroup::new(om.degree, gens)?.closed(cap)?;
            let h = og.point_stabilizer(0)?;
            let mut bad = Vec::new();
            let classes = og.conjugacy_classes()?;
            for c in classes {
                let a = fpr_of(&c.representative);
                let b = brute_fpr_via_classes(&og, &h, &c.representative)?;
                if a != b {
                    bad.push(format!("{}: {a} vs {b}", c.representative.to_cycle_string()));
                }
            }
            Ok(Outcome {
                computed: format!("{} classes, {} mismatches", classes.len(), bad.len()),
                expected: format!("{} classes, 0 mismatches", classes.len()),
                pass: bad.is_empty(),
                detail: bad.first().cloned(),
            })
        }
        Check::ProductBound => {
            let classes = env.classes(&case.omega)?;
            let m = match &real.def.build {
                GroupBuild::Wreath { .. } => (env.omega(&case.omega)?.degree as f64).sqrt().round() as i64,
                _ => return Err(invalid("product bound needs a product action")),
            };
            let mut computed = Vec::new();
            let mut expected = Vec::new();
            let mut pass = true;
            for r in primes_of(&classes) {
                let worst = classes
                    .iter()
                    .filter(|c| c.order == r && real.moves_coordinates(&c.image) == Some(true))
                    .map(|c| fpr_of(&c.image))
                    .max();
                let Some(worst) = worst else { continue };
                let b = fpr_product_pi_bound(m, 1, r as i64)?;
                pass &= worst <= b;
                computed.push(format!("{r}:{worst}"));
                expected.push(format!("{r}:≤{b}"));
            }
            Ok(Outcome { computed: computed.join(" "), expected: expected.join(" "), pass, detail: None })
        }
        Check::OddIndexBounds { p, d } => {
            let classes = env.classes(&case.omega)?;
            let (ind, _) = min_index_of(&classes)?;
            let m = env.omega(&case.omega)?.degree as u64;
            let r = *primes_of(&classes).iter().next().ok_or_else(|| invalid("trivial group"))?;
            let (lo, hi) = odd_order_index_bounds(*p, *d, r, m)?;
            let v = Rational::from(&BigUint::from(ind));
            let pass = lo <= v && v <= hi;
            Ok(Outcome { computed: ind.to_string(), expected: format!("[{lo}, {hi}]"), pass, detail: None })
        }
    }
}

fn finish(case: &VerificationCase, env: Option<&Env>, res: Result<Outcome>, ms: u64) -> Report {
    let (group_order, degree) = match env {
        Some(env) => {
            let order = env.real.group.as_ref().filter(|_| env.real.def.closable).and_then(|g| g.order().ok()).map(|o| o.to_string());
            let degree = env.omegas.get(&case.omega.key()).map(|o| o.degree as u64);
            (order, degree)
        }
        None => (None, None),
    };
    let base = Report {
        case: case.id.clone(),
        status: Status::Fail,
        computed: String::new(),
        expected: String::new(),
        provenance: case.provenance,
        mode: case.check.mode().to_string(),
        group_order,
        degree,
        ms,
        detail: None,
    };
    match res {
        Ok(o) => Report {
            status: if o.pass { Status::Pass } else { Status::Fail },
            computed: o.computed,
            expected: o.expected,
            detail: o.detail,
            ..base
        },
        Err(e) => Report {
            status: if case.optional { Status::Infeasible } else { Status::Fail },
            computed: "error".into(),
            detail: Some(e.to_string()),
            ..base
        },
    }
}

fn run_group(cases: &[(usize, &VerificationCase)]) -> Vec<(usize, Report)> {
    let start = Instant::now();
    let real = match realize(&cases[0].1.group) {
        Ok(r) => r,
        Err(e) => {
            let ms = start.elapsed().as_millis() as u64;
            return cases.iter().map(|(i, c)| (*i, finish(c, None, Err(e.clone()), ms))).collect();
        }
    };
    let mut env = Env::new(&real);
    let mut out = Vec::with_capacity(cases.len());
    let mut t = start;
    for (i, c) in cases {
        let res = evaluate_check(c, &mut env);
        let ms = t.elapsed().as_millis() as u64;
        out.push((*i, finish(c, Some(&env), res, ms)));
        t = Instant::now();
    }
    out
}

pub fn run_case(case: &VerificationCase) -> Report {
    run_group(&[(0, case)]).pop().expect("one report").1
}

/// Catalog cases belonging to `suite` (all cases when `None`).
pub fn select(suite: Option<Suite>) -> Vec<VerificationCase> {
    catalog().into_iter().filter(|c| suite.map_or(true, |s| c.suites.contains(&s))).collect()
}

pub fn find_case(id: &str) -> Option<VerificationCase> {
    catalog().into_iter().find(|c| c.id == id)
}

/// Runs the cases on `parallelism` threads; reports come back in catalog order.
pub fn run_cases(cases: &[VerificationCase], parallelism: usize) -> Result<Vec<Report>> {
    let mut groups: Vec<(String, Vec<(usize, &VerificationCase)>)> = Vec::new();
    let mut slot: HashMap<&str, usize> = HashMap::new();
    for (i, c) in cases.iter().enumerate() {
        let k = c.group.key.as_str();
        let g = *slot.entry(k).or_insert_with(|| {
            groups.push((k.to_string(), Vec::new()));
            groups.len() - 1
        });
        groups[g].1.push((i, c));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()
        .map_err(|e| invalid(e.to_string()))?;
    let mut reports: Vec<(usize, Report)> =
        pool.install(|| groups.par_iter().flat_map_iter(|(_, cs)| run_group(cs)).collect());
    reports.sort_by_key(|(i, _)| *i);
    Ok(reports.into_iter().map(|(_, r)| r).collect())
}

pub fn summarize(name: &str, cases: &[VerificationCase], reports: &[Report], ms: u64) -> Summary {
    let mut s = Summary { suite: name.to_string(), ms, ..Default::default() };
    for (c, r) in cases.iter().zip(reports) {
        let bump = |k: &mut Counts| match r.status {
            Status::Pass => k.pass += 1,
            Status::Fail => k.fail += 1,
            Status::Infeasible => k.infeasible += 1,
        };
        bump(&mut s.total);
        for suite in &c.suites {
            bump(s.per_suite.entry(suite.name().to_string()).or_default());
        }
    }
    s
}

/// `name` is a suite name or "all".
pub fn run_suite(name: &str, parallelism: usize) -> Result<(Vec<Report>, Summary)> {
    let suite = if name == "all" { None } else { Some(name.parse::<Suite>()?) };
    let start = Instant::now();
    let cases = select(suite);
    let reports = run_cases(&cases, parallelism)?;
    let summary = summarize(name, &cases, &reports, start.elapsed().as_millis() as u64);
    Ok((reports, summary))
}

/// A named catalog group with one of its actions, ready for brute-force queries.
pub struct Construction {
    pub name: String,
    pub real: Realized,
    pub omega: Omega,
}

impl Construction {
    pub fn degree(&self) -> usize {
        self.omega.degree
    }

    pub fn order(&self) -> Result<BigUint> {
        match &self.real.group {
            Some(g) if self.real.def.closable => g.order(),
            _ => Err(Error::Unsupported(format!("{} is element-level only", self.real.def.key))),
        }
    }

    /// The named element as a permutation of Ω.
    pub fn element(&self, r: &ElementRef) -> Result<crate::perm_core::Permutation> {
        self.omega.image(&self.real, &self.real.element(r)?)
    }

    pub fn class_images(&self) -> Result<Vec<ClassImage>> {
        let g = match &self.real.group {
            Some(g) if self.real.def.closable => g,
            _ => return Err(Error::Unsupported(format!("{} is element-level only", self.real.def.key))),
        };
        if self.omega.is_identity() {
            return g.class_images(None);
        }
        let target = self.real.gen_elems.iter().map(|e| self.omega.image(&self.real, e)).collect::<Result<Vec<_>>>()?;
        g.class_images(Some(&target))
    }
}

/// Builds `catalog:<name>`; see [`catalog::named_actions`] for the names.
pub fn construct(name: &str) -> Result<Construction> {
    let (_, def, ob) = catalog::named_actions()
        .into_iter()
        .find(|(n, _, _)| n == name)
        .ok_or_else(|| Error::UnknownFamily(format!("no catalog construction `{name}`")))?;
    let real = realize(&def)?;
    let omega = build_omega(&real, &ob)?;
    Ok(Construction { name: name.to_string(), real, omega })
}
