//! Symbolic groups, actions and the exception tables.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_math::{is_prime, prime_power, Rational};
use crate::fpr_formulas::{self as ff, Params};
use crate::gf_linear::{Automorphism, Discriminant, ElementSpec, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum Family {
    SymAlt {
        n: u32,
        #[serde(default)]
        alt: bool,
    },
    #[serde(rename = "L", alias = "Linear")]
    Linear { n: u32, q: u64 },
    #[serde(rename = "U", alias = "Unitary")]
    Unitary { n: u32, q: u64 },
    #[serde(rename = "Sp", alias = "Symplectic")]
    Symplectic { n: u32, q: u64 },
    #[serde(rename = "O", alias = "OrthogonalOdd")]
    OrthogonalOdd { n: u32, q: u64 },
    #[serde(rename = "Oeps", alias = "OrthogonalEven")]
    OrthogonalEven { n: u32, q: u64, eps: Sign },
    Sporadic { name: String },
    /// V:H with V = (C_p)^d; `h` names the point stabilizer.
    Affine { p: u64, d: u32, h: String },
    /// Socle T^k acting on cosets of a diagonal subgroup.
    Diagonal { t: String, k: u32 },
    /// L ≀ P in product action on Γ^k.
    Product { component: Box<GroupSpec>, k: u32 },
    TwistedWreath { t: String, k: u32 },
}

/// A group: family parameters plus labels naming the extension of the socle
/// (for instance "tau", "phi", "b1", "SO", "r", "transvection").
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extension: Vec<String>,
}

impl GroupSpec {
    pub fn new(family: Family) -> Self {
        GroupSpec { family, extension: Vec::new() }
    }

    pub fn with(mut self, label: &str) -> Self {
        self.extension.push(label.to_string());
        self
    }

    pub fn has(&self, label: &str) -> bool {
        self.extension.iter().any(|l| l == label)
    }

    pub fn sym(n: u32) -> Self {
        GroupSpec::new(Family::SymAlt { n, alt: false })
    }

    pub fn alt(n: u32) -> Self {
        GroupSpec::new(Family::SymAlt { n, alt: true })
    }

    /// Characteristic and field size for classical families.
    pub fn field(&self) -> Option<(u64, u64)> {
        let q = match &self.family {
            Family::Linear { q, .. }
            | Family::Unitary { q, .. }
            | Family::Symplectic { q, .. }
            | Family::OrthogonalOdd { q, .. }
            | Family::OrthogonalEven { q, .. } => *q,
            _ => return None,
        };
        prime_power(q).map(|(p, _)| (p, q))
    }

    pub fn dimension(&self) -> Option<u32> {
        match &self.family {
            Family::Linear { n, .. }
            | Family::Unitary { n, .. }
            | Family::Symplectic { n, .. }
            | Family::OrthogonalOdd { n, .. }
            | Family::OrthogonalEven { n, .. } => Some(*n),
            _ => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::SymAlt { n, alt } => write!(f, "{}{n}", if *alt { "A" } else { "S" })?,
            Family::Linear { n, q } => write!(f, "L{n}({q})")?,
            Family::Unitary { n, q } => write!(f, "U{n}({q})")?,
            Family::Symplectic { n, q } => write!(f, "Sp{n}({q})")?,
            Family::OrthogonalOdd { n, q } => write!(f, "O{n}({q})")?,
            Family::OrthogonalEven { n, q, eps } => write!(f, "O{n}{eps}({q})")?,
            Family::Sporadic { name } => write!(f, "{name}")?,
            Family::Affine { p, d, h } => write!(f, "{p}^{d}:{h}")?,
            Family::Diagonal { t, k } => write!(f, "diag({t}^{k})")?,
            Family::Product { component, k } => write!(f, "({component}) wr S{k}")?,
            Family::TwistedWreath { t, k } => write!(f, "twr({t}^{k})")?,
        }
        if !self.extension.is_empty() {
            write!(f, "[{}]", self.extension.join(","))?;
        }
        Ok(())
    }
}

/// The set Ω a group acts on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum ActionSpec {
    Subsets { l: u32 },
    /// Partitions into two parts of size n/2.
    Partitions,
    /// Totally singular m-spaces (all m-spaces for linear groups).
    P { m: u32 },
    /// Flags U ⊂ W with dim U = m, dim W = n − m.
    PPair { m: u32 },
    /// Nondegenerate m-spaces; η as for the orthogonal N_m^η notation.
    N { m: u32, eta: Option<Sign> },
    /// Nonsingular 1-spaces of an even-characteristic orthogonal space.
    N1Nonsingular,
    /// Cosets of O^ε_n(q) in Sp_n(q), q even.
    OEpsilon { eps: Sign },
    NaturalPoints,
    Catalog { name: String },
    /// Componentwise action on Γ^k.
    ProductOf { component: Box<ActionSpec> },
}

impl fmt::Display for ActionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionSpec::Subsets { l } => write!(f, "subsets:{l}"),
            ActionSpec::Partitions => f.write_str("partitions"),
            ActionSpec::P { m } => write!(f, "P{m}"),
            ActionSpec::PPair { m } => write!(f, "Ppair:{m}"),
            ActionSpec::N { m, eta: Some(e) } => write!(f, "N:{m}:{e}"),
            ActionSpec::N { m, eta: None } => write!(f, "N:{m}"),
            ActionSpec::N1Nonsingular => f.write_str("N1ns"),
            ActionSpec::OEpsilon { eps } => write!(f, "Oeps:{eps}"),
            ActionSpec::NaturalPoints => f.write_str("natural"),
            ActionSpec::Catalog { name } => write!(f, "catalog:{name}"),
            ActionSpec::ProductOf { component } => write!(f, "product:{component}"),
        }
    }
}

impl FromStr for ActionSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad action `{s}`"));
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        if let Some(rest) = s.strip_prefix("product:") {
            return Ok(ActionSpec::ProductOf { component: Box::new(rest.parse()?) });
        }
        if let Some(rest) = s.strip_prefix("catalog:") {
            return Ok(ActionSpec::Catalog { name: rest.to_string() });
        }
        let parts: Vec<&str> = s.split(':').collect();
        Ok(match parts.as_slice() {
            ["subsets", l] => ActionSpec::Subsets { l: num(l)? },
            ["partitions"] => ActionSpec::Partitions,
            ["natural"] => ActionSpec::NaturalPoints,
            ["N1ns"] | ["N1nonsingular"] => ActionSpec::N1Nonsingular,
            ["Ppair", m] => ActionSpec::PPair { m: num(m)? },
            ["N", m] => ActionSpec::N { m: num(m)?, eta: None },
            ["N", m, e] => ActionSpec::N { m: num(m)?, eta: Some(e.parse()?) },
            ["Oeps", e] => ActionSpec::OEpsilon { eps: e.parse()? },
            [p] if p.starts_with('P') => ActionSpec::P { m: num(&p[1..])? },
            [p] if p.starts_with('N') && p.len() > 1 => {
                let body = &p[1..];
                match body.find(['+', '-']) {
                    Some(i) => ActionSpec::N { m: num(&body[..i])?, eta: Some(body[i..].parse()?) },
                    None => ActionSpec::N { m: num(body)?, eta: None },
                }
            }
            _ => return Err(bad()),
        })
    }
}

impl TryFrom<String> for ActionSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ActionSpec> for String {
    fn from(a: ActionSpec) -> String {
        a.to_string()
    }
}

/// Orders of the small simple groups used by diagonal and twisted wreath cases.
pub fn simple_group_order(name: &str) -> Option<u64> {
    Some(match name {
        "A5" | "L2(4)" | "L2(5)" => 60,
        "L2(7)" | "L3(2)" => 168,
        "A6" | "L2(9)" => 360,
        "L2(8)" => 504,
        "L2(11)" => 660,
        "L2(13)" => 1092,
        "A7" => 2520,
        "L3(3)" => 5616,
        "U3(3)" => 6048,
        "M11" => 7920,
        "A8" | "L4(2)" => 20160,
        _ => return None,
    })
}

/// Table side conditions on a group alone.
pub fn validate_group(g: &GroupSpec) -> Vec<String> {
    let mut v = Vec::new();
    let mut need = |ok: bool, msg: &str| {
        if !ok {
            v.push(msg.to_string());
        }
    };
    match &g.family {
        Family::SymAlt { n, .. } => need(*n >= 2, "n ≥ 2"),
        Family::Linear { n, q } => {
            need(*n >= 2, "n ≥ 2");
            need(prime_power(*q).is_some(), "q a prime power");
        }
        Family::Unitary { n, q } => {
            need(*n >= 3, "n ≥ 3");
            need(prime_power(*q).is_some(), "q a prime power");
        }
        Family::Symplectic { n, q } => {
            need(*n >= 4 && n % 2 == 0, "n ≥ 4 even");
            need(prime_power(*q).is_some(), "q a prime power");
        }
        Family::OrthogonalOdd { n, q } => {
            need(*n >= 7 && n % 2 == 1, "n ≥ 7 odd");
            need(prime_power(*q).is_some() && q % 2 == 1, "q odd");
        }
        Family::OrthogonalEven { n, q, .. } => {
            need(*n >= 8 && n % 2 == 0, "n ≥ 8 even");
            need(prime_power(*q).is_some(), "q a prime power");
        }
        Family::Sporadic { name } => need(!name.is_empty(), "sporadic name"),
        Family::Affine { p, d, .. } => {
            need(is_prime(*p), "p prime");
            need(*d >= 1, "d ≥ 1");
        }
        Family::Diagonal { t, k } | Family::TwistedWreath { t, k } => {
            need(simple_group_order(t).is_some(), "known simple group T");
            need(*k >= 2, "k ≥ 2");
        }
        Family::Product { component, k } => {
            need(*k >= 2, "k ≥ 2");
            v.extend(validate_group(component));
        }
    }
    v
}

/// Side conditions of the pair (group, action); an empty list means valid.
pub fn validate(g: &GroupSpec, a: &ActionSpec) -> Vec<String> {
    let mut v = validate_group(g);
    let mut need = |ok: bool, msg: &str| {
        if !ok {
            v.push(msg.to_string());
        }
    };
    let q_even = g.field().is_some_and(|(p, _)| p == 2);
    match (&g.family, a) {
        (Family::SymAlt { n, .. }, ActionSpec::Subsets { l }) => need(*l >= 1 && 2 * l < *n, "1 ≤ ℓ < n/2 fails"),
        (Family::SymAlt { n, .. }, ActionSpec::Partitions) => need(n % 2 == 0 && *n >= 4, "n even, n ≥ 4"),
        (Family::SymAlt { .. }, ActionSpec::NaturalPoints | ActionSpec::Catalog { .. }) => {}
        (Family::Linear { n, .. }, ActionSpec::P { m }) | (Family::Unitary { n, .. }, ActionSpec::P { m }) | (Family::Symplectic { n, .. }, ActionSpec::P { m }) => {
            need(*m >= 1, "m ≥ 1");
            need(2 * m <= *n, "m ≤ n/2 fails");
        }
        (Family::OrthogonalOdd { n, .. }, ActionSpec::P { m }) | (Family::OrthogonalEven { n, .. }, ActionSpec::P { m }) => {
            need(*m >= 1, "m ≥ 1");
            need(2 * m <= *n, "m ≤ n/2 fails");
        }
        (Family::Linear { n, .. }, ActionSpec::PPair { m }) => need(*m >= 1 && 2 * m < *n, "1 ≤ m < n/2 fails"),
        (Family::Unitary { n, .. }, ActionSpec::N { m, .. }) => need(*m >= 1 && 2 * m < *n, "1 ≤ m < n/2 fails"),
        (Family::Symplectic { n, .. }, ActionSpec::N { m, .. }) => need(*m >= 2 && m % 2 == 0 && 2 * m < *n, "2 ≤ m < n/2, m even fails"),
        (Family::Symplectic { .. }, ActionSpec::OEpsilon { .. }) => need(q_even, "q even"),
        (Family::OrthogonalOdd { n, .. }, ActionSpec::N { m, eta }) => {
            need(*m >= 1 && 2 * m < *n, "1 ≤ m < n/2 fails");
            need(eta.is_some(), "η required");
        }
        (Family::OrthogonalEven { n, eps, .. }, ActionSpec::N { m, eta }) => {
            need(*m >= 1 && 2 * m <= *n, "1 ≤ m ≤ n/2 fails");
            if m % 2 == 0 {
                need(eta.is_some(), "η required for even m");
                if 2 * m == *n {
                    need(*eps == Sign::Minus && *eta == Some(Sign::Plus), "(ε,η) = (−,+) when m = n/2");
                }
            } else {
                need(!q_even, "odd m needs q odd");
            }
        }
        (Family::OrthogonalEven { .. }, ActionSpec::N1Nonsingular) => need(q_even, "q even"),
        (Family::Sporadic { .. }, ActionSpec::Catalog { .. }) => {}
        (Family::Affine { .. } | Family::Diagonal { .. } | Family::TwistedWreath { .. }, ActionSpec::NaturalPoints) => {}
        (Family::Product { component, .. }, ActionSpec::ProductOf { component: ca }) => {
            v.extend(validate(component, ca).into_iter().filter(|s| !validate_group(component).contains(s)));
        }
        _ => v.push(format!("action {a} is not defined for {g}")),
    }
    v
}

/// Which exception table a record belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableId {
    /// Classical subspace actions with fpr > 1/(r+1).
    Class,
    /// Subspace actions with fpr > 1/r.
    Subb2,
    /// Groups with socle A6.
    A6,
    /// Non-classical exceptions: subset, partition, affine and similar actions.
    Thm,
}

/// Whether a record's value is attained on a class (Exact) or only the
/// maximum over the family of order-r elements (FamilyMax).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordKind {
    Exact,
    FamilyMax,
}

/// The threshold a record exceeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// fpr > 1/(r+1).
    Main,
    /// fpr > 1/r.
    OneOverR,
}

pub struct Condition {
    pub text: &'static str,
    pub check: fn(&Params) -> bool,
}

/// Group and action shape a record applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    Subsets,
    Partitions,
    /// SymAlt with n = 6 on a named coset action; the bool is `alt`, the
    /// label is an extension label the group must carry.
    A6Catalog { name: &'static str, alt: bool, label: Option<&'static str> },
    Linear { m: u32 },
    Unitary(UnitaryAction),
    SpP1,
    SpOEps { eps: Option<Sign> },
    OddP1,
    OddN1Minus,
    EvenP { m: u32 },
    EvenN1,
    M22,
    Affine,
    Product,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitaryAction {
    P(u32),
    N1,
}

pub struct ExceptionRecord {
    pub id: &'static str,
    pub table: TableId,
    pub pattern: Pattern,
    /// Human-readable element description.
    pub element: &'static str,
    pub params: &'static [&'static str],
    pub prime: fn(&Params) -> Option<i64>,
    pub conditions: Vec<Condition>,
    /// Each inner list must be met by at least one extension label.
    pub requires: fn(&Params) -> Vec<&'static [&'static str]>,
    pub kind: RecordKind,
    pub bound: Bound,
    pub anchor: &'static str,
    pub value: fn(&Params) -> Result<Rational>,
    pub spec: fn(&Params) -> Option<ElementSpec>,
}

impl fmt::Debug for ExceptionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExceptionRecord").field("id", &self.id).finish()
    }
}

impl ExceptionRecord {
    /// Parameters read off (g, a) when the record's shape fits.
    pub fn instantiate(&self, g: &GroupSpec, a: &ActionSpec, r: i64) -> Option<Params> {
        let mut p = Params { r: Some(r), ..Default::default() };
        let ok = match (self.pattern, &g.family, a) {
            (Pattern::Subsets, Family::SymAlt { n, alt }, ActionSpec::Subsets { l }) => {
                p.n = Some(*n as i64);
                p.l = Some(*l as i64);
                p.alt = Some(*alt);
                true
            }
            (Pattern::Partitions, Family::SymAlt { n, alt }, ActionSpec::Partitions) => {
                p.n = Some(*n as i64);
                p.alt = Some(*alt);
                true
            }
            (Pattern::A6Catalog { name, alt: want, label }, Family::SymAlt { n: 6, alt }, ActionSpec::Catalog { name: act }) => {
                let labelled = label.map_or(!g.extension.iter().any(|e| e == "2^2"), |l| g.has(l));
                p.n = Some(6);
                name == act && *alt == want && labelled
            }
            (Pattern::Linear { m: want }, Family::Linear { n, q }, ActionSpec::P { m }) => {
                p.n = Some(*n as i64);
                p.q = Some(*q as i64);
                want == *m
            }
            (Pattern::Unitary(ua), Family::Unitary { n, q }, act) => {
                p.n = Some(*n as i64);
                p.q = Some(*q as i64);
                match (ua, act) {
                    (UnitaryAction::P(w), ActionSpec::P { m }) => w == *m,
                    (UnitaryAction::N1, ActionSpec::N { m: 1, .. }) => true,
                    _ => false,
                }
            }
            (Pattern::SpP1, Family::Symplectic { n, q }, ActionSpec::P { m: 1 }) => {
                p.n = Some(*n as i64);
                p.q = Some(*q as i64);
                true
            }
            (Pattern::SpOEps { eps: want }, Family::Symplectic { n, q }, ActionSpec::OEpsilon { eps }) => {
                p.n = Some(*n as i64);
                p.q = Some(*q as i64);
                p.eps = Some(*eps);
                want.is_none_or(|w| w == *eps)
            }
            (Pattern::OddP1, Family::OrthogonalOdd { n, q }, ActionSpec::P { m: 1 }) => {
                p.n = Some(*n as i64);
                p.q = Some(*q as i64);
                true
            }
            (Pattern::OddN1Minus, Family::OrthogonalOdd { n, q }, ActionSpec::N { m: 1, eta: Some(Sign::Minus) }) => {
                p.n = Some(*n as i64);
                p.q = Some(*q as i64);
                true
            }
            (Pattern::EvenP { m: want }, Family::OrthogonalEven { n, q, eps }, ActionSpec::P { m }) => {
                p.n = Some(*n as i64);
                p.q = Some(*q as i64);
                p.eps = Some(*eps);
                want == *m
            }
            (Pattern::EvenN1, Family::OrthogonalEven { n, q, eps }, act) => {
                p.n = Some(*n as i64);
                p.q = Some(*q as i64);
                p.eps = Some(*eps);
                match act {
                    ActionSpec::N1Nonsingular => q % 2 == 0,
                    ActionSpec::N { m: 1, .. } => q % 2 == 1,
                    _ => false,
                }
            }
            (Pattern::M22, Family::Sporadic { name }, ActionSpec::Catalog { name: act }) => name == "M22:2" && act == "L3(4).2_2",
            (Pattern::Affine, Family::Affine { p: pp, d, .. }, ActionSpec::NaturalPoints) => {
                p.p = Some(*pp as i64);
                p.d = Some(*d as i64);
                true
            }
            (Pattern::Product, Family::Product { .. }, ActionSpec::ProductOf { .. }) => true,
            _ => false,
        };
        if !ok || (self.prime)(&p) != Some(r) {
            return None;
        }
        Some(p)
    }

    pub fn conditions_hold(&self, p: &Params) -> std::result::Result<(), &'static str> {
        for c in &self.conditions {
            if !(c.check)(p) {
                return Err(c.text);
            }
        }
        Ok(())
    }

    /// Extension labels the group must carry, or None if present.
    pub fn missing_labels(&self, g: &GroupSpec, p: &Params) -> Option<String> {
        for alts in (self.requires)(p) {
            if !alts.iter().any(|l| g.has(l)) {
                return Some(alts.join(" or "));
            }
        }
        None
    }
}

fn none(_: &Params) -> Vec<&'static [&'static str]> {
    Vec::new()
}

fn no_spec(_: &Params) -> Option<ElementSpec> {
    None
}

fn get(p: &Params, f: fn(&Params) -> Option<i64>) -> i64 {
    f(p).unwrap_or(-1)
}

fn n_of(p: &Params) -> i64 {
    get(p, |p| p.n)
}

fn q_of(p: &Params) -> i64 {
    get(p, |p| p.q)
}

fn r_of(p: &Params) -> Option<i64> {
    p.r
}

fn q_prime(p: &Params) -> bool {
    q_of(p) > 1 && is_prime(q_of(p) as u64)
}

fn eps_is(p: &Params, s: Sign) -> bool {
    p.eps == Some(s)
}

fn nu(p: &Params) -> usize {
    n_of(p).max(0) as usize
}

fn c(text: &'static str, check: fn(&Params) -> bool) -> Condition {
    Condition { text, check }
}

fn constant(v: Rational) -> Result<Rational> {
    Ok(v)
}

/// Label needed for a diagonal element (ω, I_{n−1}) of a linear or unitary group.
fn delta_labels(n: i64, m: i64) -> Vec<&'static [&'static str]> {
    if n.gcd(&m) != 1 {
        vec![&["delta", "r", "PGL", "PGU"][..]]
    } else {
        Vec::new()
    }
}

static RECORDS: std::sync::LazyLock<Vec<ExceptionRecord>> = std::sync::LazyLock::new(build_records);

/// All encoded exception rows.
pub fn exception_records() -> &'static [ExceptionRecord] {
    &RECORDS
}

pub fn record(id: &str) -> Option<&'static ExceptionRecord> {
    exception_records().iter().find(|r| r.id == id)
}

fn build_records() -> Vec<ExceptionRecord> {
    use Bound::*;
    use RecordKind::*;
    use TableId::*;
    let nq: &'static [&'static str] = &["n", "q"];
    let nqe: &'static [&'static str] = &["n", "q", "eps"];
    vec![
        // Classical subspace actions.
        ExceptionRecord {
            id: "tab:class/L/P1/J2",
            table: Class,
            pattern: Pattern::Linear { m: 1 },
            element: "(J2,J1^(n-2))",
            params: nq,
            prime: |p| p.q,
            conditions: vec![Condition { text: "n ≥ 3", check: |p| n_of(p) >= 3 }, Condition { text: "q prime", check: q_prime }],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "linear group on 1-spaces, transvection",
            value: ff::v_unipotent_p1,
            spec: |p| Some(ElementSpec::transvection(nu(p), q_of(p) as u64)),
        },
        ExceptionRecord {
            id: "tab:class/L/P1/omega",
            table: Class,
            pattern: Pattern::Linear { m: 1 },
            element: "(w,I(n-1))",
            params: nq,
            prime: |p| p.q.map(|q| q - 1),
            conditions: vec![Condition { text: "n ≥ 2", check: |p| n_of(p) >= 2 }, Condition { text: "q − 1 prime", check: |p| q_of(p) > 2 && is_prime(q_of(p) as u64 - 1) }],
            requires: |p| delta_labels(n_of(p), q_of(p) - 1),
            kind: Exact,
            bound: Main,
            anchor: "linear group on 1-spaces, diagonal element of order q-1",
            value: ff::v_linear_omega,
            spec: |p| Some(ElementSpec::scalar(nu(p), 1, q_of(p) as u64 - 1)),
        },
        ExceptionRecord {
            id: "tab:class/L/P1/phi",
            table: Class,
            pattern: Pattern::Linear { m: 1 },
            element: "phi",
            params: nq,
            prime: |_| Some(3),
            conditions: vec![Condition { text: "(n,q) = (2,8)", check: |p| n_of(p) == 2 && q_of(p) == 8 }],
            requires: |_| vec![&["phi"][..]],
            kind: Exact,
            bound: Main,
            anchor: "L2(8):3 on the projective line, field automorphism",
            value: |_| constant(Rational::ratio(1, 3)),
            spec: |_| Some(ElementSpec::automorphism(Automorphism::Field, 3)),
        },
        ExceptionRecord {
            id: "tab:class/U/P1/omega",
            table: Class,
            pattern: Pattern::Unitary(UnitaryAction::P(1)),
            element: "(w,I(n-1))",
            params: nq,
            prime: |_| Some(3),
            conditions: vec![c("n ≥ 5 odd", |p| n_of(p) >= 5 && n_of(p) % 2 == 1), c("q = 2", |p| q_of(p) == 2)],
            requires: |p| delta_labels(n_of(p), 3),
            kind: Exact,
            bound: Main,
            anchor: "unitary group on singular 1-spaces, order 3 diagonal element",
            value: ff::v_unitary_p1_omega,
            spec: |p| Some(ElementSpec::scalar(nu(p), 1, 3)),
        },
        ExceptionRecord {
            id: "tab:class/U/P2/tau",
            table: Class,
            pattern: Pattern::Unitary(UnitaryAction::P(2)),
            element: "tau",
            params: nq,
            prime: |_| Some(2),
            conditions: vec![c("n = 4", |p| n_of(p) == 4), c("q ∈ {2,3}", |p| matches!(q_of(p), 2 | 3))],
            requires: |_| vec![&["tau"][..]],
            kind: Exact,
            bound: Main,
            anchor: "U4(q) on totally singular 2-spaces, graph automorphism",
            value: ff::v_unitary_tau,
            spec: |_| Some(ElementSpec::automorphism(Automorphism::Graph, 2)),
        },
        ExceptionRecord {
            id: "tab:class/U/P2/omegaI2",
            table: Class,
            pattern: Pattern::Unitary(UnitaryAction::P(2)),
            element: "(wI2,I2)",
            params: nq,
            prime: |_| Some(3),
            conditions: vec![c("(n,q) = (4,2)", |p| n_of(p) == 4 && q_of(p) == 2)],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "U4(2) on totally singular 2-spaces, order 3 element",
            value: |_| constant(Rational::ratio(1, 3)),
            spec: |_| Some(ElementSpec::scalar(4, 2, 3)),
        },
        ExceptionRecord {
            id: "tab:class/U/N1/omega",
            table: Class,
            pattern: Pattern::Unitary(UnitaryAction::N1),
            element: "(w,I(n-1))",
            params: nq,
            prime: |_| Some(3),
            conditions: vec![c("n even", |p| n_of(p) >= 4 && n_of(p) % 2 == 0), c("q = 2", |p| q_of(p) == 2)],
            requires: |p| delta_labels(n_of(p), 3),
            kind: Exact,
            bound: Main,
            anchor: "unitary group on nondegenerate 1-spaces, order 3 diagonal element",
            value: ff::v_unitary_n1_omega,
            spec: |p| Some(ElementSpec::scalar(nu(p), 1, 3)),
        },
        ExceptionRecord {
            id: "tab:class/Sp/P1/J2",
            table: Class,
            pattern: Pattern::SpP1,
            element: "(J2,J1^(n-2))",
            params: nq,
            prime: |p| p.q,
            conditions: vec![c("n ≥ 4", |p| n_of(p) >= 4), c("q prime", q_prime)],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "symplectic group on 1-spaces, transvection",
            value: ff::v_unipotent_p1,
            spec: |p| Some(ElementSpec::transvection(nu(p), q_of(p) as u64)),
        },
        ExceptionRecord {
            id: "tab:class/Sp/Oeps/b1",
            table: Class,
            pattern: Pattern::SpOEps { eps: None },
            element: "(J2,J1^(n-2))",
            params: nqe,
            prime: |_| Some(2),
            conditions: vec![c("n ≥ 6", |p| n_of(p) >= 6), c("q = 2", |p| q_of(p) == 2)],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "Sp_n(2) on cosets of O_n^eps(2), transvection",
            value: ff::v_sp_oeps_b1,
            spec: |p| Some(ElementSpec::transvection(nu(p), 2)),
        },
        ExceptionRecord {
            id: "tab:class/Sp/Ominus/Lambda",
            table: Class,
            pattern: Pattern::SpOEps { eps: Some(Sign::Minus) },
            element: "(L,I(n-2))",
            params: nq,
            prime: |_| Some(3),
            conditions: vec![c("n ≥ 6", |p| n_of(p) >= 6), c("q = 2", |p| q_of(p) == 2)],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "Sp_n(2) on cosets of O_n^-(2), order 3 element with codimension 2 fixed space",
            value: ff::v_quarter_minus,
            spec: |p| Some(ElementSpec::irreducible(nu(p), 2, 3)),
        },
        ExceptionRecord {
            id: "tab:class/O/P1/rplus",
            table: Class,
            pattern: Pattern::OddP1,
            element: "(-I(n-1),I1)^+",
            params: nq,
            prime: |_| Some(2),
            conditions: vec![c("q = 3", |p| q_of(p) == 3)],
            requires: |p| if n_of(p) % 4 == 1 { Vec::new() } else { vec![&["r+", "SO"][..]] },
            kind: Exact,
            bound: Main,
            anchor: "O_n(3) on singular 1-spaces, reflection with plus-type (-1)-eigenspace",
            value: ff::v_odd_p1_r,
            spec: |p| Some(ElementSpec::reflection(nu(p)).with_eigenspace_type(Sign::Plus)),
        },
        ExceptionRecord {
            id: "tab:class/O/N1minus/rminus",
            table: Class,
            pattern: Pattern::OddN1Minus,
            element: "(-I(n-1),I1)^-",
            params: nq,
            prime: |_| Some(2),
            conditions: vec![c("q = 3", |p| q_of(p) == 3)],
            requires: |p| if n_of(p) % 4 == 3 { Vec::new() } else { vec![&["r-", "SO"][..]] },
            kind: Exact,
            bound: Main,
            anchor: "O_n(3) on nondegenerate 1-spaces with minus-type complement, reflection",
            value: ff::v_odd_n1_r,
            spec: |p| Some(ElementSpec::reflection(nu(p)).with_eigenspace_type(Sign::Minus)),
        },
        ExceptionRecord {
            id: "tab:class/Oeps/P1/b1",
            table: Class,
            pattern: Pattern::EvenP { m: 1 },
            element: "(J2,J1^(n-2))",
            params: nqe,
            prime: |_| Some(2),
            conditions: vec![c("q = 2", |p| q_of(p) == 2)],
            requires: |_| vec![&["b1", "O"][..]],
            kind: Exact,
            bound: Main,
            anchor: "O_n^eps(2) on singular 1-spaces, b1 involution",
            value: ff::v_even_p1_b1,
            spec: |p| Some(ElementSpec::transvection(nu(p), 2)),
        },
        ExceptionRecord {
            id: "tab:class/Oeps/P1/r",
            table: Class,
            pattern: Pattern::EvenP { m: 1 },
            element: "(-I(n-1),I1)",
            params: nqe,
            prime: |_| Some(2),
            conditions: vec![c("(q,eps) = (3,-)", |p| q_of(p) == 3 && eps_is(p, Sign::Minus))],
            requires: |_| vec![&["r"][..]],
            kind: Exact,
            bound: Main,
            anchor: "O_n^-(3) on singular 1-spaces, reflection",
            value: ff::v_even_p1_r,
            spec: |p| Some(ElementSpec::reflection(nu(p))),
        },
        ExceptionRecord {
            id: "tab:class/Oeps/P1/Lambda",
            table: Class,
            pattern: Pattern::EvenP { m: 1 },
            element: "(L,I(n-2))",
            params: nqe,
            prime: |_| Some(3),
            conditions: vec![c("(q,eps) = (2,-)", |p| q_of(p) == 2 && eps_is(p, Sign::Minus))],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "O_n^-(2) on singular 1-spaces, order 3 element with codimension 2 fixed space",
            value: ff::v_quarter_plus,
            spec: |p| Some(ElementSpec::irreducible(nu(p), 2, 3)),
        },
        ExceptionRecord {
            id: "tab:class/Oeps/P2/Lambda",
            table: Class,
            pattern: Pattern::EvenP { m: 2 },
            element: "(L,I6)",
            params: nqe,
            prime: |_| Some(5),
            conditions: vec![c("(n,q,eps) = (8,4,+)", |p| n_of(p) == 8 && q_of(p) == 4 && eps_is(p, Sign::Plus))],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "O_8^+(4) on totally singular 2-spaces, order 5 element",
            value: |_| constant(Rational::ratio(1, 5)),
            spec: |_| Some(ElementSpec::irreducible(8, 2, 5)),
        },
        ExceptionRecord {
            id: "tab:class/Oeps/N1/r_nsq",
            table: Class,
            pattern: Pattern::EvenN1,
            element: "(-I(n-1),I1)^nsq",
            params: nqe,
            prime: |_| Some(2),
            conditions: vec![c("(q,eps) = (3,+)", |p| q_of(p) == 3 && eps_is(p, Sign::Plus))],
            requires: |_| vec![&["r_nsq"][..]],
            kind: Exact,
            bound: Main,
            anchor: "O_n^+(3) on square 1-spaces, reflection with nonsquare fixed line",
            value: ff::v_even_n1_rnsq,
            spec: |p| Some(ElementSpec::reflection(nu(p)).with_discriminant(Discriminant::Nonsquare)),
        },
        ExceptionRecord {
            id: "tab:class/Oeps/N1/r_sq",
            table: Class,
            pattern: Pattern::EvenN1,
            element: "(-I(n-1),I1)^sq",
            params: nqe,
            prime: |_| Some(2),
            conditions: vec![c("(q,eps) = (3,-)", |p| q_of(p) == 3 && eps_is(p, Sign::Minus))],
            requires: |_| vec![&["r_sq"][..]],
            kind: Exact,
            bound: Main,
            anchor: "O_n^-(3) on square 1-spaces, reflection with square fixed line",
            value: ff::v_even_n1_rsq,
            spec: |p| Some(ElementSpec::reflection(nu(p)).with_discriminant(Discriminant::Square)),
        },
        ExceptionRecord {
            id: "tab:class/Oeps/N1/b1",
            table: Class,
            pattern: Pattern::EvenN1,
            element: "(J2,J1^(n-2))",
            params: nqe,
            prime: |_| Some(2),
            conditions: vec![c("q = 2", |p| q_of(p) == 2)],
            requires: |_| vec![&["b1", "O"][..]],
            kind: Exact,
            bound: Main,
            anchor: "O_n^eps(2) on nonsingular 1-spaces, b1 involution",
            value: ff::v_even_n1_b1,
            spec: |p| Some(ElementSpec::transvection(nu(p), 2)),
        },
        ExceptionRecord {
            id: "tab:class/Oeps/N1/Lambda",
            table: Class,
            pattern: Pattern::EvenN1,
            element: "(L,I(n-2))",
            params: nqe,
            prime: |_| Some(3),
            conditions: vec![c("(q,eps) = (2,+)", |p| q_of(p) == 2 && eps_is(p, Sign::Plus))],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "O_n^+(2) on nonsingular 1-spaces, order 3 element with codimension 2 fixed space",
            value: ff::v_quarter_minus,
            spec: |p| Some(ElementSpec::irreducible(nu(p), 2, 3)),
        },
        // Subspace actions with fpr > 1/r.
        ExceptionRecord {
            id: "tab:subb2/L2/P1/torus",
            table: Subb2,
            pattern: Pattern::Linear { m: 1 },
            element: "(w,w^-1)",
            params: nq,
            prime: |p| p.q.map(|q| q - 1),
            conditions: vec![c("n = 2", |p| n_of(p) == 2), c("q ≥ 8 with q − 1 prime", |p| q_of(p) >= 8 && is_prime(q_of(p) as u64 - 1))],
            requires: none,
            kind: Exact,
            bound: OneOverR,
            anchor: "L2(q) on the projective line, split torus of prime order q-1",
            value: ff::v_l2_torus,
            spec: |p| Some(ElementSpec::scalar(2, 1, q_of(p) as u64 - 1)),
        },
        ExceptionRecord {
            id: "tab:subb2/U4/P2/tau",
            table: Subb2,
            pattern: Pattern::Unitary(UnitaryAction::P(2)),
            element: "tau",
            params: nq,
            prime: |_| Some(2),
            conditions: vec![c("(n,q) = (4,2)", |p| n_of(p) == 4 && q_of(p) == 2)],
            requires: |_| vec![&["tau"][..]],
            kind: Exact,
            bound: OneOverR,
            anchor: "U4(2).2 on totally singular 2-spaces, graph automorphism",
            value: |_| constant(Rational::ratio(5, 9)),
            spec: |_| Some(ElementSpec::automorphism(Automorphism::Graph, 2)),
        },
        ExceptionRecord {
            id: "tab:subb2/Sp/Ominus/b1",
            table: Subb2,
            pattern: Pattern::SpOEps { eps: Some(Sign::Minus) },
            element: "(J2,J1^(n-2))",
            params: nq,
            prime: |_| Some(2),
            conditions: vec![c("n ≥ 6", |p| n_of(p) >= 6), c("q = 2", |p| q_of(p) == 2)],
            requires: none,
            kind: Exact,
            bound: OneOverR,
            anchor: "Sp_n(2) on cosets of O_n^-(2), transvection",
            value: ff::v_half_minus,
            spec: |p| Some(ElementSpec::transvection(nu(p), 2)),
        },
        ExceptionRecord {
            id: "tab:subb2/Sp/Ominus/Lambda",
            table: Subb2,
            pattern: Pattern::SpOEps { eps: Some(Sign::Minus) },
            element: "(L,I(n-2))",
            params: nq,
            prime: |_| Some(3),
            conditions: vec![c("n = 6", |p| n_of(p) == 6), c("q = 2", |p| q_of(p) == 2)],
            requires: none,
            kind: Exact,
            bound: OneOverR,
            anchor: "Sp6(2) on cosets of O6^-(2), order 3 element",
            value: |_| constant(Rational::ratio(5, 14)),
            spec: |p| Some(ElementSpec::irreducible(nu(p), 2, 3)),
        },
        ExceptionRecord {
            id: "tab:subb2/Ominus/P1/b1",
            table: Subb2,
            pattern: Pattern::EvenP { m: 1 },
            element: "(J2,J1^(n-2))",
            params: nqe,
            prime: |_| Some(2),
            conditions: vec![c("(q,eps) = (2,-)", |p| q_of(p) == 2 && eps_is(p, Sign::Minus))],
            requires: |_| vec![&["b1", "O"][..]],
            kind: Exact,
            bound: OneOverR,
            anchor: "O_n^-(2) on singular 1-spaces, b1 involution",
            value: ff::v_half_plus,
            spec: |p| Some(ElementSpec::transvection(nu(p), 2)),
        },
        ExceptionRecord {
            id: "tab:subb2/Oplus/N1/b1",
            table: Subb2,
            pattern: Pattern::EvenN1,
            element: "(J2,J1^(n-2))",
            params: nqe,
            prime: |_| Some(2),
            conditions: vec![c("(q,eps) = (2,+)", |p| q_of(p) == 2 && eps_is(p, Sign::Plus))],
            requires: |_| vec![&["b1", "O"][..]],
            kind: Exact,
            bound: OneOverR,
            anchor: "O_n^+(2) on nonsingular 1-spaces, b1 involution",
            value: ff::v_half_minus,
            spec: |p| Some(ElementSpec::transvection(nu(p), 2)),
        },
        // Socle A6.
        ExceptionRecord {
            id: "tab:a6/A6/A5prim/33",
            table: A6,
            pattern: Pattern::A6Catalog { name: "A5prim", alt: true, label: None },
            element: "(3^2)",
            params: &[],
            prime: |_| Some(3),
            conditions: vec![],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "A6 on cosets of a primitive A5",
            value: |_| constant(Rational::ratio(1, 2)),
            spec: no_spec,
        },
        ExceptionRecord {
            id: "tab:a6/S6/S5prim/23",
            table: A6,
            pattern: Pattern::A6Catalog { name: "S5prim", alt: false, label: None },
            element: "(2^3)",
            params: &[],
            prime: |_| Some(2),
            conditions: vec![],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "S6 on cosets of a primitive S5, fixed-point-free involution",
            value: |_| constant(Rational::ratio(2, 3)),
            spec: no_spec,
        },
        ExceptionRecord {
            id: "tab:a6/S6/S5prim/33",
            table: A6,
            pattern: Pattern::A6Catalog { name: "S5prim", alt: false, label: None },
            element: "(3^2)",
            params: &[],
            prime: |_| Some(3),
            conditions: vec![],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "S6 on cosets of a primitive S5, product of two 3-cycles",
            value: |_| constant(Rational::ratio(1, 2)),
            spec: no_spec,
        },
        ExceptionRecord {
            id: "tab:a6/S6/S2wrS3/2",
            table: A6,
            pattern: Pattern::A6Catalog { name: "S2wrS3", alt: false, label: None },
            element: "(2,1^4)",
            params: &[],
            prime: |_| Some(2),
            conditions: vec![],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "S6 on cosets of S2 wr S3, transposition",
            value: |_| constant(Rational::ratio(7, 15)),
            spec: no_spec,
        },
        ExceptionRecord {
            id: "tab:a6/A6.2^2/S3wrS2.2/2",
            table: A6,
            pattern: Pattern::A6Catalog { name: "(S3wrS2).2", alt: true, label: Some("2^2") },
            element: "(2,1^4)",
            params: &[],
            prime: |_| Some(2),
            conditions: vec![],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "A6.2^2 on 10 points, transposition of S6",
            value: |_| constant(Rational::ratio(2, 5)),
            spec: no_spec,
        },
        // Non-classical exceptions.
        ExceptionRecord {
            id: "thm1/subsets",
            table: Thm,
            pattern: Pattern::Subsets,
            element: "r-cycle (double transposition for A_n, r = 2)",
            params: &["n", "l", "r", "alt"],
            prime: r_of,
            conditions: vec![c("1 ≤ ℓ < n/2", |p| p.l.unwrap_or(0) >= 1 && 2 * p.l.unwrap_or(0) < n_of(p)), c("r prime, r ≤ n", |p| {
                p.r.is_some_and(|r| r >= 2 && is_prime(r as u64) && r <= n_of(p))
            })],
            requires: none,
            kind: FamilyMax,
            bound: Main,
            anchor: "S_n or A_n on l-subsets",
            value: |p| ff::fpr_subset_max(n_of(p), p.l()?, p.r()?, p.alt.unwrap_or(false)),
            spec: no_spec,
        },
        ExceptionRecord {
            id: "thm1/partitions",
            table: Thm,
            pattern: Pattern::Partitions,
            element: "transposition",
            params: &["n"],
            prime: |_| Some(2),
            conditions: vec![c("n even, n ≥ 6", |p| n_of(p) >= 6 && n_of(p) % 2 == 0), c("G = S_n", |p| p.alt != Some(true))],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "S_n on partitions into two halves, transposition",
            value: |p| ff::fpr_partition_transposition(p.n()?),
            spec: no_spec,
        },
        ExceptionRecord {
            id: "thm1/m22.2",
            table: Thm,
            pattern: Pattern::M22,
            element: "2B",
            params: &[],
            prime: |_| Some(2),
            conditions: vec![],
            requires: none,
            kind: Exact,
            bound: Main,
            anchor: "M22:2 on 22 points, involution fixing 8 points",
            value: |_| constant(Rational::ratio(4, 11)),
            spec: no_spec,
        },
        ExceptionRecord {
            id: "thm1/affine",
            table: Thm,
            pattern: Pattern::Affine,
            element: "transvection",
            params: &["p", "d"],
            prime: |p| p.p,
            conditions: vec![c("d ≥ 2", |p| p.d.unwrap_or(0) >= 2)],
            requires: |_| vec![&["transvection"][..]],
            kind: Exact,
            bound: Main,
            anchor: "affine group whose point stabilizer contains a transvection",
            value: |p| ff::fpr_affine(p.p()?, p.d()?, p.d()? - 1),
            spec: no_spec,
        },
        ExceptionRecord {
            id: "thm1/product",
            table: Thm,
            pattern: Pattern::Product,
            element: "(x1,1,...,1)",
            params: &["values"],
            prime: r_of,
            conditions: vec![],
            requires: none,
            kind: FamilyMax,
            bound: Main,
            anchor: "product action, one nontrivial coordinate",
            value: |p| Ok(ff::fpr_product(&p.values)),
            spec: no_spec,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_checksum() {
        let recs = exception_records();
        assert_eq!(recs.len(), 36);
        let count = |t| recs.iter().filter(|r| r.table == t).count();
        assert_eq!(count(TableId::Class), 20);
        assert_eq!(count(TableId::Subb2), 6);
        assert_eq!(count(TableId::A6), 5);
        assert_eq!(count(TableId::Thm), 5);
        let mut ids: Vec<_> = recs.iter().map(|r| r.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 36);
    }

    #[test]
    fn action_strings_round_trip() {
        for s in ["subsets:2", "partitions", "P1", "P3", "Ppair:1", "N:1:-", "N:2", "N1ns", "Oeps:-", "natural", "catalog:S5prim", "product:subsets:1"] {
            let a: ActionSpec = s.parse().unwrap();
            assert_eq!(a.to_string(), s);
        }
        assert_eq!("N1-".parse::<ActionSpec>().unwrap(), ActionSpec::N { m: 1, eta: Some(Sign::Minus) });
        assert!("bogus".parse::<ActionSpec>().is_err());
    }

    #[test]
    fn validate_examples() {
        let u = GroupSpec::new(Family::Unitary { n: 4, q: 2 });
        assert!(validate(&u, &ActionSpec::P { m: 2 }).is_empty());
        let l = GroupSpec::new(Family::Linear { n: 2, q: 5 });
        assert_eq!(validate(&l, &ActionSpec::P { m: 2 }), vec!["m ≤ n/2 fails".to_string()]);
        let o = GroupSpec::new(Family::OrthogonalEven { n: 7, q: 2, eps: Sign::Plus });
        assert!(validate_group(&o).contains(&"n ≥ 8 even".to_string()));
    }

    #[test]
    fn group_json_round_trip() {
        let g = GroupSpec::new(Family::Product { component: Box::new(GroupSpec::sym(5)), k: 2 });
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<GroupSpec>(&s).unwrap(), g);
        let h: GroupSpec = serde_json::from_str(r#"{"family":"Sp","n":6,"q":2}"#).unwrap();
        assert_eq!(h.family, Family::Symplectic { n: 6, q: 2 });
    }

    #[test]
    fn records_reference_valid_elements() {
        for (n, q) in [(8u32, 2u64), (8, 3), (10, 2)] {
            for rec in exception_records() {
                let p = Params { n: Some(n as i64), q: Some(q as i64), eps: Some(Sign::Minus), ..Default::default() };
                if let Some(spec) = (rec.spec)(&p) {
                    if spec.automorphism.is_none() && rec.conditions_hold(&p).is_ok() && matches!(rec.pattern, Pattern::EvenP { .. } | Pattern::EvenN1) {
                        let (pp, _) = prime_power(q).unwrap();
                        assert!(spec.validate(n as usize, pp).is_empty(), "{}", rec.id);
                    }
                }
            }
        }
    }
}
