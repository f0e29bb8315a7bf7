//! Threshold tests, exception lookup, minimal degree and minimal index.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exact_math::{binomial, ipow, is_prime, Rational};
use crate::fpr_formulas::{action_degree, Params};
use crate::gf_linear::Sign;
use crate::model::{exception_records, validate, ActionSpec, Bound, ExceptionRecord, Family, GroupSpec, RecordKind, TableId};

/// Which bound an fpr is compared against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// 1/(r+1).
    Main,
    /// 1/√(r+1), compared as fpr² against 1/(r+1).
    Sqrt,
    /// 1/r.
    OneOverR,
}

fn check_prime(r: i64) -> Result<()> {
    if r < 2 || !is_prime(r as u64) {
        return Err(invalid(format!("r = {r} is not prime")));
    }
    Ok(())
}

/// The rational threshold; for Sqrt this is the bound on fpr².
pub fn threshold(r: i64, kind: BoundKind) -> Result<Rational> {
    check_prime(r)?;
    Ok(match kind {
        BoundKind::Main | BoundKind::Sqrt => Rational::ratio(1, r + 1),
        BoundKind::OneOverR => Rational::ratio(1, r),
    })
}

/// True when fpr lies strictly above the bound.
pub fn exceeds(fpr: &Rational, r: i64, kind: BoundKind) -> Result<bool> {
    let t = threshold(r, kind)?;
    Ok(match kind {
        BoundKind::Sqrt => fpr.square() > t,
        _ => *fpr > t,
    })
}

/// Rewrite permutation-isomorphic coincidences into the form the tables use.
pub fn canonicalize(g: &GroupSpec, a: &ActionSpec) -> (GroupSpec, ActionSpec) {
    let plain = g.extension.is_empty();
    let out = match (&g.family, a) {
        (Family::SymAlt { n: 8, alt: true }, ActionSpec::Catalog { name }) if name == "AGL3(2)" => {
            Some((GroupSpec::new(Family::Linear { n: 4, q: 2 }), ActionSpec::P { m: 1 }))
        }
        (Family::Symplectic { n: 4, q: 2 }, ActionSpec::OEpsilon { eps: Sign::Plus }) => Some((GroupSpec::sym(6), ActionSpec::Partitions)),
        (Family::Symplectic { n: 4, q: 2 }, ActionSpec::OEpsilon { eps: Sign::Minus }) => Some((GroupSpec::sym(6), ActionSpec::Subsets { l: 1 })),
        (Family::Symplectic { n: 4, q: 2 }, ActionSpec::P { m: 2 }) => Some((GroupSpec::sym(6), ActionSpec::Subsets { l: 2 })),
        (Family::Linear { n: 2, q: 4 }, ActionSpec::P { m: 1 }) if plain => Some((GroupSpec::alt(5), ActionSpec::Subsets { l: 1 })),
        (Family::Linear { n: 2, q: 9 }, ActionSpec::P { m: 1 }) if plain => Some((GroupSpec::alt(6), ActionSpec::Partitions)),
        (Family::Linear { n: 2, q: 9 }, ActionSpec::P { m: 1 }) if g.has("2^2") => {
            Some((GroupSpec::alt(6).with("2^2"), ActionSpec::Catalog { name: "(S3wrS2).2".into() }))
        }
        _ => None,
    };
    out.unwrap_or_else(|| (g.clone(), a.clone()))
}

/// The A6 coincidences: the twisted degree-6 and degree-15 actions are the
/// subset actions up to permutation isomorphism.
fn a6_as_subsets(g: &GroupSpec, a: &ActionSpec) -> Option<(GroupSpec, ActionSpec)> {
    match (&g.family, a) {
        (Family::SymAlt { n: 6, .. }, ActionSpec::Catalog { name }) if g.extension.is_empty() => match name.as_str() {
            "A5prim" | "S5prim" => Some((g.clone(), ActionSpec::Subsets { l: 1 })),
            "S2wrS3" => Some((g.clone(), ActionSpec::Subsets { l: 2 })),
            _ => None,
        },
        _ => None,
    }
}

/// One matching table row with its exact value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionHit {
    pub id: String,
    pub element: String,
    pub kind: RecordKind,
    pub value: Rational,
    pub params: Params,
}

fn hit(rec: &ExceptionRecord, p: Params, value: Rational) -> ExceptionHit {
    ExceptionHit { id: rec.id.to_string(), element: rec.element.to_string(), kind: rec.kind, value, params: p }
}

fn in_scope(rec: &ExceptionRecord, kind: BoundKind) -> bool {
    match kind {
        BoundKind::Main => rec.bound == Bound::Main,
        BoundKind::OneOverR => rec.table == TableId::Subb2 || rec.id == "thm1/subsets",
        BoundKind::Sqrt => rec.id == "thm1/subsets" || rec.id == "thm1/product",
    }
}

/// Rows matching (g, a, r) whose value exceeds 1/(r+1).
pub fn exceptions_for(g: &GroupSpec, a: &ActionSpec, r: i64) -> Result<Vec<ExceptionHit>> {
    exceptions_for_bound(g, a, r, BoundKind::Main)
}

pub fn exceptions_for_bound(g: &GroupSpec, a: &ActionSpec, r: i64, kind: BoundKind) -> Result<Vec<ExceptionHit>> {
    check_prime(r)?;
    let v = validate(g, a);
    if !v.is_empty() {
        return Err(Error::InvalidSpec(v.join("; ")));
    }
    let (g, a) = canonicalize(g, a);
    let (g, a) = match kind {
        BoundKind::Main => (g, a),
        _ => a6_as_subsets(&g, &a).unwrap_or((g, a)),
    };
    let mut out = Vec::new();
    for rec in exception_records().iter().filter(|rec| in_scope(rec, kind)) {
        let Some(mut p) = rec.instantiate(&g, &a, r) else { continue };
        if rec.conditions_hold(&p).is_err() || rec.missing_labels(&g, &p).is_some() {
            continue;
        }
        if let (Family::Product { component, .. }, ActionSpec::ProductOf { component: ca }) = (&g.family, &a) {
            let inner = exceptions_for_bound(component, ca, r, kind)?;
            let Some(best) = inner.iter().map(|h| h.value.clone()).max() else { continue };
            p.values = vec![best];
        }
        let value = (rec.value)(&p)?;
        if exceeds(&value, r, kind)? {
            out.push(hit(rec, p, value));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    NoException,
    Exceptions { ids: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub group: GroupSpec,
    pub action: ActionSpec,
    pub prime: i64,
    pub bound: BoundKind,
    pub threshold: Rational,
    pub exceptions: Vec<ExceptionHit>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

pub fn classify(g: &GroupSpec, a: &ActionSpec, r: i64, kind: BoundKind) -> Result<ClassificationReport> {
    let exceptions = exceptions_for_bound(g, a, r, kind)?;
    let verdict = if exceptions.is_empty() {
        Verdict::NoException
    } else {
        Verdict::Exceptions { ids: exceptions.iter().map(|h| h.id.clone()).collect() }
    };
    Ok(ClassificationReport { group: g.clone(), action: a.clone(), prime: r, bound: kind, threshold: threshold(r, kind)?, exceptions, verdict })
}

/// Result of a minimal degree or minimal index lookup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IndexValue {
    Exact {
        #[serde(with = "crate::exact_math::big_str")]
        value: BigUint,
        #[serde(with = "crate::exact_math::big_str::opt")]
        degree: Option<BigUint>,
        source: String,
    },
    /// Only the general guarantee μ ≥ bound is known.
    ThresholdOnly {
        #[serde(with = "crate::exact_math::big_str::opt")]
        degree: Option<BigUint>,
        bound: Option<Rational>,
    },
    /// Only lower ≤ Ind ≤ upper is known.
    RangeOnly {
        #[serde(with = "crate::exact_math::big_str::opt")]
        degree: Option<BigUint>,
        lower: Option<Rational>,
        upper: Option<Rational>,
    },
}

impl IndexValue {
    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            IndexValue::Exact { value, .. } => Some(value),
            _ => None,
        }
    }
}

fn big(v: BigInt) -> Result<BigUint> {
    v.to_biguint().ok_or_else(|| invalid("negative value"))
}

fn sub_fixed_max(n: i64, l: i64, alt: bool) -> Result<Rational> {
    let mut best = Rational::zero();
    for r in (2..=n).filter(|&r| is_prime(r as u64)) {
        let v = crate::fpr_formulas::fpr_subset_max(n, l, r, alt)?;
        best = best.max(v);
    }
    Ok(best)
}

fn exact(value: BigUint, degree: &BigUint, source: &str) -> IndexValue {
    IndexValue::Exact { value, degree: Some(degree.clone()), source: source.to_string() }
}

/// μ(G) when (G, Ω) is one of the classified small-μ cases.
pub fn minimal_degree_formula(g: &GroupSpec, a: &ActionSpec) -> Result<IndexValue> {
    let v = validate(g, a);
    if !v.is_empty() {
        return Err(Error::InvalidSpec(v.join("; ")));
    }
    let (g, a) = canonicalize(g, a);
    let (g, a) = a6_as_subsets(&g, &a).unwrap_or((g, a));
    let m = action_degree(&g, &a).ok();
    let fallback = |m: Option<BigUint>| IndexValue::ThresholdOnly { bound: m.as_ref().map(|m| Rational::from(m) * Rational::ratio(2, 3)), degree: m };
    let Some(m) = m else { return Ok(fallback(None)) };
    let two = |e: i64| ipow(2, e as u32);
    let three = |e: i64| ipow(3, e as u32);
    let res = match (&g.family, &a) {
        (Family::SymAlt { n, alt }, ActionSpec::Subsets { l }) => {
            let f = sub_fixed_max(*n as i64, *l as i64, *alt)?;
            let moved = (Rational::one() - f) * Rational::from(&m);
            Some(exact(big(moved.to_integer().ok_or_else(|| invalid("non-integral degree"))?)?, &m, "subset action"))
        }
        (Family::SymAlt { n, alt: false }, ActionSpec::Partitions) if *n >= 6 => {
            let n = *n as i64;
            let v = (Rational::ratio(1, 4) * (Rational::one() + Rational::ratio(1, n - 1))) * Rational::from(binomial(n, n / 2));
            Some(exact(big(v.to_integer().ok_or_else(|| invalid("non-integral value"))?)?, &m, "partition action"))
        }
        (Family::Sporadic { name }, ActionSpec::Catalog { name: act }) if name == "M22:2" && act == "L3(4).2_2" => {
            Some(exact(BigUint::from(14u32), &m, "M22:2 on 22 points"))
        }
        (Family::Linear { n, q: 2 }, ActionSpec::P { m: 1 }) if *n >= 3 => Some(exact(big(two(*n as i64 - 1))?, &m, "L_n(2) on 1-spaces")),
        (Family::Linear { n, q: 3 }, ActionSpec::P { m: 1 }) if *n >= 3 && (n % 2 == 1 || g.has("r") || g.has("delta")) => {
            Some(exact(big(three(*n as i64 - 1) - 1)?, &m, "L_n(3) on 1-spaces with a reflection"))
        }
        (Family::Unitary { n: 4, q }, ActionSpec::P { m: 2 }) if matches!(q, 2 | 3) && g.has("tau") => {
            let q = *q as i64;
            Some(exact(big(BigInt::from(q * q * (q * q - 1)))?, &m, "U4(q) on totally singular 2-spaces with tau"))
        }
        (Family::Symplectic { n, q: 2 }, ActionSpec::P { m: 1 }) if *n >= 6 => Some(exact(big(two(*n as i64 - 1))?, &m, "Sp_n(2) on 1-spaces")),
        (Family::Symplectic { n, q: 2 }, ActionSpec::OEpsilon { eps }) if *n >= 6 => {
            let h = *n as i64 / 2;
            Some(exact(big(two(h - 1) * (two(h - 1) + eps.as_i64()))?, &m, "Sp_n(2) on cosets of O_n^eps(2)"))
        }
        (Family::OrthogonalOdd { n, q: 3 }, ActionSpec::P { m: 1 }) if n % 4 == 1 || g.has("r+") || g.has("SO") => {
            let n = *n as i64;
            Some(exact(big(three((n - 3) / 2) * (three((n - 1) / 2) - 1))?, &m, "O_n(3) on singular 1-spaces"))
        }
        (Family::OrthogonalOdd { n, q: 3 }, ActionSpec::N { m: 1, eta: Some(Sign::Minus) }) if n % 4 == 3 || g.has("r-") || g.has("SO") => {
            let n = *n as i64;
            Some(exact(big(three(n - 2) - three((n - 3) / 2) * 2 - 1)?, &m, "O_n(3) on minus-type nondegenerate 1-spaces"))
        }
        (Family::OrthogonalEven { n, q: 2, eps }, ActionSpec::P { m: 1 }) if g.has("b1") || g.has("O") => {
            let h = *n as i64 / 2;
            Some(exact(big(two(h - 1) * (two(h - 1) + eps.as_i64()))?, &m, "O_n^eps(2) on singular 1-spaces"))
        }
        (Family::OrthogonalEven { n, q: 3, eps: Sign::Minus }, ActionSpec::P { m: 1 }) if g.has("r") => {
            let h = *n as i64 / 2;
            Some(exact(big(three(h - 1) * (three(h - 1) - 1))?, &m, "O_n^-(3) on singular 1-spaces with a reflection"))
        }
        (Family::OrthogonalEven { n, q: 2, eps }, ActionSpec::N1Nonsingular) if g.has("b1") || g.has("O") => {
            let h = *n as i64 / 2;
            Some(exact(big(two(h - 1) * (two(h - 1) - eps.as_i64()))?, &m, "O_n^eps(2) on nonsingular 1-spaces"))
        }
        (Family::OrthogonalEven { n, q: 3, eps: Sign::Plus }, ActionSpec::N { m: 1, .. }) if g.has("r_nsq") => {
            let h = *n as i64 / 2;
            Some(exact(big(three(h - 1) * (three(h - 1) - 1))?, &m, "O_n^+(3) on square 1-spaces"))
        }
        (Family::OrthogonalEven { n, q: 3, eps: Sign::Minus }, ActionSpec::N { m: 1, .. }) if g.has("r_sq") => {
            Some(exact(big(three(*n as i64 - 2) - 1)?, &m, "O_n^-(3) on square 1-spaces"))
        }
        (Family::Affine { p: 2, d, .. }, ActionSpec::NaturalPoints) if g.has("transvection") => {
            Some(exact(big(two(*d as i64 - 1))?, &m, "affine group over GF(2) with a transvection"))
        }
        (Family::Product { component, k }, ActionSpec::ProductOf { component: ca }) => match minimal_degree_formula(component, ca)? {
            IndexValue::Exact { value, degree: Some(gm), .. } => Some(exact(value * gm.pow(k - 1), &m, "product action")),
            _ => None,
        },
        _ => None,
    };
    Ok(res.unwrap_or_else(|| fallback(Some(m))))
}

/// Ind(G) for S_n or A_n on ℓ-subsets.
pub fn minimal_index_subset(n: i64, l: i64, alt: bool) -> Result<BigUint> {
    if n < 5 || l < 1 || 2 * l >= n {
        return Err(invalid("needs n ≥ 5 and 1 ≤ ℓ < n/2"));
    }
    if !alt {
        return Ok(binomial(n - 2, l - 1));
    }
    let total = BigInt::from(binomial(n, l));
    let fixed = BigInt::from(binomial(n - 4, l)) + BigInt::from(binomial(n - 4, l - 2)) * 2 + BigInt::from(binomial(n - 4, l - 4));
    big((total - fixed) / 2)
}

/// Ind(G) for the classified small-index cases, else the general range.
pub fn minimal_index_formula(g: &GroupSpec, a: &ActionSpec) -> Result<IndexValue> {
    let v = validate(g, a);
    if !v.is_empty() {
        return Err(Error::InvalidSpec(v.join("; ")));
    }
    if g.has("odd-order") {
        return Err(invalid("group of odd order; use odd_order_index_bounds"));
    }
    let (g, a) = canonicalize(g, a);
    let (g, a) = a6_as_subsets(&g, &a).unwrap_or((g, a));
    let m = action_degree(&g, &a).ok();
    let range = |m: Option<BigUint>| IndexValue::RangeOnly {
        lower: m.as_ref().map(|m| Rational::from(m) * Rational::ratio(1, 4)),
        upper: m.as_ref().map(|m| Rational::from(m) * Rational::ratio(1, 2)),
        degree: m,
    };
    let Some(m) = m else { return Ok(range(None)) };
    let table = |h: i64| -> Result<BigUint> { big(ipow(2, (h - 2) as u32) * (ipow(2, (h - 1) as u32) - 1)) };
    let res = match (&g.family, &a) {
        (Family::SymAlt { n, alt }, ActionSpec::Subsets { l }) if *n >= 5 => Some(exact(minimal_index_subset(*n as i64, *l as i64, *alt)?, &m, "subset action")),
        (Family::Unitary { n: 4, q: 2 }, ActionSpec::P { m: 2 }) if g.has("tau") => Some(exact(BigUint::from(6u32), &m, "U4(2).2 on totally singular 2-spaces")),
        (Family::Symplectic { n, q: 2 }, ActionSpec::OEpsilon { eps: Sign::Minus }) if *n >= 6 => Some(exact(table(*n as i64 / 2)?, &m, "Sp_n(2) on cosets of O_n^-(2)")),
        (Family::OrthogonalEven { n, q: 2, eps: Sign::Minus }, ActionSpec::P { m: 1 }) if g.has("b1") || g.has("O") => {
            Some(exact(table(*n as i64 / 2)?, &m, "O_n^-(2) on singular 1-spaces"))
        }
        (Family::OrthogonalEven { n, q: 2, eps: Sign::Plus }, ActionSpec::N1Nonsingular) if g.has("b1") || g.has("O") => {
            Some(exact(table(*n as i64 / 2)?, &m, "O_n^+(2) on nonsingular 1-spaces"))
        }
        (Family::Linear { n: 2, q: 8 }, ActionSpec::P { m: 1 }) if g.has("phi") => Some(exact(BigUint::from(4u32), &m, "L2(8):3 on 9 points")),
        (Family::Product { component, k }, ActionSpec::ProductOf { component: ca }) => match minimal_index_formula(component, ca)? {
            IndexValue::Exact { value, degree: Some(gm), .. } => Some(exact(value * gm.pow(k - 1), &m, "product action")),
            _ => None,
        },
        _ => None,
    };
    Ok(res.unwrap_or_else(|| range(Some(m))))
}

/// ind(x) = m(1 − (1/|x|) Σ_{y ∈ ⟨x⟩} fpr(y)).
pub fn ind_from_fpr_profile(m: u64, order: u64, fprs: &[Rational]) -> Result<Rational> {
    if order == 0 || fprs.len() as u64 != order {
        return Err(invalid("profile length must equal the element order"));
    }
    let sum = fprs.iter().fold(Rational::zero(), |acc, f| acc + f);
    Ok(Rational::from(m) * (Rational::one() - sum * Rational::ratio(1, order as i64)))
}

/// Bounds on Ind(G) for an affine group of odd order and degree m = p^d.
pub fn odd_order_index_bounds(p: u64, d: u32, r: u64, m: u64) -> Result<(Rational, Rational)> {
    if p == 2 || !is_prime(p) {
        return Err(invalid("p must be an odd prime"));
    }
    if !is_prime(r) || r % 2 == 0 {
        return Err(invalid("r must be an odd prime"));
    }
    if BigUint::from(p).pow(d) != BigUint::from(m) {
        return Err(invalid("m must equal p^d"));
    }
    let mr = Rational::from(m);
    let (p, r) = (p as i64, r as i64);
    let a = &mr * (Rational::one() - Rational::ratio(3, 2 * r + 1));
    let b = &mr * (Rational::one() - Rational::ratio(1, p)).square();
    let upper = &mr * (Rational::one() - Rational::ratio(1, r));
    Ok((a.min(b), upper))
}

/// Convenience for callers holding a u64 degree.
pub fn to_u64(v: &BigUint) -> Option<u64> {
    v.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::ratio(a, b)
    }

    #[test]
    fn thresholds() {
        assert_eq!(threshold(2, BoundKind::Main).unwrap(), r(1, 3));
        assert_eq!(threshold(3, BoundKind::OneOverR).unwrap(), r(1, 3));
        assert!(!exceeds(&r(7, 15), 2, BoundKind::Sqrt).unwrap());
        assert!(threshold(4, BoundKind::Main).is_err());
    }

    #[test]
    fn lookup_examples() {
        let s6 = GroupSpec::sym(6);
        let hits = exceptions_for(&s6, &ActionSpec::Partitions, 2).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].value, r(2, 5));
        let m22 = GroupSpec::new(Family::Sporadic { name: "M22:2".into() });
        let hits = exceptions_for(&m22, &ActionSpec::Catalog { name: "L3(4).2_2".into() }, 2).unwrap();
        assert_eq!(hits[0].value, r(4, 11));
        let sp6 = GroupSpec::new(Family::Symplectic { n: 6, q: 2 });
        assert!(exceptions_for(&sp6, &ActionSpec::P { m: 1 }, 5).unwrap().is_empty());
        let hits = exceptions_for(&sp6, &ActionSpec::OEpsilon { eps: Sign::Minus }, 2).unwrap();
        assert_eq!(hits.iter().map(|h| h.id.as_str()).collect::<Vec<_>>(), vec!["tab:class/Sp/Oeps/b1"]);
        let s10 = GroupSpec::sym(10);
        assert_eq!(exceptions_for(&s10, &ActionSpec::Subsets { l: 2 }, 3).unwrap().len(), 1);
        let u5 = GroupSpec::new(Family::Unitary { n: 5, q: 3 });
        assert!(exceptions_for(&u5, &ActionSpec::P { m: 1 }, 5).unwrap().is_empty());
        let a8 = GroupSpec::alt(8);
        let hits = exceptions_for(&a8, &ActionSpec::Catalog { name: "AGL3(2)".into() }, 2).unwrap();
        assert_eq!(hits[0].value, r(7, 15));
    }

    #[test]
    fn label_requirements() {
        let u42 = GroupSpec::new(Family::Unitary { n: 4, q: 2 });
        let p2 = ActionSpec::P { m: 2 };
        assert!(exceptions_for(&u42, &p2, 2).unwrap().is_empty());
        assert_eq!(exceptions_for(&u42.clone().with("tau"), &p2, 2).unwrap()[0].value, r(5, 9));
        let l43 = GroupSpec::new(Family::Linear { n: 4, q: 3 });
        let p1 = ActionSpec::P { m: 1 };
        assert_eq!(exceptions_for(&l43, &p1, 2).unwrap().len(), 0);
        assert_eq!(exceptions_for(&l43.with("r"), &p1, 2).unwrap().len(), 1);
    }

    #[test]
    fn one_over_r_lookup() {
        let s6 = GroupSpec::sym(6);
        let hits = exceptions_for_bound(&s6, &ActionSpec::Catalog { name: "S5prim".into() }, 2, BoundKind::OneOverR).unwrap();
        assert_eq!(hits[0].value, r(2, 3));
        let sp6 = GroupSpec::new(Family::Symplectic { n: 6, q: 2 });
        let hits = exceptions_for_bound(&sp6, &ActionSpec::OEpsilon { eps: Sign::Minus }, 3, BoundKind::OneOverR).unwrap();
        assert_eq!(hits[0].value, r(5, 14));
    }

    #[test]
    fn minimal_degree_examples() {
        let l32 = GroupSpec::new(Family::Linear { n: 3, q: 2 });
        assert_eq!(minimal_degree_formula(&l32, &ActionSpec::P { m: 1 }).unwrap().exact().unwrap(), &BigUint::from(4u32));
        let m22 = GroupSpec::new(Family::Sporadic { name: "M22:2".into() });
        assert_eq!(minimal_degree_formula(&m22, &ActionSpec::Catalog { name: "L3(4).2_2".into() }).unwrap().exact().unwrap(), &BigUint::from(14u32));
        assert_eq!(minimal_degree_formula(&GroupSpec::sym(8), &ActionSpec::Partitions).unwrap().exact().unwrap(), &BigUint::from(20u32));
        let sp6 = GroupSpec::new(Family::Symplectic { n: 6, q: 2 });
        assert_eq!(minimal_degree_formula(&sp6, &ActionSpec::OEpsilon { eps: Sign::Minus }).unwrap().exact().unwrap(), &BigUint::from(12u32));
        let u53 = GroupSpec::new(Family::Unitary { n: 5, q: 3 });
        assert!(matches!(minimal_degree_formula(&u53, &ActionSpec::P { m: 1 }).unwrap(), IndexValue::ThresholdOnly { .. }));
    }

    #[test]
    fn minimal_index_examples() {
        assert_eq!(minimal_index_subset(6, 2, false).unwrap(), BigUint::from(4u32));
        assert_eq!(minimal_index_subset(5, 1, true).unwrap(), BigUint::from(2u32));
        assert_eq!(minimal_index_subset(7, 2, true).unwrap(), BigUint::from(8u32));
        let u = GroupSpec::new(Family::Unitary { n: 4, q: 2 }).with("tau");
        assert_eq!(minimal_index_formula(&u, &ActionSpec::P { m: 2 }).unwrap().exact().unwrap(), &BigUint::from(6u32));
        let sp6 = GroupSpec::new(Family::Symplectic { n: 6, q: 2 });
        assert_eq!(minimal_index_formula(&sp6, &ActionSpec::OEpsilon { eps: Sign::Minus }).unwrap().exact().unwrap(), &BigUint::from(6u32));
        let l28 = GroupSpec::new(Family::Linear { n: 2, q: 8 }).with("phi");
        assert_eq!(minimal_index_formula(&l28, &ActionSpec::P { m: 1 }).unwrap().exact().unwrap(), &BigUint::from(4u32));
    }

    #[test]
    fn profile_and_odd_bounds() {
        assert_eq!(ind_from_fpr_profile(15, 2, &[r(1, 1), r(7, 15)]).unwrap(), r(4, 1));
        assert_eq!(ind_from_fpr_profile(1, 1, &[r(1, 1)]).unwrap(), r(0, 1));
        assert_eq!(ind_from_fpr_profile(9, 3, &[r(1, 1), r(1, 3), r(1, 3)]).unwrap(), r(4, 1));
        assert_eq!(odd_order_index_bounds(3, 2, 3, 9).unwrap(), (r(4, 1), r(6, 1)));
        assert_eq!(odd_order_index_bounds(7, 1, 7, 7).unwrap(), (r(36, 7), r(6, 1)));
        assert_eq!(odd_order_index_bounds(5, 1, 5, 5).unwrap(), (r(16, 5), r(4, 1)));
        assert!(odd_order_index_bounds(2, 2, 3, 4).is_err());
    }
}
