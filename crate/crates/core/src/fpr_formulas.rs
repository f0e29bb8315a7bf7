//! Closed-form fixed point ratios and action degrees, evaluated exactly.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exact_math::{binomial, gaussian_binomial, ipow, is_prime, prime_power, Rational};
use crate::gf_linear::Sign;
use crate::model::{exception_records, ActionSpec, Family, GroupSpec};

/// Named numeric inputs of a formula. Absent fields are simply not used.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<Sign>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alt: Option<bool>,
    /// Element kind for the L₂(q) Borel formula: unipotent, torus or field_aut.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_order: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centralizer: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inversions: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<Rational>,
}

macro_rules! getter {
    ($($name:ident),*) => {$(
        pub fn $name(&self) -> Result<i64> {
            self.$name.ok_or_else(|| invalid(concat!("missing parameter `", stringify!($name), "`")))
        }
    )*};
}

impl Params {
    getter!(n, q, l, r, p, d, e, k, h, t_order, centralizer, inversions, gamma);

    pub fn eps(&self) -> Result<Sign> {
        self.eps.ok_or_else(|| invalid("missing parameter `eps`"))
    }

    pub fn nq(n: i64, q: i64) -> Self {
        Params { n: Some(n), q: Some(q), ..Default::default() }
    }

    pub fn nqe(n: i64, q: i64, eps: Sign) -> Self {
        Params { n: Some(n), q: Some(q), eps: Some(eps), ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaResult {
    pub value: Rational,
    pub formula_id: String,
    pub inputs: Params,
}

fn rat(a: i64, b: i64) -> Rational {
    Rational::ratio(a, b)
}

fn pw(b: i64, e: i64) -> Rational {
    assert!(e >= 0, "negative exponent");
    Rational::from(ipow(b, e as u32))
}

fn frac(num: Rational, den: Rational) -> Result<Rational> {
    num.checked_div(&den)
}

/// fpr of an r-cycle on ℓ-subsets of an n-set.
pub fn fpr_subset_rcycle(n: i64, l: i64, r: i64) -> Result<Rational> {
    if l < 1 || 2 * l >= n || !is_prime(r as u64) {
        return Err(invalid("needs 1 ≤ ℓ < n/2 and r prime"));
    }
    if r > n - l {
        return Ok(Rational::zero());
    }
    let mut a = Rational::one();
    let mut b = Rational::one();
    for i in 0..r {
        a = a * (Rational::one() - rat(l, n - i));
        b = b * (Rational::one() - rat(n - l, n - i));
    }
    Ok(if r <= l { a + b } else { a })
}

/// fpr of a double transposition on ℓ-subsets.
pub fn fpr_subset_double_transposition(n: i64, l: i64) -> Result<Rational> {
    if l < 1 || 2 * l >= n || n < 4 {
        return Err(invalid("needs n ≥ 4 and 1 ≤ ℓ < n/2"));
    }
    let fixed = binomial(n - 4, l) + binomial(n - 4, l - 2) * 2u32 + binomial(n - 4, l - 4);
    Ok(Rational::from(fixed) / Rational::from(binomial(n, l)))
}

/// Largest fpr of an order-r element of S_n or A_n on ℓ-subsets.
pub fn fpr_subset_max(n: i64, l: i64, r: i64, alt: bool) -> Result<Rational> {
    if alt && r == 2 {
        fpr_subset_double_transposition(n, l)
    } else {
        fpr_subset_rcycle(n, l, r)
    }
}

pub fn fpr_partition_transposition(n: i64) -> Result<Rational> {
    if n < 6 || n % 2 != 0 {
        return Err(invalid("needs n even, n ≥ 6"));
    }
    Ok(rat(1, 3) + rat(n - 4, 6 * (n - 1)))
}

pub fn fpr_affine(p: i64, d: i64, e: i64) -> Result<Rational> {
    if e < 0 || e >= d || !is_prime(p as u64) {
        return Err(invalid("needs p prime and 0 ≤ e < d"));
    }
    frac(Rational::one(), pw(p, d - e))
}

pub fn fpr_psl2_borel(q: i64, kind: &str, r: i64) -> Result<Rational> {
    if q < 7 || q == 9 || prime_power(q as u64).is_none() {
        return Err(invalid("needs a prime power q ≥ 7, q ≠ 9"));
    }
    match kind {
        "unipotent" => Ok(rat(1, q + 1)),
        "torus" => {
            if (q - 1) % r != 0 {
                return Err(invalid("torus elements need r | q − 1"));
            }
            Ok(rat(2, q + 1))
        }
        "field_aut" => {
            let (p, f) = prime_power(q as u64).unwrap();
            if f as i64 % r != 0 {
                return Err(invalid("field automorphisms need q = q₀^r"));
            }
            let q0 = ipow(p as i64, f / r as u32);
            Ok((Rational::from(q0) + Rational::one()) / rat(q + 1, 1))
        }
        other => Err(invalid(format!("unknown element kind `{other}`"))),
    }
}

pub fn fpr_product(values: &[Rational]) -> Rational {
    values.iter().fold(Rational::one(), |acc, v| acc * v)
}

pub fn fpr_product_pi_bound(gamma: i64, h: i64, r: i64) -> Result<Rational> {
    if h < 1 || gamma < 1 || r < 2 {
        return Err(invalid("needs h ≥ 1"));
    }
    frac(Rational::one(), pw(gamma, h * (r - 1)))
}

/// Diagonal type: case R₂ gives (c/|T|)^{k−1}; the r = k = 2 case gives inversions/|T|.
pub fn fpr_diagonal_r2(t_order: i64, centralizer: i64, k: i64) -> Result<Rational> {
    if t_order <= 0 || centralizer <= 0 || t_order % centralizer != 0 || k < 2 {
        return Err(invalid("centralizer order must divide |T| and k ≥ 2"));
    }
    rat(centralizer, t_order).pow((k - 1) as i32)
}

pub fn fpr_diagonal_inversions(t_order: i64, inversions: i64) -> Result<Rational> {
    if t_order <= 0 || inversions < 1 || inversions > t_order {
        return Err(invalid("inversion count must lie in [1, |T|]"));
    }
    Ok(rat(inversions, t_order))
}

pub fn twisted_wreath_bound(t_order: i64, k: i64, l: i64, r: i64) -> Result<Rational> {
    if l < 0 || l * r > k {
        return Err(invalid("needs 0 ≤ ℓ ≤ k/r"));
    }
    frac(Rational::one(), pw(t_order, k - l))
}

fn cond(ok: bool, formula: &str, condition: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ConditionViolated { formula: formula.to_string(), condition: condition.to_string() })
    }
}

/// One entry of the formula registry.
pub struct FormulaDef {
    pub id: &'static str,
    pub anchor: &'static str,
    pub params: &'static [&'static str],
    pub eval: fn(&Params) -> Result<Rational>,
}

fn generic_formulas() -> Vec<FormulaDef> {
    vec![
        FormulaDef {
            id: "subset-rcycle",
            anchor: "r-cycle on l-subsets, product formula",
            params: &["n", "l", "r"],
            eval: |p| fpr_subset_rcycle(p.n()?, p.l()?, p.r()?),
        },
        FormulaDef {
            id: "subset-max",
            anchor: "largest fpr of an order-r element on l-subsets",
            params: &["n", "l", "r", "alt"],
            eval: |p| fpr_subset_max(p.n()?, p.l()?, p.r()?, p.alt.unwrap_or(false)),
        },
        FormulaDef {
            id: "partition-transposition",
            anchor: "transposition on bisections of an n-set",
            params: &["n"],
            eval: |p| fpr_partition_transposition(p.n()?),
        },
        FormulaDef { id: "affine", anchor: "affine group, p^(e-d)", params: &["p", "d", "e"], eval: |p| fpr_affine(p.p()?, p.d()?, p.e()?) },
        FormulaDef {
            id: "psl2-borel",
            anchor: "L2(q) on the projective line",
            params: &["q", "kind", "r"],
            eval: |p| fpr_psl2_borel(p.q()?, p.kind.as_deref().unwrap_or(""), p.r.unwrap_or(2)),
        },
        FormulaDef { id: "product", anchor: "product action, product of component ratios", params: &["values"], eval: |p| Ok(fpr_product(&p.values)) },
        FormulaDef {
            id: "product-pi-bound",
            anchor: "product action, nontrivial top component bound",
            params: &["gamma", "h", "r"],
            eval: |p| fpr_product_pi_bound(p.gamma()?, p.h()?, p.r()?),
        },
        FormulaDef {
            id: "diagonal-r2",
            anchor: "diagonal type, diagonal automorphism",
            params: &["t_order", "centralizer", "k"],
            eval: |p| fpr_diagonal_r2(p.t_order()?, p.centralizer()?, p.k()?),
        },
        FormulaDef {
            id: "diagonal-inversions",
            anchor: "diagonal type, swap with k = 2",
            params: &["t_order", "inversions"],
            eval: |p| fpr_diagonal_inversions(p.t_order()?, p.inversions()?),
        },
        FormulaDef {
            id: "twisted-wreath-bound",
            anchor: "twisted wreath product bound",
            params: &["t_order", "k", "l", "r"],
            eval: |p| twisted_wreath_bound(p.t_order()?, p.k()?, p.l()?, p.r.unwrap_or(2)),
        },
    ]
}

/// Every formula id with its parameter names and anchor.
pub fn formula_list() -> Vec<(String, Vec<String>, String)> {
    let mut out: Vec<(String, Vec<String>, String)> = generic_formulas()
        .into_iter()
        .map(|f| (f.id.to_string(), f.params.iter().map(|s| s.to_string()).collect(), f.anchor.to_string()))
        .collect();
    for rec in exception_records() {
        out.push((rec.id.to_string(), rec.params.iter().map(|s| s.to_string()).collect(), rec.anchor.to_string()));
    }
    out
}

/// Evaluate a formula or exception row by id.
pub fn evaluate(id: &str, params: &Params) -> Result<FormulaResult> {
    let value = if let Some(f) = generic_formulas().into_iter().find(|f| f.id == id) {
        (f.eval)(params)?
    } else if let Some(rec) = exception_records().iter().find(|r| r.id == id) {
        fpr_exception_row(rec, params)?
    } else {
        return Err(Error::UnknownFormula(id.to_string()));
    };
    Ok(FormulaResult { value, formula_id: id.to_string(), inputs: params.clone() })
}

/// Evaluate an exception row, refusing outside its stated conditions.
pub fn fpr_exception_row(rec: &crate::model::ExceptionRecord, params: &Params) -> Result<Rational> {
    for name in rec.params {
        let present = match *name {
            "n" => params.n.is_some(),
            "q" => params.q.is_some(),
            "eps" => params.eps.is_some(),
            "l" => params.l.is_some(),
            "r" => params.r.is_some(),
            "p" => params.p.is_some(),
            "alt" => true,
            _ => true,
        };
        if !present {
            return Err(invalid(format!("missing parameter `{name}` for {}", rec.id)));
        }
    }
    for c in &rec.conditions {
        cond((c.check)(params), rec.id, c.text)?;
    }
    (rec.value)(params)
}

// Row values. Each assumes the row's conditions have been checked.

pub(crate) fn v_unipotent_p1(p: &Params) -> Result<Rational> {
    let (n, q) = (p.n()?, p.q()?);
    Ok(rat(1, q + 1) + frac(pw(q, 1) * (pw(q, n - 2) - Rational::one()), pw(q + 1, 1) * (pw(q, n) - Rational::one()))?)
}

pub(crate) fn v_linear_omega(p: &Params) -> Result<Rational> {
    let (n, q) = (p.n()?, p.q()?);
    Ok(rat(1, q) + frac(pw(q - 1, 2), pw(q, 1) * (pw(q, n) - Rational::one()))?)
}

pub(crate) fn v_unitary_p1_omega(p: &Params) -> Result<Rational> {
    let n = p.n()?;
    Ok(rat(1, 4) + frac(rat(3, 1), rat(4, 1) * (pw(2, n) + Rational::one()))?)
}

pub(crate) fn v_unitary_tau(p: &Params) -> Result<Rational> {
    Ok(if p.q()? == 2 { rat(5, 9) } else { rat(5, 14) })
}

pub(crate) fn v_unitary_n1_omega(p: &Params) -> Result<Rational> {
    let n = p.n()?;
    Ok(rat(1, 4) + frac(rat(3, 1) * (pw(2, n - 3) + Rational::one()), pw(2, n - 1) * (pw(2, n) - Rational::one()))?)
}

fn eps_r(p: &Params) -> Result<Rational> {
    Ok(rat(p.eps()?.as_i64(), 1))
}

pub(crate) fn v_sp_oeps_b1(p: &Params) -> Result<Rational> {
    let (n, e) = (p.n()?, eps_r(p)?);
    Ok(rat(1, 3) + frac(pw(2, n / 2 - 1) - &e, rat(3, 1) * (pw(2, n / 2) + &e))?)
}

pub(crate) fn v_quarter_minus(p: &Params) -> Result<Rational> {
    let n = p.n()?;
    Ok(rat(1, 4) + frac(rat(3, 1), rat(4, 1) * (pw(2, n / 2) - Rational::one()))?)
}

pub(crate) fn v_quarter_plus(p: &Params) -> Result<Rational> {
    let n = p.n()?;
    Ok(rat(1, 4) + frac(rat(3, 1), rat(4, 1) * (pw(2, n / 2) + Rational::one()))?)
}

pub(crate) fn v_odd_p1_r(p: &Params) -> Result<Rational> {
    let n = p.n()?;
    Ok(rat(1, 3) + frac(rat(2, 1), rat(3, 1) * (pw(3, (n - 1) / 2) + Rational::one()))?)
}

pub(crate) fn v_odd_n1_r(p: &Params) -> Result<Rational> {
    let n = p.n()?;
    let a = pw(3, (n - 1) / 2);
    Ok(rat(1, 3) + frac(rat(2, 1) * (pw(3, (n - 3) / 2) + Rational::one()), &a * (&a - Rational::one()))?)
}

pub(crate) fn v_even_p1_b1(p: &Params) -> Result<Rational> {
    let (n, e) = (p.n()?, eps_r(p)?);
    let num = pw(2, n - 2) - &e * pw(2, n / 2 - 1) - rat(2, 1);
    let den = rat(3, 1) * (pw(2, n / 2 - 1) + &e) * (pw(2, n / 2) - &e);
    Ok(rat(1, 3) + frac(num, den)?)
}

pub(crate) fn v_even_p1_r(p: &Params) -> Result<Rational> {
    let n = p.n()?;
    Ok(rat(1, 3) + frac(rat(2, 1), rat(3, 1) * (pw(3, n / 2) + Rational::one()))?)
}

pub(crate) fn v_even_n1_rnsq(p: &Params) -> Result<Rational> {
    let n = p.n()?;
    Ok(rat(1, 3) + frac(rat(4, 1), rat(3, 1) * (pw(3, n / 2) - Rational::one()))?)
}

pub(crate) fn v_even_n1_rsq(p: &Params) -> Result<Rational> {
    let n = p.n()?;
    let num = rat(2, 1) * (pw(3, n / 2 - 2) + Rational::one());
    Ok(rat(1, 3) + frac(num, pw(3, n / 2 - 1) * (pw(3, n / 2) + Rational::one()))?)
}

pub(crate) fn v_even_n1_b1(p: &Params) -> Result<Rational> {
    let (n, e) = (p.n()?, eps_r(p)?);
    Ok(rat(1, 3) + frac(pw(2, n / 2 - 1) + &e, rat(3, 1) * (pw(2, n / 2) - &e))?)
}

pub(crate) fn v_half_minus(p: &Params) -> Result<Rational> {
    let n = p.n()?;
    Ok(rat(1, 2) + frac(Rational::one(), rat(2, 1) * (pw(2, n / 2) - Rational::one()))?)
}

pub(crate) fn v_half_plus(p: &Params) -> Result<Rational> {
    let n = p.n()?;
    Ok(rat(1, 2) + frac(Rational::one(), rat(2, 1) * (pw(2, n / 2) + Rational::one()))?)
}

pub(crate) fn v_l2_torus(p: &Params) -> Result<Rational> {
    let q = p.q()?;
    Ok(rat(1, q - 1) + rat(q - 3, q * q - 1))
}

// Degrees.

fn gu_order(n: i64, q: i64) -> BigInt {
    let mut o = ipow(q, (n * (n - 1) / 2) as u32);
    for i in 1..=n {
        o *= ipow(q, i as u32) - ipow(-1, i as u32);
    }
    o
}

fn sp_order(n: i64, q: i64) -> BigInt {
    let k = n / 2;
    let mut o = ipow(q, (k * k) as u32);
    for i in 1..=k {
        o *= ipow(q, 2 * i as u32) - 1;
    }
    o
}

/// |GO_n^ε(q)| (ε ignored for odd n).
fn go_order(n: i64, q: i64, eps: Option<Sign>) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    if n % 2 == 1 {
        let k = n / 2;
        let mut o = ipow(q, (k * k) as u32) * 2;
        for i in 1..=k {
            o *= ipow(q, 2 * i as u32) - 1;
        }
        return o;
    }
    let k = n / 2;
    let e = eps.map_or(1, |s| s.as_i64());
    let mut o = ipow(q, (k * (k - 1)) as u32) * 2 * (ipow(q, k as u32) - e);
    for i in 1..k {
        o *= ipow(q, 2 * i as u32) - 1;
    }
    o
}

fn exact_quotient(a: BigInt, b: BigInt) -> Result<BigUint> {
    if b.is_zero() || (&a % &b) != BigInt::zero() {
        return Err(invalid("degree formula did not divide exactly"));
    }
    (a / b).to_biguint().ok_or_else(|| invalid("negative degree"))
}

fn ts_count_unitary(n: i64, m: i64, q: i64) -> Result<BigUint> {
    let mut num = BigInt::one();
    for i in (n - 2 * m + 1)..=n {
        num *= ipow(q, i as u32) - ipow(-1, i as u32);
    }
    let mut den = BigInt::one();
    for i in 1..=m {
        den *= ipow(q, 2 * i as u32) - 1;
    }
    exact_quotient(num, den)
}

fn ts_count_symplectic(n: i64, m: i64, q: i64) -> Result<BigUint> {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        num *= ipow(q, (n - 2 * i) as u32) - 1;
        den *= ipow(q, (i + 1) as u32) - 1;
    }
    exact_quotient(num, den)
}

fn ts_count_odd(n: i64, m: i64, q: i64) -> Result<BigUint> {
    let k = n / 2;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        num *= ipow(q, 2 * (k - i) as u32) - 1;
        den *= ipow(q, (i + 1) as u32) - 1;
    }
    exact_quotient(num, den)
}

fn ts_count_even(n: i64, m: i64, q: i64, eps: Sign) -> Result<BigUint> {
    let k = n / 2;
    let e = eps.as_i64();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        num *= (ipow(q, (k - i) as u32) - e) * (ipow(q, (k - i - 1) as u32) + e);
        den *= ipow(q, (i + 1) as u32) - 1;
    }
    exact_quotient(num, den)
}

fn unsupported(g: &GroupSpec, a: &ActionSpec) -> Error {
    Error::Unsupported(format!("no degree formula for {g} on {a}"))
}

/// Exact degree |Ω| of the action.
pub fn action_degree(g: &GroupSpec, a: &ActionSpec) -> Result<BigUint> {
    let v = crate::model::validate(g, a);
    if !v.is_empty() {
        return Err(Error::InvalidSpec(v.join("; ")));
    }
    let u = |x: u64| -> BigUint { BigUint::from(x) };
    match (&g.family, a) {
        (Family::SymAlt { n, .. }, ActionSpec::Subsets { l }) => Ok(binomial(*n as i64, *l as i64)),
        (Family::SymAlt { n, .. }, ActionSpec::Partitions) => Ok(binomial(*n as i64, *n as i64 / 2) / 2u32),
        (Family::SymAlt { n, .. }, ActionSpec::NaturalPoints) => Ok(u(*n as u64)),
        (Family::SymAlt { n: 6, .. }, ActionSpec::Catalog { name }) => match name.as_str() {
            "A5prim" | "S5prim" => Ok(u(6)),
            "S2wrS3" => Ok(u(15)),
            "(S3wrS2).2" => Ok(u(10)),
            _ => Err(unsupported(g, a)),
        },
        (Family::SymAlt { n: 8, .. }, ActionSpec::Catalog { name }) if name == "AGL3(2)" => Ok(u(15)),
        (Family::Linear { n, q }, ActionSpec::P { m }) => gaussian_binomial(*n as u64, *m as u64, *q),
        (Family::Linear { n, q }, ActionSpec::PPair { m }) => {
            Ok(gaussian_binomial(*n as u64, (*n - *m) as u64, *q)? * gaussian_binomial((*n - *m) as u64, *m as u64, *q)?)
        }
        (Family::Unitary { n, q }, ActionSpec::P { m }) => ts_count_unitary(*n as i64, *m as i64, *q as i64),
        (Family::Unitary { n, q }, ActionSpec::N { m, .. }) => {
            let (n, m, q) = (*n as i64, *m as i64, *q as i64);
            exact_quotient(gu_order(n, q), gu_order(m, q) * gu_order(n - m, q))
        }
        (Family::Symplectic { n, q }, ActionSpec::P { m }) => ts_count_symplectic(*n as i64, *m as i64, *q as i64),
        (Family::Symplectic { n, q }, ActionSpec::N { m, .. }) => {
            let (n, m, q) = (*n as i64, *m as i64, *q as i64);
            exact_quotient(sp_order(n, q), sp_order(m, q) * sp_order(n - m, q))
        }
        (Family::Symplectic { n, q }, ActionSpec::OEpsilon { eps }) => {
            let h = ipow(*q as i64, *n / 2);
            exact_quotient(&h * (&h + eps.as_i64()), BigInt::from(2))
        }
        (Family::OrthogonalOdd { n, q }, ActionSpec::P { m }) => ts_count_odd(*n as i64, *m as i64, *q as i64),
        (Family::OrthogonalOdd { n, q }, ActionSpec::N { m, eta }) => {
            let (n, m, q) = (*n as i64, *m as i64, *q as i64);
            let eta = eta.ok_or_else(|| invalid("N_m^η needs η"))?;
            if m % 2 == 1 {
                exact_quotient(go_order(n, q, None), go_order(m, q, None) * go_order(n - m, q, Some(eta)))
            } else {
                exact_quotient(go_order(n, q, None), go_order(m, q, Some(eta)) * go_order(n - m, q, None))
            }
        }
        (Family::OrthogonalEven { n, q, eps }, ActionSpec::P { m }) => ts_count_even(*n as i64, *m as i64, *q as i64, *eps),
        (Family::OrthogonalEven { n, q, eps }, ActionSpec::N { m, eta }) => {
            let (n, m, q) = (*n as i64, *m as i64, *q as i64);
            if m % 2 == 0 {
                let eta = eta.ok_or_else(|| invalid("N_m^η needs η"))?;
                let other = if eta == *eps { Sign::Plus } else { Sign::Minus };
                exact_quotient(go_order(n, q, Some(*eps)), go_order(m, q, Some(eta)) * go_order(n - m, q, Some(other)))
            } else if m == 1 {
                let k = n / 2;
                let v = ipow(q, (k - 1) as u32) * (ipow(q, k as u32) - eps.as_i64());
                exact_quotient(v, BigInt::from(2))
            } else {
                Err(unsupported(g, a))
            }
        }
        (Family::OrthogonalEven { n, q, eps }, ActionSpec::N1Nonsingular) => {
            let k = *n / 2;
            let q = *q as i64;
            exact_quotient(ipow(q, k - 1) * (ipow(q, k) - eps.as_i64()), BigInt::one())
        }
        (Family::Sporadic { name }, ActionSpec::Catalog { name: act }) if name == "M22:2" && act == "L3(4).2_2" => Ok(u(22)),
        (Family::Affine { p, d, .. }, ActionSpec::NaturalPoints) => Ok(BigUint::from(*p).pow(*d)),
        (Family::Diagonal { t, k }, ActionSpec::NaturalPoints) => {
            let order = crate::model::simple_group_order(t).ok_or_else(|| unsupported(g, a))?;
            Ok(BigUint::from(order).pow(*k - 1))
        }
        (Family::Product { component, k }, ActionSpec::ProductOf { component: ca }) => Ok(action_degree(component, ca)?.pow(*k)),
        _ => Err(unsupported(g, a)),
    }
}

/// Degree of each action, for the registry listing.
pub fn degree_table() -> BTreeMap<&'static str, &'static str> {
    BTreeMap::from([
        ("P_m (linear)", "gaussian binomial [n m]_q"),
        ("P_m (symplectic)", "prod (q^(n-2i)-1)/(q^(i+1)-1)"),
        ("O_eps cosets", "q^(n/2)(q^(n/2)+eps)/2"),
        ("N_1 square (orthogonal, q odd)", "q^(n/2-1)(q^(n/2)-eps)/2"),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_examples() {
        assert_eq!(fpr_subset_rcycle(6, 2, 2).unwrap(), rat(7, 15));
        assert_eq!(fpr_subset_rcycle(7, 3, 5).unwrap(), Rational::zero());
        assert_eq!(fpr_subset_rcycle(8, 1, 3).unwrap(), rat(5, 8));
        assert_eq!(fpr_subset_max(6, 1, 2, true).unwrap(), rat(1, 3));
        assert_eq!(fpr_subset_max(6, 1, 2, false).unwrap(), rat(2, 3));
        assert_eq!(fpr_subset_max(6, 2, 2, true).unwrap(), rat(1, 5));
    }

    #[test]
    fn partition_examples() {
        assert_eq!(fpr_partition_transposition(6).unwrap(), rat(2, 5));
        assert_eq!(fpr_partition_transposition(8).unwrap(), rat(3, 7));
        assert_eq!(fpr_partition_transposition(10).unwrap(), rat(4, 9));
    }

    #[test]
    fn misc_examples() {
        assert_eq!(fpr_affine(3, 2, 1).unwrap(), rat(1, 3));
        assert_eq!(fpr_affine(2, 4, 0).unwrap(), rat(1, 16));
        assert_eq!(fpr_affine(5, 3, 1).unwrap(), rat(1, 25));
        assert_eq!(fpr_psl2_borel(8, "torus", 7).unwrap(), rat(2, 9));
        assert_eq!(fpr_psl2_borel(8, "field_aut", 3).unwrap(), rat(1, 3));
        assert_eq!(fpr_psl2_borel(7, "unipotent", 7).unwrap(), rat(1, 8));
        assert_eq!(fpr_product(&[rat(1, 3), rat(1, 3)]), rat(1, 9));
        assert_eq!(fpr_product(&[]), Rational::one());
        assert_eq!(fpr_product_pi_bound(60, 1, 2).unwrap(), rat(1, 60));
        assert_eq!(fpr_product_pi_bound(5, 2, 3).unwrap(), rat(1, 625));
        assert_eq!(fpr_diagonal_r2(60, 4, 2).unwrap(), rat(1, 15));
        assert_eq!(fpr_diagonal_r2(60, 4, 3).unwrap(), rat(1, 225));
        assert_eq!(fpr_diagonal_inversions(60, 16).unwrap(), rat(4, 15));
        assert_eq!(twisted_wreath_bound(60, 3, 1, 2).unwrap(), rat(1, 3600));
        assert_eq!(twisted_wreath_bound(168, 2, 0, 2).unwrap(), rat(1, 168 * 168));
    }
}
