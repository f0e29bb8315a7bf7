//! Exact integers and rationals plus the q-analog counting used by the formulas.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// Exact fraction in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(num_rational::BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let d = denom.into();
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::wrap(num_rational::BigRational::new(numer.into(), d)))
    }

    /// Shorthand for small literals. Panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Self::from(0i64)
    }

    pub fn one() -> Self {
        Self::from(1i64)
    }

    fn wrap(r: num_rational::BigRational) -> Self {
        debug_assert!(r.numer().gcd(r.denom()).is_one() || r.numer().is_zero());
        debug_assert!(r.denom().is_positive());
        Rational(r)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::wrap(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    pub fn pow(&self, e: i32) -> Result<Rational> {
        if e < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::wrap(num_traits::Pow::pow(&self.0, e)))
    }

    pub fn square(&self) -> Rational {
        self * self
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(v: $t) -> Self {
                Rational(num_rational::BigRational::from_integer(BigInt::from(v)))
            }
        }
    )*};
}
from_int!(i32, i64, u32, u64, usize, u128);

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational(num_rational::BigRational::from_integer(v))
    }
}

impl From<BigUint> for Rational {
    fn from(v: BigUint) -> Self {
        Rational::from(BigInt::from(v))
    }
}

impl From<&BigUint> for Rational {
    fn from(v: &BigUint) -> Self {
        Rational::from(BigInt::from(v.clone()))
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $f(self, rhs: &Rational) -> Rational {
                Rational::wrap((&self.0).$f(&rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $f(self, rhs: Rational) -> Rational {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $f(self, rhs: &Rational) -> Rational {
                (&self).$f(rhs)
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $f(self, rhs: Rational) -> Rational {
                self.$f(&rhs)
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

/// Panics on division by zero; use [`Rational::checked_div`] when the divisor is untrusted.
impl std::ops::Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl std::ops::Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational::wrap(-self.0)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("not a rational: `{s}`")))
        };
        match s.split_once('/') {
            Some((a, b)) => Rational::new(parse(a)?, parse(b)?),
            None => Ok(Rational::from(parse(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            S(String),
            I(i64),
        }
        match Raw::deserialize(d)? {
            Raw::S(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::I(i) => Ok(Rational::from(i)),
        }
    }
}

/// Number of m-dimensional subspaces of an n-dimensional space over GF(q).
///
/// Every partial product of the telescoping form is itself a Gaussian binomial,
/// so each division below is exact.
pub fn gaussian_binomial(n: u64, m: u64, q: u64) -> Result<BigUint> {
    if q < 2 {
        return Err(invalid(format!("q = {q} must be at least 2")));
    }
    if m > n {
        return Ok(BigUint::zero());
    }
    let m = m.min(n - m);
    let q = BigUint::from(q);
    let mut acc = BigUint::one();
    for i in 1..=m {
        let num = q.pow((n - m + i) as u32) - 1u32;
        let den = q.pow(i as u32) - 1u32;
        acc *= num;
        let (quot, rem) = acc.div_rem(&den);
        debug_assert!(rem.is_zero());
        acc = quot;
    }
    Ok(acc)
}

/// Binomial coefficient; zero whenever k < 0 or k > n.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from((n - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |a, i| a * i)
}

/// `base^e` as a signed big integer.
pub fn ipow(base: i64, e: u32) -> BigInt {
    num_traits::Pow::pow(BigInt::from(base), e)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(n: &BigUint) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n.clone();
    let mut d = 2u64;
    while !n.is_one() && !n.is_zero() {
        if BigUint::from(d) * BigUint::from(d) > n {
            out.push(n.to_u64().expect("prime factor fits in u64"));
            break;
        }
        if (&n % d).is_zero() {
            out.push(d);
            while (&n % d).is_zero() {
                n /= d;
            }
        }
        d += 1;
    }
    out
}

/// Returns `(p, f)` with `q = p^f` when q is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut f = 0;
    let mut t = q;
    while t % p == 0 {
        t /= p;
        f += 1;
    }
    (t == 1).then_some((p, f))
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

/// Serde adapters writing big integers as decimal strings.
pub mod big_str {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }

    pub mod opt {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => s.collect_str(v),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
            let text = Option::<String>::deserialize(d)?;
            text.map(|t| t.parse().map_err(serde::de::Error::custom)).transpose()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_examples() {
        assert_eq!(Rational::ratio(1, 3) + Rational::ratio(1, 15), Rational::ratio(2, 5));
        assert_eq!(Rational::ratio(1, 2).pow(3).unwrap(), Rational::ratio(1, 8));
        assert!(Rational::ratio(4, 7) > Rational::ratio(1, 2));
        assert_eq!(Rational::ratio(1, 2).checked_div(&Rational::zero()), Err(Error::DivisionByZero));
        assert_eq!(Rational::ratio(6, -4).to_string(), "-3/2");
        assert_eq!(Rational::from(5i64).to_string(), "5");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "7/15", "-2/3", "12"] {
            assert_eq!(s.parse::<Rational>().unwrap().to_string(), s);
        }
        assert_eq!("4/6".parse::<Rational>().unwrap().to_string(), "2/3");
        assert!("1/0".parse::<Rational>().is_err());
        let j = serde_json::to_string(&Rational::ratio(4, 11)).unwrap();
        assert_eq!(j, "\"4/11\"");
        assert_eq!(serde_json::from_str::<Rational>(&j).unwrap(), Rational::ratio(4, 11));
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_binomial(4, 2, 2).unwrap(), BigUint::from(35u32));
        assert_eq!(gaussian_binomial(5, 0, 3).unwrap(), BigUint::one());
        assert_eq!(gaussian_binomial(2, 1, 3).unwrap(), BigUint::from(4u32));
        assert_eq!(gaussian_binomial(2, 3, 3).unwrap(), BigUint::zero());
        assert!(gaussian_binomial(3, 1, 1).is_err());
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(6, 2), BigUint::from(15u32));
        assert_eq!(binomial(3, -1), BigUint::zero());
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn primes() {
        assert_eq!(prime_divisors(&BigUint::from(1451520u64)), vec![2, 3, 5, 7]);
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert!(is_prime(23) && !is_prime(21));
    }
}
