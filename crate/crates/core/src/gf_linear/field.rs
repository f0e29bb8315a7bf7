use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exact_math::{is_prime, prime_power};

/// GF(p^f) given by a monic irreducible modulus, coefficients low degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub f: u32,
    pub modulus: Vec<u32>,
}

const MAX_ORDER: u64 = 1 << 12;

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm], p);
    while r.len() > dm {
        let c = (r[r.len() - 1] * lead_inv) % p;
        let shift = r.len() - 1 - dm;
        if c != 0 {
            for (k, &mk) in m.iter().enumerate() {
                r[shift + k] = (r[shift + k] + p - (c * mk) % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    (1..p).find(|b| (a * b) % p == 1).expect("unit mod p")
}

fn digits(mut code: u64, p: u32, len: usize) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = (code % p as u64) as u32;
            code /= p as u64;
            d
        })
        .collect()
}

/// Irreducibility by trial division with every monic polynomial of degree ≤ f/2.
pub fn is_irreducible(m: &[u32], p: u32) -> bool {
    let f = m.len() - 1;
    if f == 0 || m[f] == 0 {
        return false;
    }
    for d in 1..=f / 2 {
        for code in 0..(p as u64).pow(d as u32) {
            let mut g = digits(code, p, d);
            g.push(1);
            if poly_rem(m, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    pub fn new(p: u32, f: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) || f == 0 || f > 8 {
            return Err(invalid(format!("GF({p}^{f}) unsupported")));
        }
        if modulus.len() != f as usize + 1 || modulus[f as usize] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(invalid("modulus must be monic of degree f with coefficients below p"));
        }
        if !is_irreducible(&modulus, p) {
            return Err(invalid(format!("modulus {modulus:?} is reducible over GF({p})")));
        }
        Ok(FieldSpec { p, f, modulus })
    }

    /// First irreducible modulus (by coefficient code) whose root is primitive.
    pub fn standard(q: u64) -> Result<Self> {
        let (p, f) = prime_power(q).ok_or_else(|| invalid(format!("{q} is not a prime power")))?;
        if q > MAX_ORDER {
            return Err(invalid(format!("field order {q} above {MAX_ORDER}")));
        }
        let p = p as u32;
        if f == 1 {
            return FieldSpec::new(p, 1, vec![0, 1]);
        }
        for code in 0..(p as u64).pow(f) {
            let mut m = digits(code, p, f as usize);
            m.push(1);
            if !is_irreducible(&m, p) {
                continue;
            }
            let spec = FieldSpec { p, f, modulus: m };
            let field = Field::build(spec.clone());
            if field.mult_order(p) == q - 1 {
                return Ok(spec);
            }
        }
        Err(invalid(format!("no primitive modulus for q = {q}")))
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.f)
    }
}

/// Table-driven GF(q); elements are integers `c₀ + c₁p + …` encoding coefficients.
#[derive(Clone, Debug)]
pub struct Field {
    spec: FieldSpec,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    frob: Vec<u32>,
    generator: u32,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Self> {
        let spec = FieldSpec::new(spec.p, spec.f, spec.modulus)?;
        if spec.order() > MAX_ORDER {
            return Err(invalid("field too large"));
        }
        Ok(Field::build(spec))
    }

    pub fn of_order(q: u64) -> Result<Self> {
        Field::new(FieldSpec::standard(q)?)
    }

    fn build(spec: FieldSpec) -> Self {
        let (p, f) = (spec.p, spec.f as usize);
        let q = spec.order() as u32;
        let qs = q as usize;
        let enc = |v: &[u32]| v.iter().rev().fold(0u32, |a, &c| a * p + c);
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..q {
            let da = digits(a as u64, p, f);
            for b in 0..q {
                let db = digits(b as u64, p, f);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = enc(&s);
                let mut prod = vec![0u32; 2 * f];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = poly_rem(&prod, &spec.modulus, p);
                r.resize(f, 0);
                mul[(a * q + b) as usize] = enc(&r);
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[(a * q + b) as usize] == 0).unwrap()).collect();
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[(a * q + b) as usize] == 1).unwrap() })
            .collect();
        let mut field = Field { spec, q, add, mul, neg, inv, frob: Vec::new(), generator: 0 };
        field.frob = (0..q).map(|a| field.pow(a, p as u64)).collect();
        field.generator = (1..q).find(|&g| field.mult_order(g) == (q - 1) as u64).unwrap_or(1);
        field
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn p(&self) -> u32 {
        self.spec.p
    }

    pub fn f(&self) -> u32 {
        self.spec.f
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv[a as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// y ↦ y^p.
    #[inline]
    pub fn frobenius(&self, a: u32) -> u32 {
        self.frob[a as usize]
    }

    /// y ↦ y^(p^k).
    pub fn frobenius_pow(&self, mut a: u32, k: u32) -> u32 {
        for _ in 0..k % self.spec.f {
            a = self.frob[a as usize];
        }
        a
    }

    /// The involutory automorphism y ↦ y^√q; requires even f.
    pub fn conj(&self, a: u32) -> Result<u32> {
        if self.spec.f % 2 != 0 {
            return Err(invalid("conj needs a field of square order"));
        }
        Ok(self.frobenius_pow(a, self.spec.f / 2))
    }

    pub fn generator(&self) -> u32 {
        self.generator
    }

    pub fn mult_order(&self, a: u32) -> u64 {
        if a == 0 {
            return 0;
        }
        let mut k = 1u64;
        let mut x = a;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_square(&self, a: u32) -> bool {
        self.elements().any(|b| self.mul(b, b) == a)
    }

    /// An element of exact multiplicative order r, if r divides q − 1.
    pub fn root_of_unity(&self, r: u64) -> Option<u32> {
        if r == 0 || (self.q as u64 - 1) % r != 0 {
            return None;
        }
        Some(self.pow(self.generator, (self.q as u64 - 1) / r))
    }

    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.spec.p as i64) as u32
    }

    /// Absolute trace to the prime field.
    pub fn trace(&self, a: u32) -> u32 {
        let mut t = 0;
        let mut x = a;
        for _ in 0..self.spec.f {
            t = self.add(t, x);
            x = self.frobenius(x);
        }
        t
    }

    /// Element from its polynomial-basis coefficient list.
    pub fn from_coeffs(&self, c: &[u32]) -> Result<u32> {
        if c.len() > self.spec.f as usize || c.iter().any(|&x| x >= self.spec.p) {
            return Err(invalid(format!("bad coefficient list {c:?}")));
        }
        Ok(c.iter().rev().fold(0u32, |a, &x| a * self.spec.p + x))
    }

    pub fn to_coeffs(&self, a: u32) -> Vec<u32> {
        digits(a as u64, self.spec.p, self.spec.f as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf8_relation() {
        let f = Field::of_order(8).unwrap();
        assert_eq!(f.spec().modulus, vec![1, 1, 0, 1]);
        let g = 2; // the class of x
        assert_eq!(f.pow(g, 3), f.add(g, 1));
        assert_eq!(f.inv(1).unwrap(), 1);
        assert!(f.inv(0).is_err());
    }

    #[test]
    fn gf9_frobenius_fixes_prime_field() {
        let f = Field::of_order(9).unwrap();
        for a in f.elements() {
            assert_eq!(f.frobenius(a) == a, a < 3);
            assert_eq!(f.frobenius(a), f.mul(f.mul(a, a), a));
        }
        assert_eq!(f.mult_order(f.generator()), 8);
    }

    #[test]
    fn axioms_small_fields() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16] {
            let f = Field::of_order(q).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn rejects_reducible() {
        assert!(FieldSpec::new(2, 2, vec![1, 0, 1]).is_err());
        assert!(FieldSpec::new(3, 2, vec![1, 0, 1]).is_ok());
    }
}
