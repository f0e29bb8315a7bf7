use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::matrix::{Matrix, Semilinear};
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" | "1" | "+1" => Ok(Sign::Plus),
            "-" | "minus" | "-1" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("bad sign `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Linear,
    Symplectic,
    Unitary,
    Quadratic,
}

/// Gram matrix of the (polar) form; for quadratic forms `quad[i] = Q(eᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormSpec {
    pub kind: FormKind,
    pub epsilon: Option<Sign>,
    pub gram: Matrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quad: Option<Vec<u32>>,
}

impl FormSpec {
    /// Hyperbolic pairs (eᵢ, e_{n−1−i}) with an anisotropic middle block for
    /// minus type, and a single 1-block in odd dimension.
    pub fn standard(kind: FormKind, n: usize, field: &Field, epsilon: Option<Sign>) -> Result<Self> {
        let mut g = Matrix::zero(n, n);
        let one = 1;
        let minus_one = field.neg(1);
        match kind {
            FormKind::Linear => Ok(FormSpec { kind, epsilon: None, gram: g, quad: None }),
            FormKind::Symplectic => {
                if n % 2 != 0 {
                    return Err(invalid("symplectic dimension must be even"));
                }
                for i in 0..n / 2 {
                    g.set(i, n - 1 - i, one);
                    g.set(n - 1 - i, i, minus_one);
                }
                Ok(FormSpec { kind, epsilon: None, gram: g, quad: None })
            }
            FormKind::Unitary => {
                if field.f() % 2 != 0 {
                    return Err(invalid("unitary forms need a field of square order"));
                }
                for i in 0..n {
                    g.set(i, n - 1 - i, one);
                }
                Ok(FormSpec { kind, epsilon: None, gram: g, quad: None })
            }
            FormKind::Quadratic => {
                let mut d = vec![0u32; n];
                let k = n / 2;
                let two = field.add(1, 1);
                let pairs = match (n % 2, epsilon) {
                    (0, Some(Sign::Plus)) => k,
                    (0, Some(Sign::Minus)) => k - 1,
                    (1, None) => k,
                    _ => return Err(invalid("even dimension needs a sign, odd dimension none")),
                };
                if n % 2 == 1 && field.p() == 2 {
                    return Err(invalid("odd-dimensional quadratic forms need odd q"));
                }
                for i in 0..pairs {
                    g.set(i, n - 1 - i, one);
                    g.set(n - 1 - i, i, one);
                }
                if n % 2 == 1 {
                    d[k] = 1;
                    g.set(k, k, two);
                } else if epsilon == Some(Sign::Minus) {
                    let (a, b) = (k - 1, k);
                    if field.p() == 2 {
                        let beta = field.elements().find(|&x| field.trace(x) == 1).unwrap();
                        d[a] = 1;
                        d[b] = beta;
                        g.set(a, b, 1);
                        g.set(b, a, 1);
                    } else {
                        let nu = field.generator();
                        d[a] = 1;
                        d[b] = field.neg(nu);
                        g.set(a, a, two);
                        g.set(b, b, field.mul(two, d[b]));
                    }
                }
                Ok(FormSpec { kind, epsilon, gram: g, quad: Some(d) })
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }
}

/// A vector space over a field together with its form.
#[derive(Clone, Debug)]
pub struct Geometry {
    pub field: Field,
    pub form: FormSpec,
}

impl Geometry {
    pub fn new(field: Field, form: FormSpec) -> Self {
        Geometry { field, form }
    }

    pub fn standard(kind: FormKind, n: usize, field: Field, epsilon: Option<Sign>) -> Result<Self> {
        let form = FormSpec::standard(kind, n, &field, epsilon)?;
        Ok(Geometry { field, form })
    }

    pub fn n(&self) -> usize {
        self.form.dim()
    }

    pub fn kind(&self) -> FormKind {
        self.form.kind
    }

    fn twist(&self, a: u32) -> u32 {
        match self.form.kind {
            FormKind::Unitary => self.field.conj(a).unwrap(),
            _ => a,
        }
    }

    /// The polar/sesquilinear form, linear in the first argument.
    pub fn bil(&self, u: &[u32], v: &[u32]) -> u32 {
        let f = &self.field;
        let g = &self.form.gram;
        let mut acc = 0;
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                let gij = g.get(i, j);
                if gij != 0 && vj != 0 {
                    acc = f.add(acc, f.mul(ui, f.mul(gij, self.twist(vj))));
                }
            }
        }
        acc
    }

    pub fn quad(&self, v: &[u32]) -> u32 {
        let f = &self.field;
        let d = self.form.quad.as_ref().expect("quadratic form");
        let g = &self.form.gram;
        let mut acc = 0;
        for i in 0..v.len() {
            if v[i] == 0 {
                continue;
            }
            acc = f.add(acc, f.mul(d[i], f.mul(v[i], v[i])));
            for j in i + 1..v.len() {
                if v[j] != 0 && g.get(i, j) != 0 {
                    acc = f.add(acc, f.mul(g.get(i, j), f.mul(v[i], v[j])));
                }
            }
        }
        acc
    }

    pub fn is_singular(&self, v: &[u32]) -> bool {
        match self.form.kind {
            FormKind::Linear | FormKind::Symplectic => true,
            FormKind::Unitary => self.bil(v, v) == 0,
            FormKind::Quadratic => self.quad(v) == 0,
        }
    }

    pub fn gram_of(&self, rows: &[Vec<u32>]) -> Matrix {
        let k = rows.len();
        let mut m = Matrix::zero(k, k);
        for i in 0..k {
            for j in 0..k {
                m.set(i, j, self.bil(&rows[i], &rows[j]));
            }
        }
        m
    }

    pub fn is_nondegenerate(&self, rows: &[Vec<u32>]) -> bool {
        self.field.rank(&self.gram_of(rows)) == rows.len()
    }

    pub fn is_totally_singular(&self, rows: &[Vec<u32>]) -> bool {
        let k = rows.len();
        (0..k).all(|i| self.is_singular(&rows[i]) && (0..k).all(|j| self.bil(&rows[i], &rows[j]) == 0))
    }

    /// Basis of {x ∈ span(within) : B(x, w) = 0 for all w ∈ rows}.
    pub fn perp_within(&self, rows: &[Vec<u32>], within: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let mut k = Matrix::zero(within.len(), rows.len());
        for (i, r) in within.iter().enumerate() {
            for (j, w) in rows.iter().enumerate() {
                k.set(i, j, self.bil(r, w));
            }
        }
        let ker = self.field.left_kernel(&k);
        let n = self.n();
        (0..ker.rows())
            .map(|b| {
                let mut v = vec![0u32; n];
                for (i, r) in within.iter().enumerate() {
                    let c = ker.get(b, i);
                    if c != 0 {
                        v = self.field.vec_add(&v, &self.field.vec_scale(c, r));
                    }
                }
                v
            })
            .collect()
    }

    pub fn standard_basis(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect()
    }

    /// All vectors of span(rows), in coefficient-code order.
    pub fn span_vectors(&self, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let q = self.field.q() as u64;
        let total = q.pow(rows.len() as u32);
        let f = &self.field;
        (0..total)
            .map(|mut code| {
                let mut v = vec![0u32; self.n()];
                for r in rows {
                    let c = (code % q) as u32;
                    code /= q;
                    if c != 0 {
                        v = f.vec_add(&v, &f.vec_scale(c, r));
                    }
                }
                v
            })
            .collect()
    }

    /// Witt type of a nondegenerate even-dimensional subspace, from its
    /// number of singular vectors.
    pub fn witt_type(&self, rows: &[Vec<u32>]) -> Result<Sign> {
        if rows.len() % 2 != 0 || self.form.kind != FormKind::Quadratic {
            return Err(invalid("Witt type needs an even-dimensional quadratic subspace"));
        }
        let k = (rows.len() / 2) as u32;
        let q = self.field.q() as i64;
        let singular = self.span_vectors(rows).iter().filter(|v| self.quad(v) == 0).count() as i64;
        let plus = q.pow(2 * k - 1) + q.pow(k) - q.pow(k - 1);
        let minus = q.pow(2 * k - 1) - q.pow(k) + q.pow(k - 1);
        match singular {
            s if s == plus => Ok(Sign::Plus),
            s if s == minus => Ok(Sign::Minus),
            _ => Err(Error::FormMismatch("subspace is degenerate".into())),
        }
    }

    /// A G A* against G^(σ^s), returning the scalar μ with A G A* = μ·G^(σ^s) if any.
    fn similarity_factor(&self, x: &Semilinear) -> Option<u32> {
        let f = &self.field;
        let a = &x.matrix;
        let g = &self.form.gram;
        let astar = match self.form.kind {
            FormKind::Unitary => f.mat_frobenius(&a.transpose(), f.f() / 2),
            _ => a.transpose(),
        };
        let lhs = f.mat_mul(&f.mat_mul(a, g).ok()?, &astar).ok()?;
        let rhs = f.mat_frobenius(g, x.frob);
        let mut mu = None;
        for (l, r) in lhs.entries().iter().zip(rhs.entries()) {
            match (*r, mu) {
                (0, _) if *l != 0 => return None,
                (0, _) => {}
                (r, None) => mu = Some(f.div(*l, r).ok()?),
                (r, Some(m)) if f.mul(m, r) != *l => return None,
                _ => {}
            }
        }
        if self.form.kind == FormKind::Quadratic {
            let d = self.form.quad.as_ref()?;
            let m = mu.unwrap_or(1);
            for (i, e) in self.standard_basis().iter().enumerate() {
                let img = f.apply(x, e);
                if self.quad(&img) != f.mul(m, f.frobenius_pow(d[i], x.frob)) {
                    return None;
                }
            }
        }
        Some(mu.unwrap_or(1))
    }

    /// Exact isometry test.
    pub fn check_form_preservation(&self, x: &Semilinear) -> bool {
        match self.form.kind {
            FormKind::Linear => self.field.inverse(&x.matrix).is_ok(),
            _ => self.similarity_factor(x) == Some(1),
        }
    }

    /// Preservation up to a nonzero scalar (enough for the action on subspaces).
    pub fn preserves_up_to_scalar(&self, x: &Semilinear) -> bool {
        match self.form.kind {
            FormKind::Linear => self.field.inverse(&x.matrix).is_ok(),
            _ => matches!(self.similarity_factor(x), Some(m) if m != 0),
        }
    }

    /// rank(x + I) mod 2 for an isometry of a characteristic-2 quadratic space.
    pub fn dickson_invariant(&self, x: &Semilinear) -> Result<u32> {
        if self.form.kind != FormKind::Quadratic || self.field.p() != 2 || x.frob != 0 {
            return Err(Error::FormMismatch("Dickson invariant needs a linear map and a quadratic form in characteristic 2".into()));
        }
        let m = self.field.mat_add(&x.matrix, &Matrix::identity(self.n()));
        Ok((self.field.rank(&m) % 2) as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_quadratic_forms_have_declared_type() {
        for q in [2u64, 3, 4] {
            for n in [2usize, 4, 6] {
                for eps in [Sign::Plus, Sign::Minus] {
                    let g = Geometry::standard(FormKind::Quadratic, n, Field::of_order(q).unwrap(), Some(eps)).unwrap();
                    let basis = g.standard_basis();
                    assert_eq!(g.witt_type(&basis).unwrap(), eps, "q={q} n={n}");
                    assert!(g.is_nondegenerate(&basis));
                }
            }
        }
    }

    #[test]
    fn symplectic_and_unitary_nondegenerate() {
        let s = Geometry::standard(FormKind::Symplectic, 6, Field::of_order(2).unwrap(), None).unwrap();
        assert!(s.is_nondegenerate(&s.standard_basis()));
        let u = Geometry::standard(FormKind::Unitary, 4, Field::of_order(4).unwrap(), None).unwrap();
        assert!(u.is_nondegenerate(&u.standard_basis()));
        let id = Semilinear::linear(Matrix::identity(4));
        assert!(u.check_form_preservation(&id));
    }

    #[test]
    fn identity_dickson_zero() {
        let g = Geometry::standard(FormKind::Quadratic, 6, Field::of_order(2).unwrap(), Some(Sign::Minus)).unwrap();
        assert_eq!(g.dickson_invariant(&Semilinear::linear(Matrix::identity(6))).unwrap(), 0);
    }
}
