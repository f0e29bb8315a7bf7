use hashbrown::HashTable;
use num_traits::ToPrimitive;

use super::field::Field;
use super::form::{FormKind, Geometry, Sign};
use super::matrix::{Matrix, Semilinear};
use crate::error::{invalid, Error, Result};
use crate::exact_math::gaussian_binomial;
use crate::perm_core::Permutation;

/// Default ceiling on enumerated points.
pub const DEFAULT_POINT_BUDGET: usize = 1 << 24;

/// What a point of the action is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    /// Every m-space (the linear-group convention for P_m).
    Subspaces(usize),
    TotallySingular(usize),
    /// Nondegenerate m-spaces; `eta` is the Witt type of the space when m is
    /// even and of its perp when m is odd (quadratic forms only).
    Nondegenerate { m: usize, eta: Option<Sign> },
    /// Nonsingular 1-spaces of a characteristic-2 quadratic space.
    Nonsingular1,
    /// 1-spaces ⟨v⟩ with Q(v) a nonzero square (odd q).
    SquareDiscriminant1,
    /// Flags U ⊂ W with dim U = m, dim W = n − m.
    Flags(usize),
    /// Quadratic forms of the given type polarizing to the symplectic form (q even).
    QuadraticForms(Sign),
}

fn hash_key(k: &[u32]) -> u64 {
    let mut h: u64 = 0x243f_6a88_85a3_08d3;
    for &x in k {
        h = (h ^ x as u64).wrapping_mul(0x0000_0100_0000_01b3);
        h ^= h >> 31;
    }
    h
}

/// Fixed-width keys with an exact hash index.
#[derive(Clone, Default)]
struct KeyStore {
    width: usize,
    keys: Vec<u32>,
    table: HashTable<u32>,
}

impl KeyStore {
    fn new(width: usize) -> Self {
        KeyStore { width, keys: Vec::new(), table: HashTable::new() }
    }

    fn len(&self) -> usize {
        if self.width == 0 {
            0
        } else {
            self.keys.len() / self.width
        }
    }

    fn key(&self, i: usize) -> &[u32] {
        &self.keys[i * self.width..(i + 1) * self.width]
    }

    fn find(&self, k: &[u32]) -> Option<usize> {
        self.table.find(hash_key(k), |&i| self.key(i as usize) == k).map(|&i| i as usize)
    }

    fn insert(&mut self, k: &[u32]) -> bool {
        if self.find(k).is_some() {
            return false;
        }
        let idx = self.len() as u32;
        self.keys.extend_from_slice(k);
        let (keys, w) = (&self.keys, self.width);
        self.table.insert_unique(hash_key(k), idx, |&i| hash_key(&keys[i as usize * w..(i as usize + 1) * w]));
        true
    }

    fn sorted(self) -> KeyStore {
        let mut ks: Vec<&[u32]> = self.keys.chunks(self.width.max(1)).collect();
        ks.sort_unstable();
        let mut out = KeyStore::new(self.width);
        for k in ks {
            out.insert(k);
        }
        out
    }
}

/// Canonical point list of a subspace (or form) action, lexicographically ordered.
#[derive(Clone)]
pub struct PointSet {
    geometry: Geometry,
    kind: PointKind,
    store: KeyStore,
}

impl std::fmt::Debug for PointSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PointSet({:?}, {} points)", self.kind, self.len())
    }
}

fn rref_key(field: &Field, rows: &[Vec<u32>]) -> (Vec<u32>, usize) {
    let mut m = Matrix::from_rows(rows).unwrap();
    let r = field.rref(&mut m).len();
    (m.entries().to_vec(), r)
}

/// All m-subspaces of GF(q)^n as RREF keys (unsorted).
fn all_subspaces(field: &Field, n: usize, m: usize, mut visit: impl FnMut(&[u32])) {
    let q = field.q() as u64;
    let mut pivots: Vec<usize> = (0..m).collect();
    loop {
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..n {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let total = q.pow(free.len() as u32);
        let mut key = vec![0u32; m * n];
        for code in 0..total {
            key.iter_mut().for_each(|x| *x = 0);
            for (r, &pc) in pivots.iter().enumerate() {
                key[r * n + pc] = 1;
            }
            let mut c = code;
            for &(r, col) in &free {
                key[r * n + col] = (c % q) as u32;
                c /= q;
            }
            visit(&key);
        }
        // next combination
        let mut i = m;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < n - m + i {
                pivots[i] += 1;
                for j in i + 1..m {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
        if m == 0 {
            return;
        }
    }
}

impl PointSet {
    pub fn enumerate(geometry: Geometry, kind: PointKind, budget: usize) -> Result<Self> {
        let n = geometry.n();
        let field = geometry.field.clone();
        let q = field.q() as u64;
        let check_all = |m: usize| -> Result<()> {
            let count = gaussian_binomial(n as u64, m as u64, q)?;
            match count.to_usize() {
                Some(c) if c <= budget => Ok(()),
                _ => Err(Error::PointBudget(count.to_u128().unwrap_or(u128::MAX))),
            }
        };
        let rows_of = |key: &[u32], m: usize| -> Vec<Vec<u32>> { key.chunks(n).take(m).map(|c| c.to_vec()).collect() };
        let store = match kind {
            PointKind::Subspaces(m) => {
                if m == 0 || m >= n {
                    return Err(invalid("need 0 < m < n"));
                }
                check_all(m)?;
                let mut s = KeyStore::new(m * n);
                all_subspaces(&field, n, m, |k| {
                    s.insert(k);
                });
                s
            }
            PointKind::TotallySingular(m) => {
                if geometry.kind() == FormKind::Linear {
                    return PointSet::enumerate(geometry, PointKind::Subspaces(m), budget);
                }
                if m == 0 || 2 * m > n {
                    return Err(invalid("totally singular m-spaces need 0 < m ≤ n/2"));
                }
                check_all(1)?;
                let mut s1 = KeyStore::new(n);
                all_subspaces(&field, n, 1, |k| {
                    if geometry.is_singular(k) {
                        s1.insert(k);
                    }
                });
                let s1 = s1.sorted();
                let mut level = s1.clone();
                for d in 2..=m {
                    let mut next = KeyStore::new(d * n);
                    for u in 0..level.len() {
                        let rows = rows_of(level.key(u), d - 1);
                        let funcs: Vec<Vec<u32>> = rows.iter().map(|r| geometry.functional(r)).collect();
                        for p in 0..s1.len() {
                            let pv = s1.key(p);
                            if funcs.iter().any(|fv| field.dot(pv, fv) != 0) {
                                continue;
                            }
                            let mut all = rows.clone();
                            all.push(pv.to_vec());
                            let (key, r) = rref_key(&field, &all);
                            if r == d {
                                next.insert(&key);
                                if next.len() > budget {
                                    return Err(Error::PointBudget(next.len() as u128));
                                }
                            }
                        }
                    }
                    level = next;
                }
                level
            }
            PointKind::Nondegenerate { m, eta } => {
                if m == 0 || m >= n {
                    return Err(invalid("need 0 < m < n"));
                }
                check_all(m)?;
                let quadratic = geometry.kind() == FormKind::Quadratic;
                let whole = geometry.standard_basis();
                let mut s = KeyStore::new(m * n);
                let mut err = None;
                all_subspaces(&field, n, m, |k| {
                    if err.is_some() {
                        return;
                    }
                    let rows = rows_of(k, m);
                    if !geometry.is_nondegenerate(&rows) {
                        return;
                    }
                    if quadratic && field.p() == 2 && m % 2 == 1 {
                        err = Some(invalid("odd-dimensional nondegenerate spaces in characteristic 2"));
                        return;
                    }
                    let ok = match (eta, quadratic) {
                        (None, _) | (_, false) => true,
                        (Some(e), true) => {
                            let target = if m % 2 == 0 { rows.clone() } else { geometry.perp_within(&rows, &whole) };
                            geometry.witt_type(&target).map(|t| t == e).unwrap_or(false)
                        }
                    };
                    if ok {
                        s.insert(k);
                    }
                });
                if let Some(e) = err {
                    return Err(e);
                }
                s
            }
            PointKind::Nonsingular1 | PointKind::SquareDiscriminant1 => {
                if geometry.kind() != FormKind::Quadratic {
                    return Err(invalid("needs a quadratic form"));
                }
                let even = field.p() == 2;
                if even != (kind == PointKind::Nonsingular1) {
                    return Err(invalid("nonsingular points need q even; square-discriminant points need q odd"));
                }
                check_all(1)?;
                let mut s = KeyStore::new(n);
                all_subspaces(&field, n, 1, |k| {
                    let v = geometry.quad(k);
                    if v != 0 && (even || field.is_square(v)) {
                        s.insert(k);
                    }
                });
                s
            }
            PointKind::Flags(m) => {
                if m == 0 || 2 * m >= n {
                    return Err(invalid("flags need 1 ≤ m < n/2"));
                }
                check_all(n - m)?;
                let mut s = KeyStore::new(n * n);
                let mut ws = Vec::new();
                all_subspaces(&field, n, n - m, |k| ws.push(k.to_vec()));
                for w in ws {
                    let wrows = rows_of(&w, n - m);
                    all_subspaces(&field, n - m, m, |c| {
                        let urows: Vec<Vec<u32>> = c
                            .chunks(n - m)
                            .map(|coef| {
                                let mut v = vec![0u32; n];
                                for (a, r) in coef.iter().zip(&wrows) {
                                    v = field.vec_add(&v, &field.vec_scale(*a, r));
                                }
                                v
                            })
                            .collect();
                        let (uk, _) = rref_key(&field, &urows);
                        let mut key = uk;
                        key.extend_from_slice(&w);
                        s.insert(&key);
                    });
                }
                s
            }
            PointKind::QuadraticForms(eps) => {
                if geometry.kind() != FormKind::Symplectic || field.p() != 2 {
                    return Err(invalid("quadratic-form points need a symplectic form with q even"));
                }
                let total = q.pow(n as u32);
                if total > budget as u64 {
                    return Err(Error::PointBudget(total as u128));
                }
                let mut s = KeyStore::new(n);
                for code in 0..total {
                    let c: Vec<u32> = (0..n).map(|i| ((code / q.pow(i as u32)) % q) as u32).collect();
                    if quadratic_form_type(&geometry, &c)? == eps {
                        s.insert(&c);
                    }
                }
                s
            }
        };
        Ok(PointSet { geometry, kind, store: store.sorted() })
    }

    pub fn len(&self) -> usize {
        self.store.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn kind(&self) -> PointKind {
        self.kind
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    pub fn key(&self, i: usize) -> &[u32] {
        self.store.key(i)
    }

    pub fn index_of(&self, key: &[u32]) -> Option<usize> {
        self.store.find(key)
    }

    fn dims(&self) -> Vec<usize> {
        match self.kind {
            PointKind::Subspaces(m) | PointKind::TotallySingular(m) | PointKind::Nondegenerate { m, .. } => vec![m],
            PointKind::Nonsingular1 | PointKind::SquareDiscriminant1 => vec![1],
            PointKind::Flags(m) => vec![m, self.geometry.n() - m],
            PointKind::QuadraticForms(_) => vec![],
        }
    }

    fn image_key(&self, x: &Semilinear, xinv: Option<&Semilinear>, key: &[u32]) -> Vec<u32> {
        let f = &self.geometry.field;
        let n = self.geometry.n();
        if let PointKind::QuadraticForms(_) = self.kind {
            let xinv = xinv.expect("inverse supplied");
            let g = form_geometry(&self.geometry, key);
            return self.geometry.standard_basis().iter().map(|e| g.quad(&f.apply(xinv, e))).collect();
        }
        let mut out = Vec::with_capacity(key.len());
        let mut off = 0;
        for d in self.dims() {
            let rows: Vec<Vec<u32>> = key[off..off + d * n].chunks(n).map(|r| f.apply(x, r)).collect();
            out.extend(rref_key(f, &rows).0);
            off += d * n;
        }
        out
    }

    /// Permutation of point indices induced by x.
    pub fn induced_permutation(&self, x: &Semilinear) -> Result<Permutation> {
        if x.dim() != self.geometry.n() {
            return Err(Error::DegreeMismatch(self.geometry.n(), x.dim()));
        }
        let xinv = match self.kind {
            PointKind::QuadraticForms(_) => {
                if x.frob != 0 {
                    return Err(Error::Unsupported("field automorphisms on quadratic-form points".into()));
                }
                Some(self.geometry.field.invert(x)?)
            }
            _ => None,
        };
        let mut images = Vec::with_capacity(self.len());
        for i in 0..self.len() {
            let k = self.image_key(x, xinv.as_ref(), self.key(i));
            let j = self
                .index_of(&k)
                .ok_or_else(|| Error::PointOutside(format!("point {i} maps outside the action")))?;
            images.push(j as u32);
        }
        Ok(Permutation::from_images_unchecked(images))
    }

    /// Fixed points of x without building the whole permutation.
    pub fn fixed_point_count(&self, x: &Semilinear) -> Result<usize> {
        Ok(self.induced_permutation(x)?.fixed_point_count())
    }
}

fn form_geometry(base: &Geometry, coeffs: &[u32]) -> Geometry {
    let mut form = base.form.clone();
    form.kind = FormKind::Quadratic;
    form.quad = Some(coeffs.to_vec());
    Geometry::new(base.field.clone(), form)
}

/// Witt type of the quadratic form with Q(eᵢ) = coeffs[i] polarizing to the symplectic form.
pub fn quadratic_form_type(symplectic: &Geometry, coeffs: &[u32]) -> Result<Sign> {
    let g = form_geometry(symplectic, coeffs);
    g.witt_type(&g.standard_basis())
}

impl Geometry {
    /// Column vector c with B(x, u) = x·c.
    pub fn functional(&self, u: &[u32]) -> Vec<u32> {
        let n = self.n();
        let f = &self.field;
        let g = &self.form.gram;
        (0..n)
            .map(|i| {
                (0..n).fold(0, |acc, j| {
                    let uj = match self.form.kind {
                        FormKind::Unitary => f.conj(u[j]).unwrap(),
                        _ => u[j],
                    };
                    f.add(acc, f.mul(g.get(i, j), uj))
                })
            })
            .collect()
    }
}

/// Number of m-spaces fixed by (Λ^a, I_e), Λ irreducible of degree i, for m = i + k with 0 ≤ k < i.
pub fn fixed_mspaces_semisimple(e: u64, a: u64, i: u64, m: u64, q: u64) -> Result<num_bigint::BigUint> {
    if i == 0 || m < i || m - i >= i {
        return Err(Error::NotApplicable(format!("needs 0 ≤ m − i < i (m = {m}, i = {i})")));
    }
    let k = m - i;
    let base = gaussian_binomial(e, m, q)?;
    let qq = num_bigint::BigUint::from(q);
    let ratio = (qq.pow((i * a) as u32) - 1u32) / (qq.pow(i as u32) - 1u32);
    Ok(base + gaussian_binomial(e, k, q)? * ratio)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf_linear::field::Field;

    fn geo(kind: FormKind, n: usize, q: u64, eps: Option<Sign>) -> Geometry {
        Geometry::standard(kind, n, Field::of_order(q).unwrap(), eps).unwrap()
    }

    #[test]
    fn counts() {
        let sp = geo(FormKind::Symplectic, 6, 2, None);
        assert_eq!(PointSet::enumerate(sp.clone(), PointKind::TotallySingular(1), 1 << 20).unwrap().len(), 63);
        assert_eq!(PointSet::enumerate(sp.clone(), PointKind::TotallySingular(2), 1 << 20).unwrap().len(), 315);
        assert_eq!(PointSet::enumerate(sp.clone(), PointKind::TotallySingular(3), 1 << 20).unwrap().len(), 135);
        assert_eq!(PointSet::enumerate(sp.clone(), PointKind::QuadraticForms(Sign::Minus), 1 << 20).unwrap().len(), 28);
        assert_eq!(PointSet::enumerate(sp, PointKind::QuadraticForms(Sign::Plus), 1 << 20).unwrap().len(), 36);
        let u = geo(FormKind::Unitary, 4, 4, None);
        assert_eq!(PointSet::enumerate(u.clone(), PointKind::Nondegenerate { m: 1, eta: None }, 1 << 20).unwrap().len(), 40);
        assert_eq!(PointSet::enumerate(u.clone(), PointKind::TotallySingular(1), 1 << 20).unwrap().len(), 45);
        assert_eq!(PointSet::enumerate(u, PointKind::TotallySingular(2), 1 << 20).unwrap().len(), 27);
        let o = geo(FormKind::Quadratic, 6, 2, Some(Sign::Minus));
        assert_eq!(PointSet::enumerate(o, PointKind::TotallySingular(1), 1 << 20).unwrap().len(), 27);
        let l = geo(FormKind::Linear, 3, 2, None);
        assert_eq!(PointSet::enumerate(l, PointKind::Flags(1), 1 << 20).unwrap().len(), 21);
    }

    #[test]
    fn identity_and_scalars_act_trivially() {
        let g = geo(FormKind::Linear, 3, 4, None);
        let pts = PointSet::enumerate(g.clone(), PointKind::Subspaces(1), 1 << 20).unwrap();
        let id = Semilinear::linear(Matrix::identity(3));
        assert!(pts.induced_permutation(&id).unwrap().is_identity());
        let s = Semilinear::linear(g.field.mat_scale(2, &Matrix::identity(3)));
        assert!(pts.induced_permutation(&s).unwrap().is_identity());
    }

    #[test]
    fn fixed_mspace_examples() {
        assert_eq!(fixed_mspaces_semisimple(2, 1, 2, 2, 2).unwrap(), 2u32.into());
        assert_eq!(fixed_mspaces_semisimple(0, 2, 2, 2, 2).unwrap(), 5u32.into());
        assert_eq!(fixed_mspaces_semisimple(3, 1, 2, 3, 2).unwrap(), 8u32.into());
        assert!(fixed_mspaces_semisimple(3, 1, 2, 4, 2).is_err());
    }
}
