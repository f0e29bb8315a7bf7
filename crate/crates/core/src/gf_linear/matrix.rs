use serde::{Deserialize, Serialize};

use super::field::Field;
use crate::error::{invalid, Error, Result};

/// Dense matrix over a table field; rows act as vectors (v ↦ v·M).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(invalid("entry count does not match shape"));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(invalid("ragged rows"));
        }
        Ok(Matrix { rows: rows.len(), cols, entries: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[Matrix]) -> Matrix {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = Matrix::zero(n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.rows;
        }
        m
    }
}

impl Field {
    pub fn mat_mul(&self, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        if a.cols != b.rows {
            return Err(Error::DegreeMismatch(a.cols, b.rows));
        }
        let mut c = Matrix::zero(a.rows, b.cols);
        for i in 0..a.rows {
            for k in 0..a.cols {
                let x = a.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..b.cols {
                    let v = self.add(c.get(i, j), self.mul(x, b.get(k, j)));
                    c.set(i, j, v);
                }
            }
        }
        Ok(c)
    }

    pub fn mat_add(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let entries = a.entries.iter().zip(&b.entries).map(|(&x, &y)| self.add(x, y)).collect();
        Matrix { rows: a.rows, cols: a.cols, entries }
    }

    pub fn mat_sub(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let entries = a.entries.iter().zip(&b.entries).map(|(&x, &y)| self.sub(x, y)).collect();
        Matrix { rows: a.rows, cols: a.cols, entries }
    }

    pub fn mat_scale(&self, s: u32, a: &Matrix) -> Matrix {
        Matrix { rows: a.rows, cols: a.cols, entries: a.entries.iter().map(|&x| self.mul(s, x)).collect() }
    }

    /// Applies y ↦ y^(p^k) to every entry.
    pub fn mat_frobenius(&self, a: &Matrix, k: u32) -> Matrix {
        Matrix { rows: a.rows, cols: a.cols, entries: a.entries.iter().map(|&x| self.frobenius_pow(x, k)).collect() }
    }

    pub fn vec_mat(&self, v: &[u32], m: &Matrix) -> Vec<u32> {
        let mut out = vec![0u32; m.cols];
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let row = m.row(i);
            for (o, &y) in out.iter_mut().zip(row) {
                *o = self.add(*o, self.mul(x, y));
            }
        }
        out
    }

    pub fn dot(&self, u: &[u32], v: &[u32]) -> u32 {
        u.iter().zip(v).fold(0, |a, (&x, &y)| self.add(a, self.mul(x, y)))
    }

    pub fn vec_add(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        u.iter().zip(v).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn vec_scale(&self, s: u32, v: &[u32]) -> Vec<u32> {
        v.iter().map(|&x| self.mul(s, x)).collect()
    }

    /// Reduced row-echelon form in place; zero rows are dropped. Returns pivot columns.
    pub fn rref(&self, m: &mut Matrix) -> Vec<usize> {
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| m.get(i, c) != 0) else { continue };
            if piv != r {
                for j in 0..cols {
                    m.entries.swap(piv * cols + j, r * cols + j);
                }
            }
            let inv = self.inv(m.get(r, c)).unwrap();
            for j in 0..cols {
                let v = self.mul(inv, m.get(r, j));
                m.set(r, j, v);
            }
            for i in 0..rows {
                let f = m.get(i, c);
                if i != r && f != 0 {
                    for j in 0..cols {
                        let v = self.sub(m.get(i, j), self.mul(f, m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.entries.truncate(r * cols);
        m.rows = r;
        pivots
    }

    pub fn rank(&self, m: &Matrix) -> usize {
        let mut t = m.clone();
        self.rref(&mut t).len()
    }

    pub fn inverse(&self, m: &Matrix) -> Result<Matrix> {
        let n = m.rows;
        if m.cols != n {
            return Err(invalid("inverse of a non-square matrix"));
        }
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, m.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let piv = self.rref(&mut aug);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(invalid("singular matrix"));
        }
        let mut out = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(out)
    }

    /// Basis of {c : c·K = 0}.
    pub fn left_kernel(&self, k: &Matrix) -> Matrix {
        let mut t = k.transpose();
        let piv = self.rref(&mut t);
        let n = k.rows;
        let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
        let mut basis = Matrix::zero(free.len(), n);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, 1);
            for (r, &pc) in piv.iter().enumerate() {
                basis.set(b, pc, self.neg(t.get(r, fc)));
            }
        }
        basis
    }

    pub fn mat_pow(&self, m: &Matrix, mut e: u64) -> Matrix {
        let mut base = m.clone();
        let mut acc = Matrix::identity(m.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mat_mul(&acc, &base).unwrap();
            }
            base = self.mat_mul(&base, &base).unwrap();
            e >>= 1;
        }
        acc
    }
}

/// v ↦ (v^(p^frob))·matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Semilinear {
    pub matrix: Matrix,
    pub frob: u32,
}

impl Semilinear {
    pub fn linear(matrix: Matrix) -> Self {
        Semilinear { matrix, frob: 0 }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.frob == 0 && self.matrix == Matrix::identity(self.matrix.rows())
    }
}

impl Field {
    pub fn apply(&self, x: &Semilinear, v: &[u32]) -> Vec<u32> {
        if x.frob == 0 {
            return self.vec_mat(v, &x.matrix);
        }
        let w: Vec<u32> = v.iter().map(|&a| self.frobenius_pow(a, x.frob)).collect();
        self.vec_mat(&w, &x.matrix)
    }

    /// `a` followed by `b`.
    pub fn compose(&self, a: &Semilinear, b: &Semilinear) -> Semilinear {
        let m = self.mat_mul(&self.mat_frobenius(&a.matrix, b.frob), &b.matrix).unwrap();
        Semilinear { matrix: m, frob: (a.frob + b.frob) % self.f() }
    }

    pub fn invert(&self, a: &Semilinear) -> Result<Semilinear> {
        let back = (self.f() - a.frob % self.f()) % self.f();
        let m = self.inverse(&self.mat_frobenius(&a.matrix, back))?;
        Ok(Semilinear { matrix: m, frob: back })
    }

    pub fn semilinear_pow(&self, a: &Semilinear, e: u64) -> Semilinear {
        let mut acc = Semilinear::linear(Matrix::identity(a.dim()));
        for _ in 0..e {
            acc = self.compose(&acc, a);
        }
        acc
    }

    /// Order of the map, or order modulo scalars when `projective` is set.
    pub fn semilinear_order(&self, a: &Semilinear, projective: bool, limit: u64) -> Option<u64> {
        let n = a.dim();
        let mut acc = a.clone();
        for k in 1..=limit {
            if acc.frob == 0 {
                let s = acc.matrix.get(0, 0);
                let scalar = s != 0 && acc.matrix == self.mat_scale(s, &Matrix::identity(n));
                if acc.matrix == Matrix::identity(n) || (projective && scalar) {
                    return Some(k);
                }
            }
            acc = self.compose(&acc, a);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_kernel() {
        let f = Field::of_order(3).unwrap();
        let m = Matrix::from_rows(&[vec![1, 2, 0], vec![0, 1, 1], vec![1, 0, 2]]).unwrap();
        let inv = f.inverse(&m).unwrap();
        assert_eq!(f.mat_mul(&m, &inv).unwrap(), Matrix::identity(3));
        let k = Matrix::from_rows(&[vec![1, 1], vec![2, 2], vec![0, 1]]).unwrap();
        let ker = f.left_kernel(&k);
        assert_eq!(ker.rows(), 1);
        assert!(f.vec_mat(ker.row(0), &k).iter().all(|&x| x == 0));
    }

    #[test]
    fn semilinear_composition() {
        let f = Field::of_order(4).unwrap();
        let a = Semilinear { matrix: Matrix::from_rows(&[vec![2, 1], vec![0, 3]]).unwrap(), frob: 1 };
        let b = Semilinear { matrix: Matrix::from_rows(&[vec![1, 0], vec![3, 1]]).unwrap(), frob: 1 };
        let ab = f.compose(&a, &b);
        for v in [[1u32, 2], [3, 3], [0, 1]] {
            assert_eq!(f.apply(&ab, &v), f.apply(&b, &f.apply(&a, &v)));
            let back = f.apply(&f.invert(&a).unwrap(), &f.apply(&a, &v));
            assert_eq!(back, v.to_vec());
        }
    }
}
