use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::form::{FormKind, Geometry, Sign};
use super::matrix::{Matrix, Semilinear};
use crate::error::{invalid, Error, Result};

/// One block of the canonical form of an element on the natural module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Block {
    /// `mult` unipotent Jordan blocks of size `size`.
    Jordan { size: usize, mult: usize },
    /// Eigenvalue ω^power, ω a fixed primitive r-th root of unity.
    Scalar { power: u32, mult: usize },
    /// `mult` copies of an irreducible block of the given degree; `paired`
    /// adds the dual block on a complementary totally singular space.
    Irreducible { degree: usize, mult: usize, paired: bool },
    NegIdentity { mult: usize },
}

impl Block {
    pub fn dim(&self) -> usize {
        match *self {
            Block::Jordan { size, mult } => size * mult,
            Block::Scalar { mult, .. } | Block::NegIdentity { mult } => mult,
            Block::Irreducible { degree, mult, paired } => degree * mult * if paired { 2 } else { 1 },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Discriminant {
    Square,
    Nonsquare,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Automorphism {
    /// The Frobenius map of order r on the field of definition.
    Field,
    /// The involutory graph automorphism of a unitary group.
    Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElementSpec {
    #[serde(default)]
    pub blocks: Vec<Block>,
    pub order: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discriminant: Option<Discriminant>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenspace_type: Option<Sign>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<Automorphism>,
}

impl ElementSpec {
    pub fn new(blocks: Vec<Block>, order: u64) -> Self {
        ElementSpec { blocks, order, discriminant: None, eigenspace_type: None, automorphism: None }
    }

    /// (J₂, J₁^{n−2}).
    pub fn transvection(n: usize, p: u64) -> Self {
        let mut b = vec![Block::Jordan { size: 2, mult: 1 }];
        if n > 2 {
            b.push(Block::Jordan { size: 1, mult: n - 2 });
        }
        ElementSpec::new(b, p)
    }

    /// (ω^power, I_{n−mult}) style: `mult` eigenvalues ω, the rest 1.
    pub fn scalar(n: usize, mult: usize, r: u64) -> Self {
        let mut b = vec![Block::Scalar { power: 1, mult }];
        if n > mult {
            b.push(Block::Scalar { power: 0, mult: n - mult });
        }
        ElementSpec::new(b, r)
    }

    /// (Λ, I_{n−i}).
    pub fn irreducible(n: usize, degree: usize, r: u64) -> Self {
        let mut b = vec![Block::Irreducible { degree, mult: 1, paired: false }];
        if n > degree {
            b.push(Block::Scalar { power: 0, mult: n - degree });
        }
        ElementSpec::new(b, r)
    }

    /// (−I_{n−1}, I₁).
    pub fn reflection(n: usize) -> Self {
        ElementSpec::new(vec![Block::NegIdentity { mult: n - 1 }, Block::Scalar { power: 0, mult: 1 }], 2)
    }

    pub fn automorphism(kind: Automorphism, r: u64) -> Self {
        ElementSpec { automorphism: Some(kind), ..ElementSpec::new(Vec::new(), r) }
    }

    pub fn with_discriminant(mut self, d: Discriminant) -> Self {
        self.discriminant = Some(d);
        self
    }

    pub fn with_eigenspace_type(mut self, s: Sign) -> Self {
        self.eigenspace_type = Some(s);
        self
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(Block::dim).sum()
    }

    pub fn is_unipotent(&self) -> bool {
        !self.blocks.is_empty() && self.blocks.iter().all(|b| matches!(b, Block::Jordan { .. }))
    }

    /// Structural checks against the dimension and characteristic.
    pub fn validate(&self, n: usize, p: u64) -> Vec<String> {
        let mut v = Vec::new();
        if self.automorphism.is_some() {
            if !self.blocks.is_empty() {
                v.push("automorphism specs carry no blocks".to_string());
            }
            return v;
        }
        if self.dim() != n {
            v.push(format!("block dimensions sum to {} not n = {n}", self.dim()));
        }
        if self.blocks.iter().any(|b| matches!(b, Block::Jordan { size, .. } if *size > 1)) {
            if self.order != p {
                v.push(format!("unipotent spec needs r = p = {p}"));
            }
        } else if self.order == p {
            v.push(format!("semisimple spec needs r ≠ p = {p}"));
        }
        v
    }
}

impl fmt::Display for ElementSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(a) = self.automorphism {
            return f.write_str(match a {
                Automorphism::Field => "phi",
                Automorphism::Graph => "tau",
            });
        }
        let exp = |m: usize| if m == 1 { String::new() } else { format!("^{m}") };
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| match *b {
                Block::Jordan { size, mult } => format!("J{size}{}", exp(mult)),
                Block::Scalar { power: 0, mult } => format!("I{mult}"),
                Block::Scalar { power: 1, mult: 1 } => "w".to_string(),
                Block::Scalar { power: 1, mult } => format!("wI{mult}"),
                Block::Scalar { power, mult } => format!("w^{power}I{mult}"),
                Block::Irreducible { mult, paired: false, .. } => format!("L{}", exp(mult)),
                Block::Irreducible { mult, paired: true, .. } => format!("(L,L*){}", exp(mult)),
                Block::NegIdentity { mult } => format!("-I{mult}"),
            })
            .collect();
        write!(f, "({})", parts.join(","))?;
        match (self.discriminant, self.eigenspace_type) {
            (Some(Discriminant::Square), _) => f.write_str("[sq]"),
            (Some(Discriminant::Nonsquare), _) => f.write_str("[nsq]"),
            (None, Some(s)) => write!(f, "[{s}]"),
            _ => Ok(()),
        }
    }
}

/// ν(x): n minus the dimension of the largest eigenspace over the algebraic closure.
pub fn nu_of_spec(spec: &ElementSpec) -> usize {
    let mut eig: BTreeMap<String, usize> = BTreeMap::new();
    for (idx, b) in spec.blocks.iter().enumerate() {
        match *b {
            Block::Jordan { mult, .. } => *eig.entry("1".into()).or_default() += mult,
            Block::Scalar { power: 0, mult } => *eig.entry("1".into()).or_default() += mult,
            Block::Scalar { power, mult } => *eig.entry(format!("w{power}")).or_default() += mult,
            Block::NegIdentity { mult } => *eig.entry("-1".into()).or_default() += mult,
            Block::Irreducible { degree, mult, paired } => {
                for k in 0..degree * if paired { 2 } else { 1 } {
                    *eig.entry(format!("L{idx}.{k}")).or_default() += mult;
                }
            }
        }
    }
    spec.dim() - eig.values().copied().max().unwrap_or(0)
}

fn jordan_block(k: usize) -> Matrix {
    let mut m = Matrix::identity(k);
    for i in 0..k.saturating_sub(1) {
        m.set(i, i + 1, 1);
    }
    m
}

/// Companion matrix of a monic polynomial (coefficients low degree first, leading 1 omitted).
fn companion(coeffs: &[u32], field: &Field) -> Matrix {
    let i = coeffs.len();
    let mut m = Matrix::zero(i, i);
    for r in 0..i.saturating_sub(1) {
        m.set(r, r + 1, 1);
    }
    for (c, &a) in coeffs.iter().enumerate() {
        m.set(i - 1, c, field.neg(a));
    }
    m
}

fn has_order(field: &Field, m: &Matrix, r: u64) -> bool {
    let id = Matrix::identity(m.rows());
    *m != id && field.mat_pow(m, r) == id
}

/// Smallest i with r | q^i − 1.
pub fn multiplicative_degree(q: u64, r: u64) -> Option<usize> {
    if r <= 1 || q % r == 0 {
        return None;
    }
    let mut x = q % r;
    for i in 1..=r as usize {
        if x == 1 {
            return Some(i);
        }
        x = (x * q) % r;
    }
    None
}

/// A companion matrix of degree i and order r with no eigenvalue in GF(q).
pub fn irreducible_block(field: &Field, degree: usize, r: u64) -> Result<Matrix> {
    if multiplicative_degree(field.q() as u64, r) != Some(degree) {
        return Err(Error::InfeasibleSpec(format!(
            "no irreducible element of order {r} in GL_{degree}({})",
            field.q()
        )));
    }
    let q = field.q() as u64;
    let id = Matrix::identity(degree);
    for code in 0..q.pow(degree as u32) {
        let coeffs: Vec<u32> = (0..degree).map(|k| ((code / q.pow(k as u32)) % q) as u32).collect();
        if coeffs[0] == 0 {
            continue;
        }
        let c = companion(&coeffs, field);
        if has_order(field, &c, r) && field.inverse(&field.mat_sub(&c, &id)).is_ok() {
            return Ok(c);
        }
    }
    Err(Error::InfeasibleSpec(format!("no companion block of order {r}")))
}

fn field_value(field: &Field, b: &Block, r: u64, kind: FormKind) -> Result<u32> {
    match *b {
        Block::Scalar { power: 0, .. } | Block::Jordan { size: 1, .. } => Ok(1),
        Block::NegIdentity { .. } => Ok(field.neg(1)),
        Block::Scalar { power, .. } => {
            let w = field.root_of_unity(r).ok_or_else(|| {
                Error::InfeasibleSpec(format!("no primitive {r}-th root of unity in GF({})", field.q()))
            })?;
            let v = field.pow(w, power as u64);
            let ok = match kind {
                FormKind::Linear => true,
                FormKind::Unitary => field.mul(v, field.conj(v)?) == 1,
                _ => v == 1 || v == field.neg(1),
            };
            if !ok {
                return Err(Error::InfeasibleSpec(format!("eigenvalue of order {r} is not an isometry")));
            }
            Ok(v)
        }
        _ => unreachable!("not a scalar block"),
    }
}

fn build_linear(spec: &ElementSpec, field: &Field) -> Result<Matrix> {
    let mut blocks = Vec::new();
    for b in &spec.blocks {
        match *b {
            Block::Jordan { size, mult } => (0..mult).for_each(|_| blocks.push(jordan_block(size))),
            Block::Irreducible { degree, mult, paired } => {
                let c = irreducible_block(field, degree, spec.order)?;
                let dual = field.inverse(&c)?.transpose();
                for _ in 0..mult {
                    blocks.push(c.clone());
                    if paired {
                        blocks.push(dual.clone());
                    }
                }
            }
            Block::Scalar { mult, .. } | Block::NegIdentity { mult } => {
                let v = field_value(field, b, spec.order, FormKind::Linear)?;
                blocks.push(field.mat_scale(v, &Matrix::identity(mult)));
            }
        }
    }
    Ok(Matrix::direct_sum(&blocks))
}

/// Vectors of span(rows) in coefficient-code order, lazily.
fn span_iter<'a>(field: &'a Field, rows: &'a [Vec<u32>]) -> impl Iterator<Item = Vec<u32>> + 'a {
    let q = field.q() as u64;
    let n = rows.first().map_or(0, |r| r.len());
    (1..q.pow(rows.len() as u32)).map(move |mut code| {
        let mut v = vec![0u32; n];
        for r in rows {
            let c = (code % q) as u32;
            code /= q;
            if c != 0 {
                v = field.vec_add(&v, &field.vec_scale(c, r));
            }
        }
        v
    })
}

fn normalized(v: &[u32]) -> bool {
    v.iter().find(|&&x| x != 0) == Some(&1)
}

/// Restriction of the form to span(u) in the coordinates of u.
struct Piece {
    basis: Vec<Vec<u32>>,
    action: Matrix,
}

struct Builder<'a> {
    geo: &'a Geometry,
    field: &'a Field,
    remaining: Vec<Vec<u32>>,
    pieces: Vec<Piece>,
}

impl<'a> Builder<'a> {
    fn carve(&mut self, basis: Vec<Vec<u32>>, action: Matrix) {
        self.remaining = self.geo.perp_within(&basis, &self.remaining);
        self.pieces.push(Piece { basis, action });
    }

    /// First nonsingular-for-the-form 1-space of the remaining space meeting `ok`.
    fn find_line(&self, ok: impl Fn(&[u32]) -> bool) -> Option<Vec<u32>> {
        span_iter(self.field, &self.remaining)
            .filter(|v| normalized(v))
            .find(|v| self.geo.bil(v, v) != 0 && ok(v))
    }

    /// First nondegenerate 2-space of the remaining space meeting `ok`.
    fn find_plane(&self, ok: impl Fn(&[Vec<u32>]) -> bool) -> Option<Vec<Vec<u32>>> {
        let vs: Vec<Vec<u32>> = span_iter(self.field, &self.remaining).filter(|v| normalized(v)).collect();
        for (a, v) in vs.iter().enumerate() {
            for w in &vs[a + 1..] {
                let rows = vec![v.clone(), w.clone()];
                if self.field.rank(&Matrix::from_rows(&rows).unwrap()) == 2 && self.geo.is_nondegenerate(&rows) && ok(&rows) {
                    return Some(rows);
                }
            }
        }
        None
    }

    /// Isometries Y of span(basis) (in its coordinates) of order r satisfying `pred`.
    fn local_isometry(&self, basis: &[Vec<u32>], r: u64, pred: &dyn Fn(&Matrix) -> bool) -> Option<Matrix> {
        let d = basis.len();
        let f = self.field;
        let q = f.q() as u64;
        let gram = self.geo.gram_of(basis);
        let quads: Option<Vec<u32>> = (self.geo.kind() == FormKind::Quadratic).then(|| basis.iter().map(|b| self.geo.quad(b)).collect());
        let to_space = |c: &[u32]| -> Vec<u32> {
            let mut v = vec![0u32; self.geo.n()];
            for (a, b) in c.iter().zip(basis) {
                if *a != 0 {
                    v = f.vec_add(&v, &f.vec_scale(*a, b));
                }
            }
            v
        };
        for code in 0..q.pow((d * d) as u32) {
            let entries: Vec<u32> = (0..d * d).map(|k| ((code / q.pow(k as u32)) % q) as u32).collect();
            let y = Matrix::new(d, d, entries).unwrap();
            if !has_order(f, &y, r) {
                continue;
            }
            let ok_form = (0..d).all(|i| {
                (0..d).all(|j| self.geo.bil(&to_space(y.row(i)), &to_space(y.row(j))) == gram.get(i, j))
            });
            if !ok_form {
                continue;
            }
            if let Some(qs) = &quads {
                if (0..d).any(|i| self.geo.quad(&to_space(y.row(i))) != qs[i]) {
                    continue;
                }
            }
            if pred(&y) {
                return Some(y);
            }
        }
        None
    }

    fn special_plane(&mut self, r: u64, want_type: Option<Sign>, pred: &dyn Fn(&Matrix) -> bool, what: &str) -> Result<()> {
        let geo = self.geo;
        let found = self.find_plane(|rows| {
            let type_ok = match want_type {
                Some(t) => geo.witt_type(rows).map(|s| s == t).unwrap_or(false),
                None => true,
            };
            type_ok && self.local_isometry(rows, r, pred).is_some()
        });
        let plane = found.ok_or_else(|| Error::InfeasibleSpec(format!("no nondegenerate 2-space carries {what}")))?;
        let y = self.local_isometry(&plane, r, pred).unwrap();
        self.carve(plane, y);
        Ok(())
    }

    /// A nondegenerate d-space with scalar action v.
    fn scalar_space(&mut self, d: usize, v: u32, take_rest: bool) -> Result<()> {
        if take_rest {
            if self.remaining.len() != d {
                return Err(invalid("block dimensions do not fill the space"));
            }
            let basis = std::mem::take(&mut self.remaining);
            self.pieces.push(Piece { basis, action: self.field.mat_scale(v, &Matrix::identity(d)) });
            return Ok(());
        }
        let mut left = d;
        while left > 0 {
            let alternating = matches!(self.geo.kind(), FormKind::Symplectic)
                || (self.geo.kind() == FormKind::Quadratic && self.field.p() == 2);
            if !alternating {
                let line = self.find_line(|_| true).ok_or_else(|| Error::InfeasibleSpec("no nondegenerate 1-space".into()))?;
                self.carve(vec![line], Matrix::new(1, 1, vec![v]).unwrap());
                left -= 1;
            } else {
                if left < 2 {
                    return Err(Error::InfeasibleSpec("odd-dimensional block in an alternating space".into()));
                }
                let plane = self.find_plane(|_| true).ok_or_else(|| Error::InfeasibleSpec("no nondegenerate 2-space".into()))?;
                self.carve(plane, self.field.mat_scale(v, &Matrix::identity(2)));
                left -= 2;
            }
        }
        Ok(())
    }

    fn assemble(self) -> Result<Matrix> {
        let rows: Vec<Vec<u32>> = self.pieces.iter().flat_map(|p| p.basis.clone()).collect();
        let a = Matrix::from_rows(&rows)?;
        let x = Matrix::direct_sum(&self.pieces.iter().map(|p| p.action.clone()).collect::<Vec<_>>());
        let ainv = self.field.inverse(&a)?;
        self.field.mat_mul(&self.field.mat_mul(&ainv, &x)?, &a)
    }
}

fn build_automorphism(kind: Automorphism, r: u64, geo: &Geometry) -> Result<Semilinear> {
    let f = &geo.field;
    let n = geo.n();
    match kind {
        Automorphism::Field => {
            if f.f() as u64 % r != 0 || (geo.kind() == FormKind::Unitary && (f.f() as u64 / 2) % r != 0) {
                return Err(Error::InfeasibleSpec(format!("no field automorphism of order {r} over GF({})", f.q())));
            }
            Ok(Semilinear { matrix: Matrix::identity(n), frob: (f.f() as u64 / r) as u32 })
        }
        Automorphism::Graph => {
            if geo.kind() != FormKind::Unitary || r != 2 || n % 2 != 0 {
                return Err(Error::Unsupported("graph automorphisms are built for even-dimensional unitary groups".into()));
            }
            // v ↦ v^σ·diag(1,…,1,d,…,d) with d = −1 for odd q so that the fixed form is alternating.
            let half = f.f() / 2;
            let d = if f.p() == 2 { 1 } else { f.neg(1) };
            let mut m = Matrix::identity(n);
            for i in n / 2..n {
                m.set(i, i, d);
            }
            Ok(Semilinear { matrix: m, frob: half })
        }
    }
}

/// A form-preserving element realizing `spec` (verified by order and form checks).
pub fn build_element(spec: &ElementSpec, geo: &Geometry) -> Result<Semilinear> {
    let field = &geo.field;
    let n = geo.n();
    let r = spec.order;
    if let Some(kind) = spec.automorphism {
        let x = build_automorphism(kind, r, geo)?;
        let order = field.semilinear_order(&x, true, 64);
        if order != Some(r) || !geo.preserves_up_to_scalar(&x) {
            return Err(Error::InfeasibleSpec(format!("automorphism of order {r} not realized")));
        }
        return Ok(x);
    }
    let violations = spec.validate(n, field.p() as u64);
    if !violations.is_empty() {
        return Err(Error::InvalidSpec(violations.join("; ")));
    }
    let m = if geo.kind() == FormKind::Linear {
        build_linear(spec, field)?
    } else {
        build_form_element(spec, geo)?
    };
    let x = Semilinear::linear(m);
    if !has_order(field, &x.matrix, r) {
        return Err(Error::InfeasibleSpec(format!("construction for {spec} has the wrong order")));
    }
    if !geo.check_form_preservation(&x) {
        return Err(Error::FormMismatch(format!("construction for {spec} does not preserve the form")));
    }
    Ok(x)
}

fn build_form_element(spec: &ElementSpec, geo: &Geometry) -> Result<Matrix> {
    let field = &geo.field;
    let n = geo.n();
    let r = spec.order;
    let kind = geo.kind();
    let mut b = Builder { geo, field, remaining: geo.standard_basis(), pieces: Vec::new() };

    // Paired blocks take the outer hyperbolic pairs (eᵢ, e_{n−1−i}).
    let mut next_pair = 0usize;
    let mut scalars: Vec<(usize, u32, bool)> = Vec::new();
    let mut specials: Vec<&Block> = Vec::new();
    for blk in &spec.blocks {
        match *blk {
            Block::Irreducible { degree, mult, paired: true } => {
                let c = irreducible_block(field, degree, r)?;
                let cstar = match kind {
                    FormKind::Unitary => field.mat_frobenius(&c, field.f() / 2),
                    _ => c.clone(),
                };
                let dual = field.inverse(&cstar)?.transpose();
                for _ in 0..mult {
                    if 2 * (next_pair + degree) > n {
                        return Err(Error::InfeasibleSpec("not enough hyperbolic pairs".into()));
                    }
                    let e: Vec<Vec<u32>> = (next_pair..next_pair + degree).map(|i| b.remaining_unit(i)).collect();
                    let f: Vec<Vec<u32>> = (next_pair..next_pair + degree).map(|i| b.remaining_unit(n - 1 - i)).collect();
                    let mut basis = e;
                    basis.extend(f);
                    let action = Matrix::direct_sum(&[c.clone(), dual.clone()]);
                    b.carve(basis, action);
                    next_pair += degree;
                }
            }
            Block::Jordan { size: 1, mult } => scalars.push((mult, 1, true)),
            Block::Scalar { mult, .. } | Block::NegIdentity { mult } => {
                scalars.push((mult, field_value(field, blk, r, kind)?, matches!(blk, Block::Scalar { power: 0, .. })))
            }
            _ => specials.push(blk),
        }
    }

    for blk in specials {
        match *blk {
            Block::Jordan { size: 2, mult: 1 } => {
                let id = Matrix::identity(2);
                let pred = |y: &Matrix| field.rank(&field.mat_sub(y, &id)) == 1;
                b.special_plane(r, None, &pred, "a transvection")?;
            }
            Block::Jordan { size: 2, mult: 2 } => {
                // x ↦ x ± B(x,u)w ∓ B(x,w)u on totally singular orthogonal u, w.
                if next_pair + 2 > n / 2 {
                    return Err(Error::InfeasibleSpec("no totally singular 2-space left".into()));
                }
                let cols = [next_pair, next_pair + 1, n - 2 - next_pair, n - 1 - next_pair];
                let basis: Vec<Vec<u32>> = cols.iter().map(|&c| b.remaining_unit(c)).collect();
                let (u, w) = (basis[0].clone(), basis[1].clone());
                let mut found = None;
                for sign in [1u32, field.neg(1)] {
                    let mut rows = Vec::new();
                    for v in &basis {
                        let t = field.vec_add(v, &field.vec_scale(geo.bil(v, &u), &w));
                        let t = field.vec_add(&t, &field.vec_scale(field.mul(sign, geo.bil(v, &w)), &u));
                        rows.push(t);
                    }
                    let coords: Vec<Vec<u32>> = rows.iter().map(|t| cols.iter().map(|&c| t[c]).collect()).collect();
                    let y = Matrix::from_rows(&coords)?;
                    let ok = (0..4).all(|i| (0..4).all(|j| geo.bil(&rows[i], &rows[j]) == geo.bil(&basis[i], &basis[j])))
                        && (kind != FormKind::Quadratic || (0..4).all(|i| geo.quad(&rows[i]) == geo.quad(&basis[i])));
                    if ok && has_order(field, &y, r) {
                        found = Some(y);
                        break;
                    }
                }
                let y = found.ok_or_else(|| Error::InfeasibleSpec("no (J2^2) isometry".into()))?;
                b.carve(basis, y);
                next_pair += 2;
            }
            Block::Irreducible { degree: 2, mult: 1, paired: false } => {
                let want = match kind {
                    FormKind::Quadratic => Some(Sign::Minus),
                    _ => None,
                };
                let q = field.q() as u64;
                let pred = |y: &Matrix| {
                    (0..q as u32).all(|lam| field.rank(&field.mat_sub(y, &field.mat_scale(lam, &Matrix::identity(2)))) == 2)
                };
                if multiplicative_degree(q, r) != Some(2) && kind != FormKind::Unitary {
                    return Err(Error::InfeasibleSpec(format!("order {r} is not irreducible of degree 2 over GF({q})")));
                }
                b.special_plane(r, want, &pred, "an irreducible block")?;
            }
            ref other => {
                return Err(Error::InfeasibleSpec(format!("block {other:?} has no form-preserving realization here")));
            }
        }
    }

    // Labelled 1-eigenspace first, then the other scalar blocks; the largest takes the rest.
    if spec.discriminant.is_some() || spec.eigenspace_type.is_some() {
        let pos = scalars
            .iter()
            .position(|&(d, v, _)| d == 1 && v == 1)
            .ok_or_else(|| Error::InvalidSpec("labels need a 1-dimensional 1-eigenspace".into()))?;
        scalars.remove(pos);
        let whole = geo.standard_basis();
        let line = b
            .find_line(|v| {
                let qv = geo.quad(v);
                let disc_ok = match spec.discriminant {
                    Some(Discriminant::Square) => qv != 0 && field.is_square(qv),
                    Some(Discriminant::Nonsquare) => qv != 0 && !field.is_square(qv),
                    None => true,
                };
                let type_ok = match spec.eigenspace_type {
                    Some(t) => geo.witt_type(&geo.perp_within(&[v.to_vec()], &whole)).map(|s| s == t).unwrap_or(false),
                    None => true,
                };
                disc_ok && type_ok
            })
            .ok_or_else(|| Error::InfeasibleSpec(format!("no 1-space with the labels of {spec}")))?;
        b.carve(vec![line], Matrix::identity(1));
    }
    if let Some(big) = (0..scalars.len()).max_by_key(|&i| (scalars[i].0, scalars[i].2)) {
        let last = scalars.remove(big);
        for (d, v, _) in scalars {
            b.scalar_space(d, v, false)?;
        }
        b.scalar_space(last.0, last.1, true)?;
    } else if !b.remaining.is_empty() {
        return Err(invalid("block dimensions do not fill the space"));
    }
    b.assemble()
}

impl Builder<'_> {
    /// Standard basis vector eᵢ (only valid before non-standard pieces are carved).
    fn remaining_unit(&self, i: usize) -> Vec<u32> {
        (0..self.geo.n()).map(|j| u32::from(i == j)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geo(kind: FormKind, n: usize, q: u64, eps: Option<Sign>) -> Geometry {
        Geometry::standard(kind, n, Field::of_order(q).unwrap(), eps).unwrap()
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu_of_spec(&ElementSpec::transvection(6, 2)), 1);
        assert_eq!(nu_of_spec(&ElementSpec::scalar(5, 1, 3)), 1);
        assert_eq!(nu_of_spec(&ElementSpec::irreducible(6, 2, 3)), 2);
    }

    #[test]
    fn transvection_rank_one() {
        let g = geo(FormKind::Symplectic, 6, 2, None);
        let x = build_element(&ElementSpec::transvection(6, 2), &g).unwrap();
        let d = g.field.mat_sub(&x.matrix, &Matrix::identity(6));
        assert_eq!(g.field.rank(&d), 1);
    }

    #[test]
    fn unitary_scalar() {
        let g = geo(FormKind::Unitary, 4, 4, None);
        let x = build_element(&ElementSpec::scalar(4, 1, 3), &g).unwrap();
        assert!(g.check_form_preservation(&x));
        assert_eq!(g.field.semilinear_order(&x, false, 10), Some(3));
    }

    #[test]
    fn irreducible_fixed_space() {
        let g = geo(FormKind::Symplectic, 6, 2, None);
        let x = build_element(&ElementSpec::irreducible(6, 2, 3), &g).unwrap();
        let d = g.field.mat_sub(&x.matrix, &Matrix::identity(6));
        assert_eq!(6 - g.field.rank(&d), 4);
    }

    #[test]
    fn dickson_of_b1_and_a2() {
        let g = geo(FormKind::Quadratic, 6, 2, Some(Sign::Minus));
        let b1 = build_element(&ElementSpec::transvection(6, 2), &g).unwrap();
        assert_eq!(g.dickson_invariant(&b1).unwrap(), 1);
        let g8 = geo(FormKind::Quadratic, 8, 2, Some(Sign::Plus));
        let a2 = ElementSpec::new(vec![Block::Jordan { size: 2, mult: 2 }, Block::Jordan { size: 1, mult: 4 }], 2);
        let x = build_element(&a2, &g8).unwrap();
        assert_eq!(g8.dickson_invariant(&x).unwrap(), 0);
    }

    #[test]
    fn labelled_reflections() {
        let g = geo(FormKind::Quadratic, 7, 3, None);
        for s in [Sign::Plus, Sign::Minus] {
            let x = build_element(&ElementSpec::reflection(7).with_eigenspace_type(s), &g).unwrap();
            assert!(g.check_form_preservation(&x));
        }
        let g = geo(FormKind::Quadratic, 6, 3, Some(Sign::Plus));
        for d in [Discriminant::Square, Discriminant::Nonsquare] {
            build_element(&ElementSpec::reflection(6).with_discriminant(d), &g).unwrap();
        }
    }

    #[test]
    fn graph_automorphism_is_semilinear_involution() {
        for q in [2u64, 3] {
            let g = geo(FormKind::Unitary, 4, q * q, None);
            let t = build_element(&ElementSpec::automorphism(Automorphism::Graph, 2), &g).unwrap();
            assert_eq!(t.frob, 1);
        }
    }

    #[test]
    fn infeasible_odd_symplectic_block() {
        let g = geo(FormKind::Symplectic, 4, 2, None);
        let spec = ElementSpec::new(vec![Block::Irreducible { degree: 3, mult: 1, paired: false }, Block::Scalar { power: 0, mult: 1 }], 7);
        assert!(matches!(build_element(&spec, &g), Err(Error::InfeasibleSpec(_))));
    }
}
